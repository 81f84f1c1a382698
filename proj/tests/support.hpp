#ifndef POLYBOUND_TESTS_SUPPORT_HPP
#define POLYBOUND_TESTS_SUPPORT_HPP

// Shared test helpers: seeded generators and slow reference implementations
// that share no code with the algorithms under test.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "polybound/polybound.hpp"

namespace pbtest {

using namespace polybound;
using Fp = PrimeFieldElem;

inline const FieldDescriptor kQ = FieldDescriptor::rationals();

inline std::vector<std::string> xy() { return {"x", "y"}; }

inline BiPoly<Rational> bq(const std::string& text) { return parse_bipoly<Rational>(text, kQ, xy()); }
inline BiPoly<Fp> bp(const std::string& text, std::uint32_t p) {
  return parse_bipoly<Fp>(text, FieldDescriptor::prime(p), xy());
}
inline UniPoly<Rational> uq(const std::string& text) { return parse_unipoly<Rational>(text, kQ); }
inline UniPoly<Fp> up(const std::string& text, std::uint32_t p) {
  return parse_unipoly<Fp>(text, FieldDescriptor::prime(p));
}

/// Random polynomial of degree exactly deg (deg < 0 gives 0) with entries in [-bound, bound].
template <FieldElement E>
UniPoly<E> random_uni(std::mt19937_64& rng, const FieldDescriptor& fd, int deg, long bound = 3) {
  if (deg < 0) return UniPoly<E>(fd);
  std::uniform_int_distribution<long> coef(-bound, bound);
  for (;;) {
    std::vector<E> c;
    for (int k = 0; k <= deg; ++k) c.push_back(E::from_integer(fd, coef(rng)));
    UniPoly<E> p(fd, std::move(c));
    if (p.degree() == Degree(deg)) return p;
  }
}

/// Random bivariate polynomial over F_p: deg_y exactly n, deg_x <= dx, a_0 and a_n nonzero.
/// Coefficient degrees are drawn independently so that degree-driven criteria fire often.
inline BiPoly<Fp> random_bi_fp(std::mt19937_64& rng, const FieldDescriptor& fd, int n, int dx) {
  std::uniform_int_distribution<int> d(-1, dx);
  for (;;) {
    std::vector<UniPoly<Fp>> a;
    for (int i = 0; i <= n; ++i) {
      int di = d(rng);
      if ((i == 0 || i == n) && di < 0) di = 0;
      a.push_back(random_uni<Fp>(rng, fd, di, static_cast<long>(fd.characteristic())));
    }
    BiPoly<Fp> f(fd, std::move(a));
    if (f.deg_y() == Degree(n) && !f.coeff(0).is_zero()) return f;
  }
}

/// Content-free random polynomial over F_p with 2 <= deg_y <= max_n.
inline BiPoly<Fp> random_content_free(std::mt19937_64& rng, const FieldDescriptor& fd, int max_n, int dx) {
  std::uniform_int_distribution<int> n(2, max_n);
  for (;;) {
    BiPoly<Fp> f = random_bi_fp(rng, fd, n(rng), dx);
    if (content_y(f).is_constant()) return f;
  }
}

/// Random sparse polynomial: up to 6 terms, exponents <= 4, small coefficients
/// (fractions with denominators <= 5 over Q).
template <FieldElement E>
MultiPoly<E> random_multi(std::mt19937_64& rng, const FieldDescriptor& fd, int arity) {
  std::uniform_int_distribution<int> terms(0, 6), expo(0, 4);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  MultiPoly<E> acc(fd);
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    E c = E::from_integer(fd, num(rng));
    if constexpr (std::is_same_v<E, Rational>) c = c / Rational(den(rng));
    MultiPoly<E> mono = MultiPoly<E>::constant(fd, c);
    for (int v = 1; v <= arity; ++v) mono = mono * pow(MultiPoly<E>::variable(fd, v), expo(rng));
    acc = acc + mono;
  }
  return acc;
}

/// Every monic polynomial of degree d over F_p, in counting order.
inline std::vector<UniPoly<Fp>> monic_polys_of_degree(const FieldDescriptor& fd, int d) {
  const std::uint32_t p = fd.characteristic();
  std::vector<UniPoly<Fp>> out;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(d), 0);
  for (;;) {
    std::vector<Fp> c;
    for (auto v : digits) c.push_back(Fp::from_integer(fd, v));
    c.push_back(Fp::from_integer(fd, 1));
    out.emplace_back(fd, std::move(c));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

/// Schoolbook long division over F_p; true iff b divides a.
inline bool divides_slow(const UniPoly<Fp>& b, UniPoly<Fp> a) {
  const auto db = static_cast<std::size_t>(b.degree().value());
  const Fp inv = b.leading().inverse();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const auto da = static_cast<std::size_t>(a.degree().value());
    a = a - b.scaled(a.leading() * inv).shifted(da - db);
  }
  return a.is_zero();
}

/// Number of irreducible factors over F_p with multiplicity, by trial division
/// with every monic polynomial in increasing degree.
inline std::size_t trial_division_count(UniPoly<Fp> a) {
  std::size_t count = 0;
  for (int d = 1; a.degree() >= Degree(2 * d); ++d) {
    for (const auto& m : monic_polys_of_degree(a.field(), d)) {
      while (divides_slow(m, a)) {
        a = divmod(a, m).first;
        ++count;
      }
    }
  }
  if (a.degree() >= Degree(1)) ++count;
  return count;
}

inline bool irreducible_fp_slow(const UniPoly<Fp>& a) {
  return a.degree() >= Degree(1) && trial_division_count(a) == 1;
}

/// Lagrange interpolation over Q through (nodes[k], values[k]).
inline UniPoly<Rational> lagrange(const std::vector<long>& nodes, const std::vector<mpz_class>& values) {
  UniPoly<Rational> acc(kQ);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    UniPoly<Rational> basis = UniPoly<Rational>::one(kQ);
    Rational denom(1);
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (m == k) continue;
      basis = basis * UniPoly<Rational>(kQ, {-nodes[m], 1});
      denom = denom * Rational(nodes[k] - nodes[m]);
    }
    acc = acc + basis.scaled(Rational(values[k]) / denom);
  }
  return acc;
}

/// Exhaustive Kronecker search without pruning: does a (integer coefficients)
/// have a factor of degree d over Q?
inline bool has_factor_of_degree_naive(const UniPoly<Rational>& a, int d) {
  std::vector<long> nodes;
  std::vector<std::vector<mpz_class>> options;
  for (long t = 0; static_cast<int>(nodes.size()) <= d; t = t > 0 ? -t : -t + 1) {
    const Rational v = a.eval(Rational(t));
    if (v.is_zero()) return true;  // linear factor x - t
    nodes.push_back(t);
    std::vector<mpz_class> opts;
    for (const auto& k : polybound::detail::positive_divisors(v.numerator())) {
      opts.push_back(k);
      opts.push_back(-k);
    }
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> idx(options.size(), 0);
  for (;;) {
    std::vector<mpz_class> vals;
    for (std::size_t k = 0; k < idx.size(); ++k) vals.push_back(options[k][idx[k]]);
    const UniPoly<Rational> g = lagrange(nodes, vals);
    if (g.degree() == Degree(d) && divmod(a, g).second.is_zero()) return true;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) idx[k++] = 0;
    if (k == idx.size()) return false;
  }
}

/// Integer multiple of a with coprime integer coefficients.
inline UniPoly<Rational> integer_primitive(const UniPoly<Rational>& a) {
  mpz_class l = 1, g = 0;
  for (const auto& c : a.coefficients()) l = lcm(l, c.denominator());
  for (const auto& c : a.coefficients()) g = gcd(g, c.numerator() * (l / c.denominator()));
  return a.scaled(Rational(l) / Rational(g));
}

/// Irreducibility over Q of an integer polynomial: an irreducible reduction
/// modulo a prime not dividing the leading coefficient is a proof; otherwise
/// fall back to the exhaustive search.
inline bool irreducible_q_slow(const UniPoly<Rational>& a) {
  if (a.degree() < Degree(1)) return false;
  if (a.degree() == Degree(1)) return true;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    const FieldDescriptor fd = FieldDescriptor::prime(p);
    std::vector<Fp> c;
    bool ok = true;
    for (const auto& r : a.coefficients()) {
      if (mpz_divisible_ui_p(r.denominator().get_mpz_t(), p)) {
        ok = false;
        break;
      }
      c.push_back(Fp::from_integer(fd, r.numerator()) / Fp::from_integer(fd, r.denominator()));
    }
    if (!ok) continue;
    const UniPoly<Fp> red(fd, std::move(c));
    if (red.degree() != a.degree()) continue;
    if (irreducible_fp_slow(red)) return true;
  }
  const UniPoly<Rational> z = integer_primitive(a);
  for (int d = 1; 2 * d <= a.degree().value(); ++d)
    if (has_factor_of_degree_naive(z, d)) return false;
  return true;
}

/// f1 = (p + x^n + y^n)(q + x^n + y^n), written out coefficient by coefficient.
inline BiPoly<Rational> f1_expanded(long p, long q, std::size_t n) {
  std::vector<UniPoly<Rational>> a(2 * n + 1, UniPoly<Rational>(kQ));
  std::vector<Rational> a0(2 * n + 1, Rational(0)), an(n + 1, Rational(0));
  a0[0] = Rational(p * q);
  a0[n] = Rational(p + q);
  a0[2 * n] = Rational(1);
  an[0] = Rational(p + q);
  an[n] = Rational(2);
  a[0] = UniPoly<Rational>(kQ, a0);
  a[n] = UniPoly<Rational>(kQ, an);
  a[2 * n] = UniPoly<Rational>::one(kQ);
  return BiPoly<Rational>(kQ, std::move(a));
}

/// f3 = (r + x^2)^4 + 2 (p + x^3)(r + x^2)^2 y^n + (p + x^3)^2 y^(2n), written out.
inline BiPoly<Rational> f3_expanded(long r, long p, std::size_t n) {
  std::vector<UniPoly<Rational>> a(2 * n + 1, UniPoly<Rational>(kQ));
  // (r + x^2)^4 = r^4 + 4 r^3 x^2 + 6 r^2 x^4 + 4 r x^6 + x^8
  a[0] = UniPoly<Rational>(kQ, {r * r * r * r, 0, 4 * r * r * r, 0, 6 * r * r, 0, 4 * r, 0, 1});
  // 2 (p + x^3)(r^2 + 2 r x^2 + x^4) = 2 p r^2 + 4 p r x^2 + 2 r^2 x^3 + 2 p x^4 + 4 r x^5 + 2 x^7
  a[n] = UniPoly<Rational>(kQ, {2 * p * r * r, 0, 4 * p * r, 2 * r * r, 2 * p, 4 * r, 0, 2});
  // (p + x^3)^2 = p^2 + 2 p x^3 + x^6
  a[2 * n] = UniPoly<Rational>(kQ, {p * p, 0, 0, 2 * p, 0, 0, 1});
  return BiPoly<Rational>(kQ, std::move(a));
}

}  // namespace pbtest

#endif  // POLYBOUND_TESTS_SUPPORT_HPP
