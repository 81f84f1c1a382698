#ifndef POLYBOUND_UNI_FACTOR_HPP
#define POLYBOUND_UNI_FACTOR_HPP

// Complete factorization of univariate polynomials over Q and F_p.
//
// Over Q: clear denominators, squarefree split, then Kronecker's
// interpolation search on each squarefree part. Candidate values are chained
// through Newton divided differences, which must stay integral for an
// integer polynomial at integer nodes; that prunes most divisor tuples early.
//
// Over F_p: squarefree split (with p-th roots when the derivative vanishes),
// distinct-degree factorization, then Cantor-Zassenhaus equal-degree
// splitting with a fixed-seed generator.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "polybound/integer.hpp"
#include "polybound/unipoly.hpp"

namespace polybound {

inline constexpr std::int64_t kMaxFactorDegree = 24;

template <FieldElement E>
struct FactorMultiset {
  E unit;
  std::vector<std::pair<UniPoly<E>, unsigned>> factors;

  /// Number of irreducible factors counted with multiplicity.
  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& [f, m] : factors) n += m;
    return n;
  }
  UniPoly<E> product() const {
    UniPoly<E> acc = UniPoly<E>::constant(unit.field(), unit);
    for (const auto& [f, m] : factors) acc *= pow(f, m);
    return acc;
  }
};

namespace detail {

template <FieldElement E>
using FactorList = std::vector<std::pair<UniPoly<E>, unsigned>>;

/// Inverse of the Frobenius on coefficients: g with g(x)^p = f(x), given f' = 0.
template <FieldElement E>
UniPoly<E> pth_root(const UniPoly<E>& f) {
  const std::size_t p = f.field().characteristic();
  std::vector<E> c;
  for (std::size_t k = 0; k < f.size(); k += p) c.push_back(f.coefficients()[k]);
  return UniPoly<E>(f.field(), std::move(c));
}

/// f monic, deg >= 1 -> pairs (s_i, i) with f = prod s_i^i, s_i squarefree and coprime.
template <FieldElement E>
FactorList<E> squarefree_decomposition(const UniPoly<E>& f) {
  FactorList<E> out;
  if (f.is_constant()) return out;
  const UniPoly<E> df = f.derivative();
  const unsigned p = f.field().characteristic();
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(std::move(g), m * p);
    return out;
  }
  UniPoly<E> c = gcd_uni(f, df);
  UniPoly<E> w = *div_exact(f, c);
  unsigned i = 1;
  while (!w.is_constant()) {
    UniPoly<E> y = gcd_uni(w, c);
    UniPoly<E> z = *div_exact(w, y);
    if (!z.is_constant()) out.emplace_back(z.monic(), i);
    ++i;
    w = std::move(y);
    c = *div_exact(c, w);
  }
  if (!c.is_constant()) {
    // Only in positive characteristic: what remains is a p-th power.
    for (auto& [g, m] : squarefree_decomposition(pth_root(c.monic()))) out.emplace_back(std::move(g), m * p);
  }
  return out;
}

template <FieldElement E>
UniPoly<E> powmod(UniPoly<E> base, const mpz_class& e, const UniPoly<E>& mod) {
  UniPoly<E> acc = UniPoly<E>::one(mod.field());
  base = base % mod;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t b = bits; b-- > 0;) {
    acc = (acc * acc) % mod;
    if (mpz_tstbit(e.get_mpz_t(), b)) acc = (acc * base) % mod;
  }
  return acc;
}

/// f monic squarefree -> (g_d, d): g_d is the product of the degree-d irreducible factors.
template <FieldElement E>
std::vector<std::pair<UniPoly<E>, std::size_t>> distinct_degree(UniPoly<E> f) {
  std::vector<std::pair<UniPoly<E>, std::size_t>> out;
  const FieldDescriptor& fd = f.field();
  const mpz_class p = fd.characteristic();
  const UniPoly<E> x = UniPoly<E>::x(fd);
  UniPoly<E> h = x;
  for (std::size_t d = 1; f.degree() >= Degree(static_cast<std::int64_t>(2 * d)); ++d) {
    h = powmod(h, p, f);
    UniPoly<E> g = gcd_uni(f, h - x);
    if (!g.is_one()) {
      f = *div_exact(f, g);
      h = h % f;
      out.emplace_back(std::move(g), d);
    }
  }
  if (!f.is_constant()) out.emplace_back(f.monic(), static_cast<std::size_t>(f.degree().value()));
  return out;
}

/// f monic squarefree with all irreducible factors of degree d.
template <FieldElement E>
void equal_degree(const UniPoly<E>& f, std::size_t d, std::mt19937_64& rng, std::vector<UniPoly<E>>& out) {
  const auto n = static_cast<std::size_t>(f.degree().value());
  if (n == d) {
    out.push_back(f);
    return;
  }
  const FieldDescriptor& fd = f.field();
  const std::uint32_t p = fd.characteristic();
  mpz_class half;
  if (p != 2) {
    mpz_ui_pow_ui(half.get_mpz_t(), p, d);
    half = (half - 1) / 2;
  }
  std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
  for (;;) {
    std::vector<E> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(E::from_integer(fd, coin(rng)));
    UniPoly<E> a(fd, std::move(c));
    if (a.is_constant()) continue;
    UniPoly<E> b(fd);
    if (p == 2) {
      UniPoly<E> t = a % f;  // trace: a + a^2 + ... + a^(2^(d-1))
      b = t;
      for (std::size_t i = 1; i < d; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = powmod(a, half, f) - UniPoly<E>::one(fd);
    }
    if (b.is_zero()) continue;
    UniPoly<E> g = gcd_uni(f, b);
    if (g.is_constant() || g.degree() == f.degree()) continue;
    equal_degree(g, d, rng, out);
    equal_degree(*div_exact(f, g), d, rng, out);
    return;
  }
}

template <FieldElement E>
FactorList<E> factor_monic_fp(const UniPoly<E>& f) {
  FactorList<E> out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [g, d] : distinct_degree(part)) {
      std::vector<UniPoly<E>> pieces;
      equal_degree(g, d, rng, pieces);
      for (auto& q : pieces) out.emplace_back(std::move(q), mult);
    }
  }
  return out;
}

// ---- integer polynomials for the Q route ----

using ZPoly = std::vector<mpz_class>;  // constant term first, no trailing zeros

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class zeval(const ZPoly& p, const mpz_class& a) {
  mpz_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * a + *it;
  return acc;
}

inline mpz_class zcontent(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

/// Exact quotient a / b in Z[x], or nullopt.
inline std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1);
  const mpz_class& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = rem[k + b.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    q[k] = top / lb;
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q[k] * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return q;
}

/// Primitive integer multiple of f with positive leading coefficient.
inline ZPoly to_primitive_integer(const UniPoly<Rational>& f) {
  mpz_class l = 1;
  for (const auto& c : f.coefficients()) l = lcm(l, c.denominator());
  ZPoly z;
  for (const auto& c : f.coefficients()) z.push_back(c.numerator() * (l / c.denominator()));
  const mpz_class g = zcontent(z);
  for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

inline UniPoly<Rational> from_integer_poly(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return UniPoly<Rational>(FieldDescriptor::rationals(), std::move(c)).monic();
}

class KroneckerSearch {
 public:
  KroneckerSearch(const ZPoly& f, std::size_t d) : f_(f), d_(d) {}

  /// A primitive factor of exact degree d with positive leading coefficient.
  std::optional<ZPoly> run() {
    // Candidate nodes 0, 1, -1, 2, -2, ...
    std::vector<std::pair<std::size_t, long>> pool;  // (divisor count, node)
    const long reach = static_cast<long>(d_) + 3;
    for (long a = 0; a <= reach; ++a) {
      for (long node : {a, -a}) {
        if (a == 0 && node != 0) continue;
        const mpz_class v = zeval(f_, node);
        if (v == 0) {
          if (d_ == 1) return ZPoly{mpz_class(-node), mpz_class(1)};
          continue;
        }
        pool.emplace_back(divisor_count(v), node);
        if (node == 0) break;
      }
    }
    if (pool.size() < d_ + 1) return std::nullopt;
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k <= d_; ++k) {
      nodes_.push_back(pool[k].second);
      const mpz_class v = zeval(f_, nodes_.back());
      std::vector<mpz_class> opts;
      for (const auto& dv : positive_divisors(v)) {
        opts.push_back(dv);
        if (k > 0) opts.push_back(-dv);  // fix the sign of the factor at the first node
      }
      options_.push_back(std::move(opts));
    }
    for (std::size_t k = d_ + 1; k < pool.size(); ++k) extra_nodes_.push_back(pool[k].second);
    newton_.assign(d_ + 1, 0);
    return search(0);
  }

 private:
  std::optional<ZPoly> search(std::size_t k) {
    // Newton-form value of the partial interpolant at nodes_[k], and the node product.
    mpz_class partial = 0, prod = 1;
    for (std::size_t m = 0; m < k; ++m) {
      partial += newton_[m] * prod;
      prod *= nodes_[k] - nodes_[m];
    }
    for (const auto& value : options_[k]) {
      mpz_class num = value - partial;
      if (!mpz_divisible_p(num.get_mpz_t(), prod.get_mpz_t())) continue;
      newton_[k] = num / prod;
      if (k < d_) {
        if (auto found = search(k + 1)) return found;
        continue;
      }
      if (newton_[d_] == 0) continue;
      if (!mpz_divisible_p(f_.back().get_mpz_t(), newton_[d_].get_mpz_t())) continue;
      if (auto g = accept()) return g;
    }
    return std::nullopt;
  }

  std::optional<ZPoly> accept() const {
    // Expand sum_k c_k prod_{m<k} (x - a_m).
    ZPoly g(d_ + 1, 0), basis{1};
    for (std::size_t k = 0; k <= d_; ++k) {
      for (std::size_t i = 0; i < basis.size(); ++i) g[i] += newton_[k] * basis[i];
      ZPoly next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * nodes_[k];
      }
      basis = std::move(next);
    }
    ztrim(g);
    if (g.size() != d_ + 1 || zcontent(g) != 1) return std::nullopt;
    if (g.back() < 0)
      for (auto& c : g) c = -c;
    for (long a : extra_nodes_) {
      const mpz_class ga = zeval(g, a);
      if (ga == 0) return std::nullopt;
      const mpz_class fa = zeval(f_, a);
      if (!mpz_divisible_p(fa.get_mpz_t(), ga.get_mpz_t())) return std::nullopt;
    }
    if (!zdiv_exact(f_, g)) return std::nullopt;
    return g;
  }

  const ZPoly& f_;
  std::size_t d_;
  std::vector<long> nodes_, extra_nodes_;
  std::vector<std::vector<mpz_class>> options_;
  std::vector<mpz_class> newton_;
};

/// f primitive, squarefree, positive leading coefficient -> irreducible factors.
inline std::vector<ZPoly> kronecker_factor(ZPoly f) {
  std::vector<ZPoly> out;
  std::size_t d = 1;
  while (f.size() - 1 >= 2 * d) {
    if (auto g = KroneckerSearch(f, d).run()) {
      f = *zdiv_exact(f, *g);
      out.push_back(std::move(*g));
    } else {
      ++d;
    }
  }
  if (f.size() >= 2) out.push_back(std::move(f));
  return out;
}

template <FieldElement E>
FactorMultiset<E> factor_unbounded(const UniPoly<E>& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "factor_uni of 0");
  FactorMultiset<E> out{p.leading(), {}};
  const UniPoly<E> monic = p.monic();
  if constexpr (std::is_same_v<E, Rational>) {
    for (const auto& [part, mult] : squarefree_decomposition(monic))
      for (const auto& z : kronecker_factor(to_primitive_integer(part)))
        out.factors.emplace_back(from_integer_poly(z), mult);
  } else {
    out.factors = factor_monic_fp(monic);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

}  // namespace detail

/// Complete factorization: unit * prod factor^mult, factors monic,
/// irreducible, distinct and sorted. Degree is capped at 24.
template <FieldElement E>
FactorMultiset<E> factor_uni(const UniPoly<E>& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "factor_uni of 0");
  if (p.degree() > Degree(kMaxFactorDegree))
    throw Error(Errc::DegreeCapExceeded, "degree " + p.degree().to_string() + " exceeds 24");
  return detail::factor_unbounded(p);
}

/// Number of irreducible factors with multiplicity; 0 for nonzero constants.
template <FieldElement E>
std::size_t nu_count(const UniPoly<E>& p) { return factor_uni(p).count(); }

template <FieldElement E>
std::int64_t smallest_irreducible_degree(const UniPoly<E>& p) {
  if (p.degree() < Degree(1)) throw Error(Errc::ConstantInput, "no irreducible factor of a constant");
  const auto fm = factor_uni(p);
  return fm.factors.front().first.degree().value();  // sorted by degree
}

}  // namespace polybound

#endif  // POLYBOUND_UNI_FACTOR_HPP
