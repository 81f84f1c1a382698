#ifndef POLYBOUND_ORACLE_HPP
#define POLYBOUND_ORACLE_HPP

// Brute-force factorization of small bivariate polynomials over F_p, used as
// ground truth for the criteria.
//
// The primary engine enumerates candidate divisors g of f in a fixed order:
// y-degree e = 1, 2, ..., n/2; lowest coefficient a scalar multiple of a divisor
// of a_0; leading coefficient a monic divisor of a_n; middle coefficients all
// polynomials of x-degree <= deg_x f. Divisibility is decided by solving for
// the cofactor from the top down with exact divisions in F_p[x]. The first
// divisor found has minimal y-degree and is therefore irreducible.
//
// Inputs with larger x-degree go through a second engine: Kronecker
// substitution y -> x^N turns f into a univariate polynomial whose complete
// factorization is split into subsets; each subset product is mapped back
// and tried as a divisor.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polybound/bipoly.hpp"
#include "polybound/uni_factor.hpp"

namespace polybound {

struct OracleBudget {
  std::uint32_t max_p = 7;
  std::int64_t max_deg_y = 6;
  std::int64_t max_deg_x = 4;
  std::int64_t max_deg_x_substitution = 16;
  std::size_t max_subset_bits = 20;

  /// "p,dy,dx" overrides the first three caps.
  static OracleBudget from_string(const std::string& text) {
    OracleBudget b;
    unsigned long p = 0;
    long dy = 0, dx = 0;
    if (std::sscanf(text.c_str(), "%lu,%ld,%ld", &p, &dy, &dx) != 3 || p < 2 || dy < 1 || dx < 0)
      throw Error(Errc::NotSupported, "budget override must look like p,dy,dx: " + text);
    b.max_p = static_cast<std::uint32_t>(p);
    b.max_deg_y = dy;
    b.max_deg_x = dx;
    b.max_deg_x_substitution = std::max<std::int64_t>(b.max_deg_x_substitution, dx);
    return b;
  }
};

template <FieldElement E>
struct BivariateFactorization {
  UniPoly<E> content;  // monic
  std::vector<std::pair<BiPoly<E>, unsigned>> factors;
  E unit;

  BiPoly<E> product() const {
    BiPoly<E> acc = BiPoly<E>::from_uni(content.scaled(unit));
    for (const auto& [g, m] : factors) acc *= pow(g, m);
    return acc;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
  }
};

namespace detail {

/// Scales g so that its leading coefficient in y is monic in x.
template <FieldElement E>
BiPoly<E> normalize_bi(const BiPoly<E>& g) {
  const E lc = leading_y(g).leading();
  return g.scaled(UniPoly<E>::constant(g.field(), lc.inverse()));
}

/// Cofactor h with f = g h, or nullopt. Works down from the top y-coefficient.
template <FieldElement E>
std::optional<BiPoly<E>> divide_bi(const BiPoly<E>& f, const BiPoly<E>& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return BiPoly<E>(f.field());
  if (f.size() < g.size()) return std::nullopt;
  const std::size_t dg = g.size() - 1;
  const UniPoly<E> lg = leading_y(g);
  std::vector<UniPoly<E>> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<UniPoly<E>> h(f.size() - dg, UniPoly<E>(f.field()));
  for (std::size_t k = h.size(); k-- > 0;) {
    auto q = div_exact(rem[k + dg], lg);
    if (!q) return std::nullopt;
    h[k] = std::move(*q);
    if (h[k].is_zero()) continue;
    for (std::size_t i = 0; i <= dg; ++i)
      if (!g.coeff(i).is_zero()) rem[k + i] -= h[k] * g.coeff(i);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return BiPoly<E>(f.field(), std::move(h));
}

/// All polynomials over F_p of degree <= d (including 0), in a fixed order.
template <FieldElement E>
std::vector<UniPoly<E>> all_polys_up_to(const FieldDescriptor& fd, std::int64_t d) {
  const std::uint32_t p = fd.characteristic();
  std::vector<UniPoly<E>> out;
  std::vector<std::uint32_t> digits(static_cast<std::size_t>(d + 1), 0);
  for (;;) {
    std::vector<E> c;
    for (auto v : digits) c.push_back(E::from_integer(fd, v));
    out.emplace_back(fd, std::move(c));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a, b); });
  return out;
}

/// Monic divisors of a nonzero polynomial, from its factorization.
template <FieldElement E>
std::vector<UniPoly<E>> monic_divisors(const UniPoly<E>& a) {
  std::vector<UniPoly<E>> divs{UniPoly<E>::one(a.field())};
  for (const auto& [q, m] : detail::factor_unbounded(a).factors) {
    const std::size_t base = divs.size();
    UniPoly<E> qk = UniPoly<E>::one(a.field());
    for (unsigned k = 1; k <= m; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * qk);
    }
  }
  std::sort(divs.begin(), divs.end(), [](const auto& x, const auto& y) { return poly_less(x, y); });
  return divs;
}

/// Smallest-y-degree divisor of a content-free f with 1 <= deg_y < deg_y f, by enumeration.
template <FieldElement E>
std::optional<BiPoly<E>> find_divisor_enumerate(const BiPoly<E>& f) {
  const FieldDescriptor& fd = f.field();
  const std::size_t n = f.size() - 1;
  const std::int64_t dx = f.deg_x().value();
  const auto lows = monic_divisors(f.coeff(0));
  const auto highs = monic_divisors(leading_y(f));
  const auto middles = all_polys_up_to<E>(fd, dx);
  std::vector<E> scalars;
  for (std::uint32_t s = 1; s < fd.characteristic(); ++s) scalars.push_back(E::from_integer(fd, s));

  for (std::size_t e = 1; 2 * e <= n; ++e) {
    std::vector<UniPoly<E>> g(e + 1, UniPoly<E>(fd));
    std::vector<std::size_t> idx(e > 1 ? e - 1 : 0, 0);
    for (const auto& hi : highs) {
      g[e] = hi;
      for (const auto& lo : lows)
        for (const auto& s : scalars) {
          g[0] = lo.scaled(s);
          std::fill(idx.begin(), idx.end(), 0);
          for (;;) {
            for (std::size_t k = 0; k < idx.size(); ++k) g[k + 1] = middles[idx[k]];
            BiPoly<E> cand(fd, g);
            if (divide_bi(f, cand)) return normalize_bi(cand);
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == middles.size()) idx[k++] = 0;
            if (k == idx.size()) break;
          }
        }
    }
  }
  return std::nullopt;
}

/// Smallest-y-degree divisor of a content-free f, via Kronecker substitution.
template <FieldElement E>
std::optional<BiPoly<E>> find_divisor_substitution(const BiPoly<E>& f, std::size_t max_subset_bits) {
  const FieldDescriptor& fd = f.field();
  const std::size_t n = f.size() - 1;
  const auto N = static_cast<std::size_t>(f.deg_x().value()) + 1;
  // u(x) = f(x, x^N)
  std::vector<E> u(n * N + N, field_zero<E>(fd));
  for (std::size_t i = 0; i <= n; ++i) {
    const UniPoly<E> a = f.coeff(i);
    const auto c = a.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) u[i * N + k] += c[k];
  }
  const auto fm = detail::factor_unbounded(UniPoly<E>(fd, std::move(u)));
  std::vector<UniPoly<E>> atoms;  // with multiplicity
  for (const auto& [q, m] : fm.factors)
    for (unsigned k = 0; k < m; ++k) atoms.push_back(q);
  if (atoms.size() > max_subset_bits)
    throw Error(Errc::BudgetExceeded, "substitution image has " + std::to_string(atoms.size()) + " factors");

  // Subsets ordered by total degree keep the search small for small factors.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << atoms.size()); ++m) masks.push_back(m);
  auto mdeg = [&](std::uint64_t m) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (m >> k & 1) d += atoms[k].degree().value();
    return d;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](auto a, auto b) { return mdeg(a) < mdeg(b); });

  std::optional<BiPoly<E>> best;
  for (auto m : masks) {
    UniPoly<E> v = UniPoly<E>::one(fd);
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (m >> k & 1) v *= atoms[k];
    // Inverse substitution: digit i of v in base x^N is the y^i coefficient.
    std::vector<UniPoly<E>> g;
    const auto vc = v.coefficients();
    for (std::size_t i = 0; i * N < vc.size(); ++i) {
      const std::size_t end = std::min(vc.size(), (i + 1) * N);
      g.emplace_back(fd, std::vector<E>(vc.begin() + static_cast<std::ptrdiff_t>(i * N),
                                        vc.begin() + static_cast<std::ptrdiff_t>(end)));
    }
    BiPoly<E> cand(fd, std::move(g));
    if (cand.deg_y() < Degree(1) || cand.deg_y() >= f.deg_y()) continue;
    if (best && cand.deg_y() >= best->deg_y()) continue;
    if (divide_bi(f, cand)) best = normalize_bi(cand);
  }
  return best;
}

}  // namespace detail

/// Factorization of f over F_p into content, irreducible factors of positive
/// y-degree (normalized and sorted) and a unit.
template <FieldElement E>
BivariateFactorization<E> oracle_factor_fp(const BiPoly<E>& f, const OracleBudget& budget = {}) {
  const FieldDescriptor& fd = f.field();
  if (!fd.is_prime_field()) throw Error(Errc::NotSupported, "the oracle works over prime fields only");
  if (fd.characteristic() > budget.max_p)
    throw Error(Errc::FieldTooLarge, "oracle budget allows p <= " + std::to_string(budget.max_p));
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "oracle of 0");
  if (f.deg_y() > Degree(budget.max_deg_y))
    throw Error(Errc::BudgetExceeded, "oracle budget allows deg_y <= " + std::to_string(budget.max_deg_y));
  const bool enumerate = f.deg_x() <= Degree(budget.max_deg_x);
  if (!enumerate && f.deg_x() > Degree(budget.max_deg_x_substitution))
    throw Error(Errc::BudgetExceeded,
                "oracle budget allows deg_x <= " + std::to_string(budget.max_deg_x_substitution));

  const UniPoly<E> content = content_y(f);
  auto [k, rest] = strip_y_power(*f.divided_exact(content));
  BivariateFactorization<E> out{content, {}, field_one<E>(fd)};
  std::vector<BiPoly<E>> found;
  for (std::size_t i = 0; i < k; ++i) found.push_back(BiPoly<E>::y_power(fd, 1));
  while (rest.deg_y() >= Degree(1)) {
    auto g = enumerate ? detail::find_divisor_enumerate(rest)
                       : detail::find_divisor_substitution(rest, budget.max_subset_bits);
    if (!g) g = detail::normalize_bi(rest);
    found.push_back(*g);
    rest = *detail::divide_bi(rest, *g);
  }
  out.unit = rest.coeff(0).coeff(0);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return poly_less(a, b); });
  for (auto& g : found) {
    if (!out.factors.empty() && out.factors.back().first == g) ++out.factors.back().second;
    else out.factors.emplace_back(std::move(g), 1);
  }
  return out;
}

/// Irreducible factors of positive y-degree, with multiplicity; content excluded.
template <FieldElement E>
std::size_t oracle_count(const BiPoly<E>& f, const OracleBudget& budget = {}) {
  return oracle_factor_fp(f, budget).count();
}

/// True iff the product of the claimed factors equals f exactly.
template <FieldElement E>
bool verify_product(const BiPoly<E>& f, const std::vector<std::pair<BiPoly<E>, unsigned>>& claimed) {
  BiPoly<E> acc = BiPoly<E>::from_uni(UniPoly<E>::one(f.field()));
  for (const auto& [g, m] : claimed) {
    if (!(g.field() == f.field())) return false;
    acc *= pow(g, m);
  }
  return acc == f;
}

/// Reduction of an integral polynomial modulo p; nullopt if a denominator is divisible by p.
inline std::optional<BiPoly<PrimeFieldElem>> reduce_mod_p(const BiPoly<Rational>& f, const FieldDescriptor& fp) {
  std::vector<UniPoly<PrimeFieldElem>> out;
  for (const auto& a : f.coefficients()) {
    std::vector<PrimeFieldElem> c;
    for (const auto& r : a.coefficients()) {
      const auto den = PrimeFieldElem::from_integer(fp, r.denominator());
      if (den.is_zero()) return std::nullopt;
      c.push_back(PrimeFieldElem::from_integer(fp, r.numerator()) / den);
    }
    out.emplace_back(fp, std::move(c));
  }
  return BiPoly<PrimeFieldElem>(fp, std::move(out));
}

}  // namespace polybound

#endif  // POLYBOUND_ORACLE_HPP
