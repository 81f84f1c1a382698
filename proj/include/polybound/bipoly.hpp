#ifndef POLYBOUND_BIPOLY_HPP
#define POLYBOUND_BIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polybound/unipoly.hpp"

namespace polybound {

/// f = a_0(x) + a_1(x) y + ... + a_n(x) y^n, stored as the list of a_i.
/// The zero polynomial has an empty list; otherwise a_n is nonzero.
template <FieldElement E>
class BiPoly {
 public:
  using element_type = E;
  using coeff_type = UniPoly<E>;

  explicit BiPoly(FieldDescriptor field) : field_(field) {}
  BiPoly(FieldDescriptor field, std::vector<UniPoly<E>> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& a : coeffs_) require_same_field(field_, a.field());
    trim();
  }

  static BiPoly from_uni(const UniPoly<E>& a) { return BiPoly(a.field(), std::vector<UniPoly<E>>{a}); }
  static BiPoly y_power(FieldDescriptor field, std::size_t k) {
    std::vector<UniPoly<E>> v(k + 1, UniPoly<E>(field));
    v[k] = UniPoly<E>::one(field);
    return BiPoly(field, std::move(v));
  }

  const FieldDescriptor& field() const noexcept { return field_; }
  std::span<const UniPoly<E>> coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of y^i (zero beyond the degree).
  UniPoly<E> coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : UniPoly<E>(field_); }

  Degree deg_y() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  /// Degree in x: the largest coefficient degree.
  Degree deg_x() const noexcept {
    Degree d;
    for (const auto& a : coeffs_) d = std::max(d, a.degree());
    return d;
  }

  /// Multiplies every coefficient by c.
  BiPoly scaled(const UniPoly<E>& c) const {
    std::vector<UniPoly<E>> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(a * c);
    return BiPoly(field_, std::move(v));
  }
  /// Divides every coefficient by c; nullopt unless all divisions are exact.
  std::optional<BiPoly> divided_exact(const UniPoly<E>& c) const {
    std::vector<UniPoly<E>> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) {
      auto q = div_exact(a, c);
      if (!q) return std::nullopt;
      v.push_back(std::move(*q));
    }
    return BiPoly(field_, std::move(v));
  }
  /// Multiplies by y^k.
  BiPoly shifted_y(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<UniPoly<E>> v(k, UniPoly<E>(field_));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return BiPoly(field_, std::move(v));
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    require_same_field(a.field_, b.field_);
    std::vector<UniPoly<E>> v(std::max(a.size(), b.size()), UniPoly<E>(a.field_));
    for (std::size_t i = 0; i < a.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] += b.coeffs_[i];
    return BiPoly(a.field_, std::move(v));
  }
  friend BiPoly operator-(const BiPoly& a) {
    std::vector<UniPoly<E>> v;
    for (const auto& c : a.coeffs_) v.push_back(-c);
    return BiPoly(a.field_, std::move(v));
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
    std::vector<UniPoly<E>> v(a.size() + b.size() - 1, UniPoly<E>(a.field_));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b.coeffs_[j].is_zero()) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return BiPoly(a.field_, std::move(v));
  }
  BiPoly& operator+=(const BiPoly& b) { return *this = *this + b; }
  BiPoly& operator*=(const BiPoly& b) { return *this = *this * b; }

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  FieldDescriptor field_;
  std::vector<UniPoly<E>> coeffs_;
};

template <FieldElement E>
Degree deg_y(const BiPoly<E>& f) noexcept { return f.deg_y(); }

template <FieldElement E>
BiPoly<E> pow(const BiPoly<E>& base, std::uint64_t e) {
  BiPoly<E> acc = BiPoly<E>::from_uni(UniPoly<E>::one(base.field()));
  BiPoly<E> sq = base;
  while (e) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e) sq *= sq;
  }
  return acc;
}

/// Degree-then-coefficient order on bivariate polynomials.
template <FieldElement E>
bool poly_less(const BiPoly<E>& a, const BiPoly<E>& b) {
  if (a.deg_y() != b.deg_y()) return a.deg_y() < b.deg_y();
  auto ca = a.coefficients(), cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                      [](const UniPoly<E>& p, const UniPoly<E>& q) { return poly_less(p, q); });
}

/// a_0 = f(x, 0).
template <FieldElement E>
UniPoly<E> eval_y0(const BiPoly<E>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "eval_y0 of 0");
  return f.coeff(0);
}

/// a_n, the leading coefficient in y.
template <FieldElement E>
UniPoly<E> leading_y(const BiPoly<E>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading_y of 0");
  return f.coefficients().back();
}

/// Monic gcd of a_0, ..., a_n in K[x].
template <FieldElement E>
UniPoly<E> content_y(const BiPoly<E>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "content of 0");
  UniPoly<E> g(f.field());
  for (const auto& a : f.coefficients()) {
    if (a.is_zero()) continue;
    g = g.is_zero() ? a.monic() : gcd_uni(g, a);
    if (g.is_one()) break;
  }
  return g;
}

template <FieldElement E>
BiPoly<E> primitive_part_y(const BiPoly<E>& f) {
  return *f.divided_exact(content_y(f));
}

/// y^n f(x, 1/y): the coefficient list reversed. Requires a_0 != 0 so that
/// the y-degree is preserved.
template <FieldElement E>
BiPoly<E> reciprocal_y(const BiPoly<E>& f) {
  if (f.is_zero() || f.coeff(0).is_zero())
    throw Error(Errc::ZeroConstantTerm, "reciprocal needs a_0 != 0; strip the y-power first");
  auto c = f.coefficients();
  return BiPoly<E>(f.field(), std::vector<UniPoly<E>>(c.rbegin(), c.rend()));
}

/// g = a_n^(n-1) f(x, y / a_n), whose y^i coefficient is a_i a_n^(n-1-i).
/// g is monic in y and built without divisions.
template <FieldElement E>
BiPoly<E> monicize(const BiPoly<E>& f) {
  if (f.deg_y() < Degree(1)) throw Error(Errc::ConstantInY, "monicize needs deg_y >= 1");
  const std::size_t n = f.size() - 1;
  const UniPoly<E> lead = leading_y(f);
  std::vector<UniPoly<E>> g(n + 1, UniPoly<E>(f.field()));
  g[n] = UniPoly<E>::one(f.field());
  UniPoly<E> power = UniPoly<E>::one(f.field());  // a_n^(n-1-i), built from i = n-1 down
  for (std::size_t i = n; i-- > 0;) {
    g[i] = f.coeff(i) * power;
    power *= lead;
  }
  return BiPoly<E>(f.field(), std::move(g));
}

/// f = y^k g with g(x, 0) != 0.
template <FieldElement E>
std::pair<std::size_t, BiPoly<E>> strip_y_power(const BiPoly<E>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "strip_y_power of 0");
  auto c = f.coefficients();
  std::size_t k = 0;
  while (c[k].is_zero()) ++k;
  return {k, BiPoly<E>(f.field(), std::vector<UniPoly<E>>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()))};
}

/// Pseudo-remainder of a by b in K[x][y]: lc_y(b)^(deg a - deg b + 1) a mod b.
template <FieldElement E>
BiPoly<E> pseudo_remainder(BiPoly<E> a, const BiPoly<E>& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "pseudo-remainder by 0");
  const std::size_t db = b.size() - 1;
  const UniPoly<E> lb = leading_y(b);
  while (!a.is_zero() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const UniPoly<E> la = leading_y(a);
    a = a.scaled(lb) - b.scaled(la).shifted_y(shift);
  }
  return a;
}

/// Greatest common divisor in K[x][y], normalized so that the leading
/// coefficient in y is monic in x. Uses a primitive remainder sequence.
template <FieldElement E>
BiPoly<E> gcd_bi(const BiPoly<E>& f, const BiPoly<E>& g) {
  require_same_field(f.field(), g.field());
  if (f.is_zero() && g.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  BiPoly<E> out(f.field());
  if (f.is_zero() || g.is_zero()) {
    out = f.is_zero() ? g : f;
  } else {
    UniPoly<E> cont = gcd_uni(content_y(f), content_y(g));
    BiPoly<E> a = primitive_part_y(f), b = primitive_part_y(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.is_zero()) {
      BiPoly<E> r = pseudo_remainder(a, b);
      a = std::move(b);
      b = r.is_zero() ? r : primitive_part_y(r);
    }
    out = a.scaled(cont);
  }
  const E lc = leading_y(out).leading();
  return out.scaled(UniPoly<E>::constant(out.field(), lc.inverse()));
}

}  // namespace polybound

#endif  // POLYBOUND_BIPOLY_HPP
