#ifndef POLYBOUND_UNIPOLY_HPP
#define POLYBOUND_UNIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "polybound/degree.hpp"
#include "polybound/error.hpp"
#include "polybound/field.hpp"

namespace polybound {

/// Dense univariate polynomial; coefficient k multiplies x^k. The zero
/// polynomial has no coefficients, otherwise the last one is nonzero.
template <FieldElement E>
class UniPoly {
 public:
  using element_type = E;

  explicit UniPoly(FieldDescriptor field) : field_(field) {}
  UniPoly(FieldDescriptor field, std::vector<E> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const E& c : coeffs_) require_same_field(field_, c.field());
    trim();
  }
  /// Integer coefficients, constant term first.
  UniPoly(FieldDescriptor field, std::initializer_list<long> ints) : field_(field) {
    coeffs_.reserve(ints.size());
    for (long v : ints) coeffs_.push_back(E::from_integer(field, v));
    trim();
  }

  static UniPoly constant(FieldDescriptor field, E c) { return UniPoly(field, std::vector<E>{std::move(c)}); }
  static UniPoly one(FieldDescriptor field) { return constant(field, field_one<E>(field)); }
  static UniPoly monomial(FieldDescriptor field, E c, std::size_t k) {
    std::vector<E> v(k + 1, field_zero<E>(field));
    v[k] = std::move(c);
    return UniPoly(field, std::move(v));
  }
  static UniPoly x(FieldDescriptor field) { return monomial(field, field_one<E>(field), 1); }

  const FieldDescriptor& field() const noexcept { return field_; }
  std::span<const E> coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  E coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_zero<E>(field_); }
  E leading() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "leading coefficient of 0");
    return coeffs_.back();
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
  }
  UniPoly scaled(const E& c) const {
    if (c.is_zero()) return UniPoly(field_);
    std::vector<E> v;
    v.reserve(coeffs_.size());
    for (const E& a : coeffs_) v.push_back(a * c);
    return UniPoly(field_, std::move(v));
  }
  UniPoly derivative() const {
    std::vector<E> v;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      v.push_back(coeffs_[k] * E::from_integer(field_, static_cast<unsigned long>(k)));
    return UniPoly(field_, std::move(v));
  }
  /// Multiplies by x^k.
  UniPoly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<E> v(k, field_zero<E>(field_));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(field_, std::move(v));
  }
  E eval(const E& at) const {
    E acc = field_zero<E>(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    require_same_field(a.field_, b.field_);
    const UniPoly& big = a.size() >= b.size() ? a : b;
    const UniPoly& small = a.size() >= b.size() ? b : a;
    std::vector<E> v = big.coeffs_;
    for (std::size_t k = 0; k < small.size(); ++k) v[k] += small.coeffs_[k];
    return UniPoly(a.field_, std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<E> v;
    v.reserve(a.size());
    for (const E& c : a.coeffs_) v.push_back(-c);
    return UniPoly(a.field_, std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b.coeffs_[j].is_zero()) nz_b.push_back(j);
    std::vector<E> v(a.size() + b.size() - 1, field_zero<E>(a.field_));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j : nz_b) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(a.field_, std::move(v));
  }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  FieldDescriptor field_;
  std::vector<E> coeffs_;
};

template <FieldElement E>
Degree deg_x(const UniPoly<E>& p) noexcept { return p.degree(); }

/// Deterministic order used to sort factor lists: degree first, then
/// coefficients compared from the constant term upward.
template <FieldElement E>
bool poly_less(const UniPoly<E>& a, const UniPoly<E>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ca = a.coefficients(), cb = b.coefficients();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

/// Quotient and remainder; throws DivisionByZero for b = 0.
template <FieldElement E>
std::pair<UniPoly<E>, UniPoly<E>> divmod(const UniPoly<E>& a, const UniPoly<E>& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by 0");
  const FieldDescriptor& f = a.field();
  if (a.size() < b.size()) return {UniPoly<E>(f), a};
  std::vector<E> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<E> quot(a.size() - b.size() + 1, field_zero<E>(f));
  const E inv_lead = b.leading().inverse();
  const auto bc = b.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const E q = rem[k + bc.size() - 1] * inv_lead;
    quot[k] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
  }
  return {UniPoly<E>(f, std::move(quot)), UniPoly<E>(f, std::move(rem))};
}

/// a / b when the division is exact, nullopt otherwise.
template <FieldElement E>
std::optional<UniPoly<E>> div_exact(const UniPoly<E>& a, const UniPoly<E>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

template <FieldElement E>
UniPoly<E> operator%(const UniPoly<E>& a, const UniPoly<E>& b) { return divmod(a, b).second; }

/// Monic gcd by the Euclidean algorithm. Throws BothZero for gcd(0, 0).
template <FieldElement E>
UniPoly<E> gcd_uni(UniPoly<E> a, UniPoly<E> b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  while (!b.is_zero()) {
    UniPoly<E> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FieldElement E>
UniPoly<E> pow(const UniPoly<E>& base, std::uint64_t e) {
  UniPoly<E> acc = UniPoly<E>::one(base.field());
  UniPoly<E> sq = base;
  while (e) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e) sq *= sq;
  }
  return acc;
}

}  // namespace polybound

#endif  // POLYBOUND_UNIPOLY_HPP
