#ifndef POLYBOUND_MULTIPOLY_HPP
#define POLYBOUND_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polybound/bipoly.hpp"

namespace polybound {

/// Recursive dense polynomial in x_1, ..., x_s.
///
/// A node is either a constant or a dense coefficient list in one variable
/// x_k (k >= 1) whose entries only involve variables with smaller index.
/// Canonical form: dense lists have at least two entries and a nonzero last
/// entry, so equal polynomials have identical trees.
template <FieldElement E>
class MultiPoly {
 public:
  using element_type = E;

  explicit MultiPoly(FieldDescriptor field) : field_(field), constant_(field_zero<E>(field)) {}

  static MultiPoly constant(FieldDescriptor field, E c) {
    require_same_field(field, c.field());
    MultiPoly m(field);
    m.constant_ = std::move(c);
    return m;
  }
  static MultiPoly from_int(FieldDescriptor field, long v) { return constant(field, E::from_integer(field, v)); }
  /// The variable x_k, k >= 1.
  static MultiPoly variable(FieldDescriptor field, int k) {
    std::vector<MultiPoly> t{MultiPoly(field), from_int(field, 1)};
    return dense(field, k, std::move(t));
  }
  /// Builds sum_i terms[i] x_k^i, canonicalizing. Entries must not involve x_j, j >= k.
  static MultiPoly dense(FieldDescriptor field, int k, std::vector<MultiPoly> terms) {
    while (!terms.empty() && terms.back().is_zero()) terms.pop_back();
    if (terms.empty()) return MultiPoly(field);
    if (terms.size() == 1) return std::move(terms.front());
    MultiPoly m(field);
    m.var_ = k;
    m.terms_ = std::move(terms);
    return m;
  }

  const FieldDescriptor& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return var_ == 0 && constant_.is_zero(); }
  bool is_constant() const noexcept { return var_ == 0; }
  /// Index of the outermost variable; 0 for constants.
  int main_var() const noexcept { return var_; }
  const E& constant_value() const noexcept { return constant_; }
  std::span<const MultiPoly> terms() const noexcept { return terms_; }

  /// Coefficients of this polynomial viewed in x_k, for k >= main_var().
  std::vector<MultiPoly> coefficients_in(int k) const {
    if (var_ == k && k != 0) return terms_;
    if (var_ > k) throw Error(Errc::ArityMismatch, "coefficients_in: x" + std::to_string(k) + " is not outermost");
    if (is_zero()) return {};
    return {*this};
  }

  /// deg_r: degree in x_r; -inf for the zero polynomial.
  Degree deg(int r) const {
    if (is_zero()) return Degree::neg_inf();
    if (var_ < r) return Degree(0);
    if (var_ == r) return Degree(static_cast<std::int64_t>(terms_.size()) - 1);
    Degree d;
    for (const auto& t : terms_) d = std::max(d, t.deg(r));
    return d;
  }

  MultiPoly scaled(const E& c) const {
    if (c.is_zero()) return MultiPoly(field_);
    if (is_constant()) return constant(field_, constant_ * c);
    std::vector<MultiPoly> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) t.push_back(x.scaled(c));
    return dense(field_, var_, std::move(t));
  }

  /// Substitutes x_k = value.
  MultiPoly substitute(int k, const E& value) const {
    if (var_ < k) return *this;
    if (var_ == k) {
      MultiPoly acc(field_);
      for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc.scaled(value) + *it;
      return acc;
    }
    std::vector<MultiPoly> t;
    t.reserve(terms_.size());
    for (const auto& x : terms_) t.push_back(x.substitute(k, value));
    return dense(field_, var_, std::move(t));
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_constant() && b.is_constant()) return constant(a.field_, a.constant_ + b.constant_);
    const int v = std::max(a.var_, b.var_);
    std::vector<MultiPoly> ta = a.coefficients_in(v), tb = b.coefficients_in(v);
    if (ta.size() < tb.size()) std::swap(ta, tb);
    for (std::size_t i = 0; i < tb.size(); ++i) ta[i] = ta[i] + tb[i];
    return dense(a.field_, v, std::move(ta));
  }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(-field_one<E>(a.field_)); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.field_);
    if (a.is_constant()) return b.scaled(a.constant_);
    if (b.is_constant()) return a.scaled(b.constant_);
    if (a.var_ != b.var_) {
      const MultiPoly& outer = a.var_ > b.var_ ? a : b;
      const MultiPoly& inner = a.var_ > b.var_ ? b : a;
      std::vector<MultiPoly> t;
      t.reserve(outer.terms_.size());
      for (const auto& x : outer.terms_) t.push_back(x * inner);
      return dense(a.field_, outer.var_, std::move(t));
    }
    std::vector<MultiPoly> t(a.terms_.size() + b.terms_.size() - 1, MultiPoly(a.field_));
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.terms_.size(); ++j)
        if (!b.terms_[j].is_zero()) t[i + j] = t[i + j] + a.terms_[i] * b.terms_[j];
    }
    return dense(a.field_, a.var_, std::move(t));
  }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_) || a.var_ != b.var_) return false;
    return a.is_constant() ? a.constant_ == b.constant_ : a.terms_ == b.terms_;
  }

 private:
  FieldDescriptor field_;
  int var_ = 0;
  E constant_;
  std::vector<MultiPoly> terms_;
};

template <FieldElement E>
MultiPoly<E> pow(const MultiPoly<E>& base, std::uint64_t e) {
  MultiPoly<E> acc = MultiPoly<E>::from_int(base.field(), 1);
  MultiPoly<E> sq = base;
  while (e) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e) sq *= sq;
  }
  return acc;
}

template <FieldElement E>
Degree deg_r(const MultiPoly<E>& f, int r) { return f.deg(r); }

/// Reads f as a polynomial in x_var only; ArityMismatch if other variables occur.
template <FieldElement E>
UniPoly<E> to_unipoly(const MultiPoly<E>& f, int var) {
  if (f.main_var() != 0 && f.main_var() != var)
    throw Error(Errc::ArityMismatch, "polynomial involves a variable other than x" + std::to_string(var));
  std::vector<E> c;
  for (const auto& t : f.coefficients_in(var)) {
    if (!t.is_constant()) throw Error(Errc::ArityMismatch, "nested variable in univariate view");
    c.push_back(t.constant_value());
  }
  return UniPoly<E>(f.field(), std::move(c));
}

/// Reads f as a polynomial in (x = x_xvar, y = x_yvar) with xvar < yvar.
template <FieldElement E>
BiPoly<E> to_bipoly(const MultiPoly<E>& f, int xvar = 1, int yvar = 2) {
  if (f.main_var() > yvar || (f.main_var() != yvar && f.main_var() != xvar && f.main_var() != 0))
    throw Error(Errc::ArityMismatch, "polynomial is not bivariate in the requested variables");
  std::vector<UniPoly<E>> a;
  for (const auto& t : f.coefficients_in(yvar)) a.push_back(to_unipoly(t, xvar));
  return BiPoly<E>(f.field(), std::move(a));
}

template <FieldElement E>
MultiPoly<E> from_unipoly(const UniPoly<E>& p, int var = 1) {
  std::vector<MultiPoly<E>> t;
  for (const E& c : p.coefficients()) t.push_back(MultiPoly<E>::constant(p.field(), c));
  return MultiPoly<E>::dense(p.field(), var, std::move(t));
}

template <FieldElement E>
MultiPoly<E> from_bipoly(const BiPoly<E>& f, int xvar = 1, int yvar = 2) {
  std::vector<MultiPoly<E>> t;
  for (const auto& a : f.coefficients()) t.push_back(from_unipoly(a, xvar));
  return MultiPoly<E>::dense(f.field(), yvar, std::move(t));
}

}  // namespace polybound

#endif  // POLYBOUND_MULTIPOLY_HPP
