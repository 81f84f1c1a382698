#ifndef POLYBOUND_MULTIVARIATE_HPP
#define POLYBOUND_MULTIVARIATE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "polybound/multipoly.hpp"

namespace polybound {

/// Variables x_1..x_s of an s-variate input, s >= 3. The main variable is
/// x_s and the pivot, whose degrees drive the criteria, is x_{s-1}.
class VariableFrame {
 public:
  explicit VariableFrame(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 3) throw Error(Errc::ArityMismatch, "a variable frame needs at least three variables");
    if (std::set<std::string>(names_.begin(), names_.end()).size() != names_.size())
      throw Error(Errc::ArityMismatch, "variable names must be distinct");
  }
  const std::vector<std::string>& names() const noexcept { return names_; }
  int arity() const noexcept { return static_cast<int>(names_.size()); }
  int main_index() const noexcept { return arity(); }
  int pivot_index() const noexcept { return arity() - 1; }

 private:
  std::vector<std::string> names_;
};

/// a_0, ..., a_n with f = sum a_i x_s^i and a_n != 0.
template <FieldElement E>
std::vector<MultiPoly<E>> coefficients_in_main(const MultiPoly<E>& f, const VariableFrame& frame) {
  if (f.main_var() > frame.main_index())
    throw Error(Errc::UnknownVariable, "polynomial involves x" + std::to_string(f.main_var()) + " outside the frame");
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "coefficients of 0");
  return f.coefficients_in(frame.main_index());
}

/// True iff deg_{s-1} a <= 0.
template <FieldElement E>
bool is_free_of_pivot(const MultiPoly<E>& a, const VariableFrame& frame) {
  return a.deg(frame.pivot_index()) <= Degree(0);
}

/// f = x_s^k g with g(x_1, ..., x_{s-1}, 0) != 0.
template <FieldElement E>
std::pair<std::size_t, MultiPoly<E>> strip_main_power(const MultiPoly<E>& f, const VariableFrame& frame) {
  auto c = coefficients_in_main(f, frame);
  std::size_t k = 0;
  while (c[k].is_zero()) ++k;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  return {k, MultiPoly<E>::dense(f.field(), frame.main_index(), std::move(c))};
}

/// gcd of the coefficients a_i in K[x_1, ..., x_{s-1}]; only s = 3 is supported.
/// Normalized so that the leading coefficient in x_2 is monic in x_1.
template <FieldElement E>
MultiPoly<E> content_pivot_ring(const MultiPoly<E>& f, const VariableFrame& frame) {
  if (frame.arity() != 3)
    throw Error(Errc::NotSupported, "content in K[x_1..x_" + std::to_string(frame.arity() - 1) + "] is not supported");
  std::optional<BiPoly<E>> g;
  for (const auto& a : coefficients_in_main(f, frame)) {
    if (a.is_zero()) continue;
    const BiPoly<E> b = to_bipoly(a, 1, 2);
    g = g ? gcd_bi(*g, b) : gcd_bi(b, BiPoly<E>(f.field()));
    if (g->deg_y() == Degree(0) && g->coeff(0).is_constant()) break;
  }
  return from_bipoly(*g, 1, 2);
}

}  // namespace polybound

#endif  // POLYBOUND_MULTIVARIATE_HPP
