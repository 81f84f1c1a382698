#ifndef POLYBOUND_DEGREE_HPP
#define POLYBOUND_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace polybound {

/// deg(a) with deg(0) = -inf. Comparing degrees stands in for comparing the
/// absolute values rho^deg(a), so rho itself is never needed.
class Degree {
 public:
  constexpr Degree() noexcept = default;  // -inf
  constexpr Degree(std::int64_t v) noexcept : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr Degree neg_inf() noexcept { return Degree(); }

  constexpr bool is_neg_inf() const noexcept { return value_ == kNegInf; }
  constexpr bool is_finite() const noexcept { return !is_neg_inf(); }
  /// Only meaningful when finite.
  constexpr std::int64_t value() const noexcept { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) noexcept {
    return (a.is_neg_inf() || b.is_neg_inf()) ? Degree() : Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree, Degree) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) noexcept { return a.value_ <=> b.value_; }

  std::string to_string() const { return is_neg_inf() ? std::string("-inf") : std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_ = kNegInf;
};

/// Maximum over a range of Degree values; -inf for an empty range.
template <class Range>
constexpr Degree max_degree(const Range& r) noexcept {
  Degree best;
  for (Degree d : r)
    if (d > best) best = d;
  return best;
}

}  // namespace polybound

#endif  // POLYBOUND_DEGREE_HPP
