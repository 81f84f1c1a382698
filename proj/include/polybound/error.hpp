#ifndef POLYBOUND_ERROR_HPP
#define POLYBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polybound {

enum class Errc {
  MixedFields,
  DivisionByZero,
  NotPrime,
  ZeroPolynomial,
  UnknownVariable,
  ArityMismatch,
  BothZero,
  ZeroConstantTerm,
  ConstantInY,
  ConstantInput,
  DegreeCapExceeded,
  BudgetExceeded,
  FieldTooLarge,
  NotSupported,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ConstantInY: return "ConstantInY";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NotSupported: return "NotSupported";
  }
  return "Unknown";
}

/// Single exception type for every library failure; `code()` says which.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  explicit Error(Errc code) : Error(code, std::string(errc_name(code))) {}

  Errc code() const noexcept { return code_; }

  /// Resource-limit failures (the CLI maps these to exit status 2).
  bool is_budget() const noexcept {
    return code_ == Errc::DegreeCapExceeded || code_ == Errc::BudgetExceeded ||
           code_ == Errc::FieldTooLarge;
  }

 private:
  Errc code_;
};

}  // namespace polybound

#endif  // POLYBOUND_ERROR_HPP
