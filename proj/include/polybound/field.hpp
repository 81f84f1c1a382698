#ifndef POLYBOUND_FIELD_HPP
#define POLYBOUND_FIELD_HPP

// Coefficient fields: the rationals (GMP-backed) and prime fields F_p with
// p <= 2^31, so that a product of two residues fits in 64 bits.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "polybound/error.hpp"

namespace polybound {

inline constexpr std::uint64_t kMaxPrimeModulus = std::uint64_t{1} << 31;

constexpr bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

class FieldDescriptor {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldDescriptor rationals() noexcept { return FieldDescriptor(Kind::Rationals, 0); }

  /// Throws NotPrime for composite p and FieldTooLarge above 2^31.
  static FieldDescriptor prime(std::uint64_t p) {
    if (p > kMaxPrimeModulus)
      throw Error(Errc::FieldTooLarge, "prime modulus above 2^31: " + std::to_string(p));
    if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    return FieldDescriptor(Kind::PrimeField, static_cast<std::uint32_t>(p));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const {
    return is_rationals() ? std::string("Q") : "F" + std::to_string(modulus_);
  }

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  friend class PrimeFieldElem;
  FieldDescriptor(Kind kind, std::uint32_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

inline void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (!(a == b)) throw Error(Errc::MixedFields, a.to_string() + " vs " + b.to_string());
}

/// Canonical fraction n/d with gcd(|n|, d) = 1 and d > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& v) : value_(v) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  static Rational from_integer(const FieldDescriptor& field, const mpz_class& v) {
    if (!field.is_rationals()) throw Error(Errc::MixedFields, "rational element requested for " + field.to_string());
    return Rational(v);
  }

  FieldDescriptor field() const noexcept { return FieldDescriptor::rationals(); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  Rational inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
    Rational r;
    r.value_ = 1 / value_;
    return r;
  }

  std::string to_string() const { return value_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  Rational& operator+=(const Rational& b) { value_ += b.value_; return *this; }
  Rational& operator-=(const Rational& b) { value_ -= b.value_; return *this; }
  Rational& operator*=(const Rational& b) { value_ *= b.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// Residue in [0, p). Operations between different moduli throw MixedFields.
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw Error(Errc::NotPrime, "modulus < 2");
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    residue_ = static_cast<std::uint32_t>(r);
  }

  static PrimeFieldElem from_integer(const FieldDescriptor& field, const mpz_class& v) {
    if (!field.is_prime_field()) throw Error(Errc::MixedFields, "prime-field element requested for Q");
    if (v.fits_slong_p()) return PrimeFieldElem(v.get_si(), field.characteristic());
    mpz_class r = v % field.characteristic();
    if (r < 0) r += field.characteristic();
    return PrimeFieldElem(static_cast<std::int64_t>(r.get_ui()), field.characteristic());
  }

  FieldDescriptor field() const noexcept { return FieldDescriptor(FieldDescriptor::Kind::PrimeField, modulus_); }
  std::uint32_t residue() const noexcept { return residue_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_one() const noexcept { return residue_ == 1; }

  PrimeFieldElem inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(modulus_));
    // a^(p-2) mod p
    std::uint64_t base = residue_, acc = 1, e = modulus_ - 2;
    while (e) {
      if (e & 1) acc = acc * base % modulus_;
      base = base * base % modulus_;
      e >>= 1;
    }
    return make(static_cast<std::uint32_t>(acc), modulus_);
  }

  std::string to_string() const { return std::to_string(residue_); }

  friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.residue_} + b.residue_;
    if (s >= a.modulus_) s -= a.modulus_;
    return make(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    std::uint64_t s = std::uint64_t{a.residue_} + a.modulus_ - b.residue_;
    if (s >= a.modulus_) s -= a.modulus_;
    return make(static_cast<std::uint32_t>(s), a.modulus_);
  }
  friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    return make(static_cast<std::uint32_t>(std::uint64_t{a.residue_} * b.residue_ % a.modulus_), a.modulus_);
  }
  friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    return a * b.inverse();
  }
  friend PrimeFieldElem operator-(const PrimeFieldElem& a) {
    return make(a.residue_ == 0 ? 0 : a.modulus_ - a.residue_, a.modulus_);
  }
  PrimeFieldElem& operator+=(const PrimeFieldElem& b) { return *this = *this + b; }
  PrimeFieldElem& operator-=(const PrimeFieldElem& b) { return *this = *this - b; }
  PrimeFieldElem& operator*=(const PrimeFieldElem& b) { return *this = *this * b; }

  friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    return a.residue_ == b.residue_;
  }
  friend std::strong_ordering operator<=>(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    check(a, b);
    return a.residue_ <=> b.residue_;
  }
  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& r) { return os << r.residue_; }

 private:
  static PrimeFieldElem make(std::uint32_t residue, std::uint32_t modulus) {
    PrimeFieldElem e;
    e.residue_ = residue;
    e.modulus_ = modulus;
    return e;
  }
  static void check(const PrimeFieldElem& a, const PrimeFieldElem& b) {
    if (a.modulus_ != b.modulus_)
      throw Error(Errc::MixedFields, "F" + std::to_string(a.modulus_) + " vs F" + std::to_string(b.modulus_));
  }
  PrimeFieldElem() = default;

  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

template <class E>
concept FieldElement = requires(const E a, const E b, const FieldDescriptor& f, const mpz_class& z) {
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { a.inverse() } -> std::same_as<E>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_one() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a < b } -> std::convertible_to<bool>;
  { a.to_string() } -> std::same_as<std::string>;
  { E::from_integer(f, z) } -> std::same_as<E>;
};

template <FieldElement E>
E field_zero(const FieldDescriptor& f) { return E::from_integer(f, 0); }
template <FieldElement E>
E field_one(const FieldDescriptor& f) { return E::from_integer(f, 1); }

template <FieldElement E>
E field_add(const E& a, const E& b) { return a + b; }
template <FieldElement E>
E field_mul(const E& a, const E& b) { return a * b; }
template <FieldElement E>
E field_neg(const E& a) { return -a; }
template <FieldElement E>
E field_inv(const E& a) { return a.inverse(); }

}  // namespace polybound

#endif  // POLYBOUND_FIELD_HPP
