/*
    Copyright 2026 The corrforms Authors

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "corrforms/error.hpp"

namespace corrforms {

/// Largest admissible prime modulus is below 2^31 so products fit in 64 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Deterministic primality test for n < 2^31 (trial division).
bool is_prime(std::uint64_t n) noexcept;

/// Either the rationals or a prime field F_p.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws MathError(NotPrime) unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  constexpr std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit constexpr Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Canonical arbitrary-precision rational: gcd(num, den) = 1, den >= 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& value) : value_(value) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts an optional sign, decimal digits, and an optional "/den" with den > 0.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }

  Rational inverse() const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  mpq_class value_;
};

/// Residue class modulo a prime p < 2^31.
class PrimeFieldElement {
 public:
  /// Reduces an arbitrary integer into [0, p). p must be prime (unchecked here; see Field::prime).
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus);
  PrimeFieldElement(const mpz_class& value, std::uint32_t modulus);

  std::uint32_t residue() const noexcept { return residue_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  /// Extended Euclid. Throws MathError(DivisionByZero) on zero.
  PrimeFieldElement inverse() const;
  PrimeFieldElement operator-() const;

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b);
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b);

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;

  std::string to_string() const { return std::to_string(residue_); }

 private:
  std::uint32_t residue_;
  std::uint32_t modulus_;
};

/// Element of Q or of some F_p; arithmetic across different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(Rational{}) {}
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(PrimeFieldElement value) : value_(value) {}    // NOLINT(google-explicit-constructor)

  static Scalar zero(Field field) { return from_integer(0, field); }
  static Scalar one(Field field) { return from_integer(1, field); }
  static Scalar from_integer(const mpz_class& n, Field field);
  static Scalar from_integer(long n, Field field) { return from_integer(mpz_class(n), field); }
  /// Coefficient reduction: into F_p this requires p not dividing the denominator.
  static Scalar from_rational(const Rational& q, Field field);

  Field field() const;
  bool is_zero() const noexcept;
  bool is_one() const;

  bool is_rational() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  const PrimeFieldElement& as_prime() const { return std::get<PrimeFieldElement>(value_); }

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar pow(long exponent) const;

  /// Equality across different fields is false, never an error.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  std::string to_string() const;

 private:
  std::variant<Rational, PrimeFieldElement> value_;
};

/// Reduction homomorphism Z_(p)^x -> F_p^x, m/n -> m * n^{-1} mod p.
/// Throws MathError(NotPLocalUnit) when p divides the numerator or denominator.
PrimeFieldElement theta_p(const Rational& x, std::uint32_t p);

}  // namespace corrforms
