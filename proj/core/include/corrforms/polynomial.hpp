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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "corrforms/arith.hpp"

namespace corrforms {

/// Dense univariate polynomial over a single Field, coefficients in ascending degree.
///
/// The coefficient vector never carries a trailing zero, so the zero polynomial
/// is the empty vector and degree() reports kZeroDegree for it.
class Polynomial {
 public:
  /// Stand-in for deg(0) = -infinity.
  static constexpr long kZeroDegree = -1;

  explicit Polynomial(Field field = Field::rationals()) : field_(field) {}
  Polynomial(Field field, std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(const Scalar& c, std::size_t k);
  /// The indeterminate t.
  static Polynomial variable(Field field);
  static Polynomial from_integers(Field field, std::initializer_list<long> coeffs);
  static Polynomial from_rationals(Field field, std::span<const Rational> coeffs);

  Field field() const noexcept { return field_; }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  /// Coefficient of t^k; zero beyond the degree.
  Scalar coeff(std::size_t k) const;
  const Scalar& leading() const;
  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned exponent) const;
  Scalar evaluate(const Scalar& x) const;
  Polynomial monic() const;

  /// Formal derivative (t^p -> 0 in characteristic p).
  Polynomial derivative() const;
  /// k-th Hasse derivative: sum_j C(j, k) a_j t^(j-k). Valid in every characteristic.
  Polynomial hasse_derivative(unsigned k) const;

  /// Coefficients reversed against t^n: t^n * f(1/t). Requires n >= degree().
  Polynomial reversed(std::size_t n) const;

  /// Multiplicity of the root c (0 when f(c) != 0). f must be nonzero.
  unsigned order_at(const Scalar& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// Human-readable form in the variable t, e.g. "t^2 - 2".
  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// a = q*b + r with deg r < deg b. Throws MathError(DivisionByZero) for b = 0.
DivRem divrem(const Polynomial& a, const Polynomial& b);
/// Quotient when b | a; throws MathError(InvalidArgument) otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Monic gcd. Throws MathError(InvalidArgument) when both inputs are zero.
Polynomial gcd_monic(const Polynomial& a, const Polynomial& b);
/// outer(inner(t)).
Polynomial compose(const Polynomial& outer, const Polynomial& inner);
/// Ring-homomorphic image of a rational polynomial in F_p.
Polynomial reduce_mod(const Polynomial& a, Field target);

void require_same_field(Field a, Field b);

}  // namespace corrforms
