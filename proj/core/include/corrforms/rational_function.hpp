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

#include <optional>
#include <string>

#include "corrforms/polynomial.hpp"

namespace corrforms {

/// Reduced fraction num/den of polynomials: gcd(num, den) = 1, den monic, zero is 0/1.
class RationalFunction {
 public:
  explicit RationalFunction(Field field = Field::rationals());
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  /// Throws MathError(DivisionByZero) when den = 0.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Scalar& c) { return RationalFunction(Polynomial::constant(c)); }
  static RationalFunction variable(Field field) { return RationalFunction(Polynomial::variable(field)); }

  Field field() const noexcept { return num_.field(); }
  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The value when the function is constant.
  std::optional<Scalar> constant_value() const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  RationalFunction inverse() const;
  /// Integer powers; negative exponents require a nonzero function.
  RationalFunction pow(long exponent) const;
  RationalFunction derivative() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// outer(inner(t)) for rational functions.
RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner);

/// Nonconstant rational function viewed as a self-map of P^1.
class RationalMap {
 public:
  /// Throws MathError(InvalidArgument) for a constant body.
  explicit RationalMap(RationalFunction body);
  RationalMap(Polynomial body) : RationalMap(RationalFunction(std::move(body))) {}  // NOLINT

  static RationalMap identity(Field field) { return RationalMap(Polynomial::variable(field)); }

  const RationalFunction& body() const noexcept { return body_; }
  Field field() const noexcept { return body_.field(); }
  /// max(deg num, deg den).
  unsigned degree() const noexcept { return degree_; }
  bool is_polynomial() const noexcept { return body_.is_polynomial(); }
  /// False exactly when the derivative vanishes identically.
  bool is_separable() const { return !body_.derivative().is_zero(); }

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.body_ == b.body_; }

 private:
  RationalFunction body_;
  unsigned degree_;
};

/// (outer o inner)(t) = outer(inner(t)).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

}  // namespace corrforms
