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
#include <string>

#include "corrforms/divisor.hpp"
#include "corrforms/rational_function.hpp"

namespace corrforms {

/// f(t) (dt)^weight with f != 0 and weight != 0.
class DifferentialForm {
 public:
  DifferentialForm(RationalFunction coeff, int weight);

  /// dt/(t - a).
  static DifferentialForm flat_weight1(const Scalar& a);
  /// (dt)^2/(t^2 - s t + q), i.e. (dt)^2/((t-a)(t-b)) with s = a+b, q = ab.
  static DifferentialForm flat_weight2(const Scalar& s, const Scalar& q);

  const RationalFunction& coeff() const noexcept { return coeff_; }
  int weight() const noexcept { return weight_; }
  Field field() const noexcept { return coeff_.field(); }

  DifferentialForm scaled(const Scalar& c) const;

  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

  std::string to_string() const;

 private:
  RationalFunction coeff_;
  int weight_;
};

/// sigma^* omega = coeff(sigma) * (sigma')^weight (dt)^weight.
/// Throws MathError(Inseparable) when sigma' = 0.
DifferentialForm pullback(const RationalMap& sigma, const DifferentialForm& omega);

/// Zeros and poles of omega on P^1; ord at infinity = deg den - deg num - 2*weight.
Divisor divisor_of(const DifferentialForm& omega);

/// Number of geometric points in the support of div(omega).
std::size_t conductor(const DifferentialForm& omega);
/// Same count restricted to the affine line.
std::size_t affine_conductor(const DifferentialForm& omega);

}  // namespace corrforms
