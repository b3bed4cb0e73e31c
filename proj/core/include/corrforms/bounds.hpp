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

#include "corrforms/correspondence.hpp"
#include "corrforms/differential_form.hpp"

namespace corrforms {

/// 3(2gX - 2) - (2d1 + d2)(2gY - 2), divided by d1 - d2. Requires d1 > d2.
Rational genus_conductor_bound(long genus_x, long genus_y, long d1, long d2);

struct BoundCheck {
  std::size_t conductor;
  Rational bound;
  bool holds;
};

/// Conductor of a semi-invariant omega against (2 deg R1 + deg R2)/(d1 - d2).
/// Throws NotSemiInvariant, DegreeOrder/UnsupportedEqualDegrees, or WildRamification.
BoundCheck ramification_bound_check(const Correspondence& c, const DifferentialForm& omega);

struct WeightSumCheck {
  long sum;
  long expected;
  bool holds;
};

/// Sum of affine multiplicities of div(omega) against -weight.
WeightSumCheck affine_weight_sum_check(const DifferentialForm& omega);

/// Affine conductor <= 2 for a semi-invariant omega of a polynomial pair with d1 >= 4 d2.
bool affine_conductor_guard(const Correspondence& c, const DifferentialForm& omega);

}  // namespace corrforms
