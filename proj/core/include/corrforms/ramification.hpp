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

#include <string>
#include <vector>

#include "corrforms/differential_form.hpp"
#include "corrforms/divisor.hpp"
#include "corrforms/rational_function.hpp"
#include "corrforms/squarefree.hpp"

namespace corrforms {

/// Ramification indices of a separable map; only places with index >= 2 are listed.
struct RamificationProfile {
  std::vector<PointClass> affine;  // PointClass::order is the ramification index
  unsigned index_at_infinity = 1;
};

/// Indices are read off Hasse derivatives chart by chart: finite values through
/// H_k(N) D - N H_k(D), poles through multiplicities in D, and infinity through
/// the reversed chart s = 1/t. Valid in every characteristic.
/// Throws MathError(Inseparable) for sigma' = 0.
RamificationProfile ramification_profile(const RationalMap& sigma);

struct TamenessReport {
  bool tame;
  std::string witness;  // offending place when !tame
};

TamenessReport is_tame(const RationalMap& sigma);

/// sum (e_x - 1) x. Throws MathError(WildRamification) naming the wild place.
Divisor ramification_divisor(const RationalMap& sigma);

/// sigma^* D, each preimage counted with its ramification index.
Divisor pullback(const RationalMap& sigma, const Divisor& d);

/// ord_x(sigma^* omega) + nu = e_x (ord_{sigma(x)} omega + nu) at every place x.
bool ord_identity_check(const RationalMap& sigma, const DifferentialForm& omega);

}  // namespace corrforms
