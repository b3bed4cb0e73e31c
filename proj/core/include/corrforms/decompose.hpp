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

#include "corrforms/correspondence.hpp"
#include "corrforms/polynomial.hpp"

namespace corrforms {

/// sigma1 = lambda1 sigma^m and sigma2 = lambda2 sigma^h with sigma monic and gcd(m, h) = 1.
struct Decomposition {
  Polynomial sigma;
  unsigned m;
  unsigned h;
  Scalar lambda1;
  Scalar lambda2;
};

/// Recovers the common power structure from squarefree parts refined by gcds;
/// no root finding. nullopt when the supports differ or exponent ratios disagree.
/// Throws MathError(UnsupportedCharacteristic) outside characteristic 0.
std::optional<Decomposition> decompose_power_pair(const Polynomial& sigma1, const Polynomial& sigma2);

}  // namespace corrforms
