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

// Random maps and forms shared by the geometry suites.

#include "test_support.hpp"

namespace corrforms::testing {

/// Nonconstant rational map of degree at most max_degree (a polynomial when `polynomial`).
inline RationalMap random_map(Rng& rng, Field f, unsigned max_degree, bool polynomial) {
  for (;;) {
    const Polynomial num = rng.nonzero_polynomial(f, max_degree, 4);
    const Polynomial den = polynomial ? P({1}, f) : rng.nonzero_polynomial(f, max_degree, 4);
    const RationalFunction body(num, den);
    if (body.is_constant()) continue;
    RationalMap sigma(body);
    if (sigma.is_separable()) return sigma;
  }
}

/// Nonzero form with small numerator and denominator.
inline DifferentialForm random_form(Rng& rng, Field f, int weight) {
  return DifferentialForm(RationalFunction(rng.nonzero_polynomial(f, 3, 4), rng.nonzero_polynomial(f, 3, 4)), weight);
}

}  // namespace corrforms::testing
