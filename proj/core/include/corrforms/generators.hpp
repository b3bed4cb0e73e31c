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

#include "corrforms/correspondence.hpp"
#include "corrforms/polynomial.hpp"

namespace corrforms {

/// (sigma^m, sigma^h). Requires gcd(m, h) = 1 and m > h >= 1.
Correspondence gen_multiplicative_pair(const Polynomial& sigma, unsigned m, unsigned h);

/// T_0 = 2, T_1 = t, T_d = t T_{d-1} - T_{d-2}; T_d(t + 1/t) = t^d + t^-d.
Polynomial gen_chebyshev(unsigned d, Field field = Field::rationals());

/// Checks T(t + 1/t) = t^d + t^-d as an identity of rational functions.
bool chebyshev_identity_holds(const Polynomial& t_d, unsigned d);

}  // namespace corrforms
