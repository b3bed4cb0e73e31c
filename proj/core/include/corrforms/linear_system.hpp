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

#include <vector>

#include "corrforms/arith.hpp"

namespace corrforms {

struct LinearSolution {
  enum class Kind { Unique, Inconsistent, Underdetermined };
  Kind kind;
  std::vector<Scalar> values;  // filled only for Unique
};

/// Exact Gauss-Jordan elimination for matrix * x = rhs over a single field.
/// `matrix` is row-major with one row per equation.
LinearSolution solve_linear_system(std::vector<std::vector<Scalar>> matrix, std::vector<Scalar> rhs, Field field);

}  // namespace corrforms
