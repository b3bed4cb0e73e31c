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

#include "corrforms/polynomial.hpp"

namespace corrforms {

struct SquarefreePart {
  Polynomial factor;  // monic, squarefree
  unsigned exponent;

  friend bool operator==(const SquarefreePart&, const SquarefreePart&) = default;
};

/// a = unit * prod factor^exponent, factors pairwise coprime, exponents increasing.
struct SquarefreeDecomposition {
  Scalar unit;
  std::vector<SquarefreePart> parts;

  Polynomial expand() const;
  Polynomial radical() const;
};

/// Yun's algorithm. In characteristic p an input with some multiplicity divisible
/// by p (in particular any input with vanishing derivative) throws MathError(WildInput).
SquarefreeDecomposition squarefree_decompose(const Polynomial& a);

/// Monic product of the distinct roots of a != 0, in any characteristic.
Polynomial radical(const Polynomial& a);

/// Roots of a squarefree polynomial grouped by a common integer label.
struct PointClass {
  Polynomial points;  // monic, squarefree, nonconstant
  unsigned order;

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

/// Partitions the roots of the squarefree `points` by their multiplicity in f.
/// Every root of `points` must be a root of f, and f != 0.
std::vector<PointClass> split_by_order(const Polynomial& points, const Polynomial& f);

}  // namespace corrforms
