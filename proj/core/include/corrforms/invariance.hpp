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
#include <variant>

#include "corrforms/correspondence.hpp"
#include "corrforms/differential_form.hpp"

namespace corrforms {

/// lambda with sigma1^* omega = lambda sigma2^* omega, or nullopt when the ratio is not constant.
std::optional<Scalar> semi_invariance_ratio(const Correspondence& c, const DifferentialForm& omega);

struct Weight1Solution {
  Scalar a;
  Scalar lambda;
};

struct Weight2Solution {
  Scalar s;
  Scalar q;
  Scalar lambda;
  bool degenerate;  // s^2 = 4q: the square of a weight-1 flat form
};

/// Solves sigma1'(sigma2 - a) = lambda sigma2'(sigma1 - a) for dt/(t - a).
///
/// The leading terms pin lambda = d1/d2, after which a is the constant
/// quotient of (sigma1' sigma2 - lambda sigma1 sigma2') by (sigma1' - lambda sigma2').
/// Requires polynomial maps with d1 > d2, both tame.
std::optional<Weight1Solution> solve_weight1_flat(const Correspondence& c);

/// Solves for (dt)^2/(t^2 - s t + q) with lambda = (d1/d2)^2 as an exact
/// two-unknown linear system over all coefficients.
std::optional<Weight2Solution> solve_weight2_flat(const Correspondence& c);

struct Weight1Flat {
  Scalar a;
};
struct Weight2Flat {
  Scalar s;
  Scalar q;
};
/// Weight-2 solve hit s^2 = 4q with no direct weight-1 hit; generator is dt/(t - s/2).
struct Weight1Square {
  Scalar a;
};
using Flatness = std::variant<Weight1Flat, Weight2Flat, Weight1Square>;

struct Primitive {
  DifferentialForm form;
  int weight;
  Scalar lambda;
  Flatness flatness;
};

enum class GroupStatus { Trivial, Cyclic };

struct GroupReport {
  std::optional<Primitive> primitive;
  /// d1 >= 14 d2: a Trivial answer is then a proof, not just a failed search.
  bool complete;

  GroupStatus status() const noexcept { return primitive ? GroupStatus::Cyclic : GroupStatus::Trivial; }
};

/// Weight 1 first, then weight 2.
GroupReport find_primitive(const Correspondence& c);

/// Throws the module's precondition errors for pairs outside the solvers' domain.
void require_flat_search_domain(const Correspondence& c);

}  // namespace corrforms
