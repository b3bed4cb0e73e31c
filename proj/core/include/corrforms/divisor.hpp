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
#include <span>
#include <string>
#include <vector>

#include "corrforms/polynomial.hpp"

namespace corrforms {

/// All geometric points that are roots of `points` carry `multiplicity`.
struct DivisorComponent {
  Polynomial points;  // monic, squarefree
  long multiplicity;  // nonzero

  friend bool operator==(const DivisorComponent&, const DivisorComponent&) = default;
};

/// Divisor on P^1 stored without splitting into roots.
///
/// Normal form: one component per distinct multiplicity, sorted ascending,
/// so that equal divisors compare equal. Components are then automatically
/// pairwise coprime.
class Divisor {
 public:
  explicit Divisor(Field field = Field::rationals()) : field_(field) {}
  /// Components must be squarefree; they need not be coprime or merged.
  Divisor(Field field, std::vector<DivisorComponent> affine, long at_infinity);

  /// Affine zeros of f counted with multiplicity, times `scale`. f must be nonzero.
  static Divisor zeros_of(const Polynomial& f, long scale = 1);
  static Divisor at_infinity_only(Field field, long multiplicity) { return Divisor(field, {}, multiplicity); }

  Field field() const noexcept { return field_; }
  std::span<const DivisorComponent> affine() const noexcept { return affine_; }
  long at_infinity() const noexcept { return at_infinity_; }

  bool is_zero() const noexcept { return affine_.empty() && at_infinity_ == 0; }
  /// sum mult * deg(points) + at_infinity.
  long degree() const;
  /// Number of geometric points in the support, including infinity.
  std::size_t support_size() const;
  /// Number of geometric points in the affine support.
  std::size_t affine_support_size() const;
  /// Sum of affine multiplicities over geometric points.
  long affine_degree() const;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator*(long k, const Divisor& a);
  Divisor operator-() const { return -1 * *this; }
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }

  friend bool operator==(const Divisor&, const Divisor&) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::vector<DivisorComponent> affine_;
  long at_infinity_ = 0;
};

}  // namespace corrforms
