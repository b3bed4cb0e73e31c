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

#include "corrforms/rational_function.hpp"

namespace corrforms {

/// A pair of separable self-maps sigma1, sigma2 of P^1 over one field.
class Correspondence {
 public:
  /// Throws MathError(FieldMismatch) or MathError(Inseparable).
  Correspondence(RationalMap sigma1, RationalMap sigma2);

  const RationalMap& sigma1() const noexcept { return sigma1_; }
  const RationalMap& sigma2() const noexcept { return sigma2_; }
  Field field() const noexcept { return sigma1_.field(); }
  unsigned d1() const noexcept { return sigma1_.degree(); }
  unsigned d2() const noexcept { return sigma2_.degree(); }
  bool is_polynomial() const noexcept { return sigma1_.is_polynomial() && sigma2_.is_polynomial(); }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;

 private:
  RationalMap sigma1_;
  RationalMap sigma2_;
};

}  // namespace corrforms
