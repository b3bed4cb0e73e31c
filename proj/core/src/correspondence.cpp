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

#include "corrforms/correspondence.hpp"

namespace corrforms {

Correspondence::Correspondence(RationalMap sigma1, RationalMap sigma2)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
  require_same_field(sigma1_.field(), sigma2_.field());
  if (!sigma1_.is_separable()) throw MathError(ErrorCode::Inseparable, "sigma1 = " + sigma1_.body().to_string());
  if (!sigma2_.is_separable()) throw MathError(ErrorCode::Inseparable, "sigma2 = " + sigma2_.body().to_string());
}

}  // namespace corrforms
