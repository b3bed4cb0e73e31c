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

#include "corrforms/bounds.hpp"

#include "corrforms/invariance.hpp"
#include "corrforms/ramification.hpp"

namespace corrforms {

namespace {

void require_unequal_degrees(long d1, long d2) {
  if (d1 == d2)
    throw MathError(ErrorCode::UnsupportedEqualDegrees, "the conductor is unbounded when d1 = d2 = " + std::to_string(d1));
  if (d1 < d2)
    throw MathError(ErrorCode::DegreeOrder, "d1 = " + std::to_string(d1) + " < d2 = " + std::to_string(d2));
}

void require_semi_invariant(const Correspondence& c, const DifferentialForm& omega) {
  if (!semi_invariance_ratio(c, omega))
    throw MathError(ErrorCode::NotSemiInvariant, omega.to_string() + " is not semi-invariant");
}

}  // namespace

Rational genus_conductor_bound(long genus_x, long genus_y, long d1, long d2) {
  if (d1 <= 0 || d2 <= 0) throw MathError(ErrorCode::InvalidArgument, "degrees must be positive");
  require_unequal_degrees(d1, d2);
  const mpz_class chi_x = 2 * genus_x - 2;
  const mpz_class chi_y = 2 * genus_y - 2;
  const mpz_class num = 3 * chi_x - mpz_class(2 * d1 + d2) * chi_y;
  return Rational(num, mpz_class(d1 - d2));
}

BoundCheck ramification_bound_check(const Correspondence& c, const DifferentialForm& omega) {
  require_unequal_degrees(c.d1(), c.d2());
  require_semi_invariant(c, omega);
  const long r1 = ramification_divisor(c.sigma1()).degree();
  const long r2 = ramification_divisor(c.sigma2()).degree();
  const std::size_t cond = conductor(omega);
  Rational bound(mpz_class(2 * r1 + r2), mpz_class(static_cast<long>(c.d1()) - static_cast<long>(c.d2())));
  const bool holds = Rational(static_cast<long>(cond)) <= bound;
  return {cond, std::move(bound), holds};
}

WeightSumCheck affine_weight_sum_check(const DifferentialForm& omega) {
  const long sum = divisor_of(omega).affine_degree();
  const long expected = -omega.weight();
  return {sum, expected, sum == expected};
}

bool affine_conductor_guard(const Correspondence& c, const DifferentialForm& omega) {
  if (!c.is_polynomial()) throw MathError(ErrorCode::NormalizationRequired, "polynomial maps required");
  if (c.d1() < 4 * c.d2())
    throw MathError(ErrorCode::HypothesisNotMet,
                    "d1 = " + std::to_string(c.d1()) + " < 4 d2 = " + std::to_string(4 * c.d2()));
  require_semi_invariant(c, omega);
  return affine_conductor(omega) <= 2;
}

}  // namespace corrforms
