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

#include "corrforms/generators.hpp"

#include <numeric>

#include "corrforms/rational_function.hpp"

namespace corrforms {

Correspondence gen_multiplicative_pair(const Polynomial& sigma, unsigned m, unsigned h) {
  if (h < 1 || m <= h || std::gcd(m, h) != 1)
    throw MathError(ErrorCode::InvalidArgument,
                    "exponents need gcd(m, h) = 1 and m > h >= 1, got m = " + std::to_string(m) +
                        ", h = " + std::to_string(h));
  if (sigma.degree() < 1) throw MathError(ErrorCode::InvalidArgument, "sigma must be nonconstant");
  return Correspondence(RationalMap(sigma.pow(m)), RationalMap(sigma.pow(h)));
}

Polynomial gen_chebyshev(unsigned d, Field field) {
  if (d < 1) throw MathError(ErrorCode::InvalidArgument, "Chebyshev degree must be at least 1");
  const Polynomial t = Polynomial::variable(field);
  Polynomial prev = Polynomial::constant(Scalar::from_integer(2, field));
  Polynomial cur = t;
  for (unsigned k = 2; k <= d; ++k) {
    Polynomial next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_identity_holds(const Polynomial& t_d, unsigned d) {
  const Field f = t_d.field();
  const Polynomial t = Polynomial::variable(f);
  const RationalFunction u =
      RationalFunction(t * t + Polynomial::constant(Scalar::one(f)), t);  // t + 1/t
  const RationalFunction lhs = compose(RationalFunction(t_d), u);
  const RationalFunction rhs(t.pow(2 * d) + Polynomial::constant(Scalar::one(f)), t.pow(d));
  return (lhs - rhs).is_zero();
}

}  // namespace corrforms
