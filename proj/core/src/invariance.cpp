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

#include "corrforms/invariance.hpp"

#include "corrforms/linear_system.hpp"
#include "corrforms/ramification.hpp"

namespace corrforms {

std::optional<Scalar> semi_invariance_ratio(const Correspondence& c, const DifferentialForm& omega) {
  require_same_field(c.field(), omega.field());
  const DifferentialForm up1 = pullback(c.sigma1(), omega);
  const DifferentialForm up2 = pullback(c.sigma2(), omega);
  return (up1.coeff() / up2.coeff()).constant_value();
}

void require_flat_search_domain(const Correspondence& c) {
  if (!c.is_polynomial())
    throw MathError(ErrorCode::NormalizationRequired,
                    "flat-form search needs polynomial maps; conjugate a common totally ramified point to infinity");
  if (c.d1() == c.d2())
    throw MathError(ErrorCode::UnsupportedEqualDegrees, "deg sigma1 = deg sigma2 = " + std::to_string(c.d1()));
  if (c.d1() < c.d2())
    throw MathError(ErrorCode::DegreeOrder, "deg sigma1 = " + std::to_string(c.d1()) +
                                                " < deg sigma2 = " + std::to_string(c.d2()));
  for (const RationalMap* sigma : {&c.sigma1(), &c.sigma2()}) {
    TamenessReport tame = is_tame(*sigma);
    if (!tame.tame) throw MathError(ErrorCode::WildRamification, tame.witness);
  }
}

std::optional<Weight1Solution> solve_weight1_flat(const Correspondence& c) {
  require_flat_search_domain(c);
  const Field f = c.field();
  const Polynomial& s1 = c.sigma1().body().num();
  const Polynomial& s2 = c.sigma2().body().num();
  const Scalar lambda = Scalar::from_integer(c.d1(), f) / Scalar::from_integer(c.d2(), f);
  const Polynomial ds1 = s1.derivative();
  const Polynomial ds2 = s2.derivative();

  const Polynomial u = ds1 * s2 - lambda * (s1 * ds2);
  const Polynomial v = ds1 - lambda * ds2;
  DivRem qr = divrem(u, v);
  if (!qr.remainder.is_zero() || qr.quotient.degree() > 0) return std::nullopt;
  return Weight1Solution{qr.quotient.coeff(0), lambda};
}

std::optional<Weight2Solution> solve_weight2_flat(const Correspondence& c) {
  require_flat_search_domain(c);
  const Field f = c.field();
  const Polynomial& s1 = c.sigma1().body().num();
  const Polynomial& s2 = c.sigma2().body().num();
  const Scalar ratio = Scalar::from_integer(c.d1(), f) / Scalar::from_integer(c.d2(), f);
  const Scalar lambda = ratio * ratio;
  const Polynomial d1sq = s1.derivative().pow(2);
  const Polynomial d2sq = lambda * s2.derivative().pow(2);

  // d1sq (s2^2 - s s2 + q) - d2sq (s1^2 - s s1 + q) = a + s b + q c.
  const Polynomial a = d1sq * s2 * s2 - d2sq * s1 * s1;
  const Polynomial b = d2sq * s1 - d1sq * s2;
  const Polynomial cq = d1sq - d2sq;

  const std::size_t rows = static_cast<std::size_t>(std::max({a.degree(), b.degree(), cq.degree(), 0L})) + 1;
  std::vector<std::vector<Scalar>> matrix;
  std::vector<Scalar> rhs;
  matrix.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    matrix.push_back({b.coeff(i), cq.coeff(i)});
    rhs.push_back(-a.coeff(i));
  }
  LinearSolution sol = solve_linear_system(std::move(matrix), std::move(rhs), f);
  if (sol.kind != LinearSolution::Kind::Unique) return std::nullopt;
  const Scalar& s = sol.values[0];
  const Scalar& q = sol.values[1];
  const bool degenerate = s * s == Scalar::from_integer(4, f) * q;
  return Weight2Solution{s, q, lambda, degenerate};
}

GroupReport find_primitive(const Correspondence& c) {
  require_flat_search_domain(c);
  GroupReport report{std::nullopt, c.d1() >= 14 * c.d2()};
  if (auto w1 = solve_weight1_flat(c)) {
    report.primitive = Primitive{DifferentialForm::flat_weight1(w1->a), 1, w1->lambda, Weight1Flat{w1->a}};
    return report;
  }
  auto w2 = solve_weight2_flat(c);
  if (!w2) return report;
  if (!w2->degenerate) {
    report.primitive =
        Primitive{DifferentialForm::flat_weight2(w2->s, w2->q), 2, w2->lambda, Weight2Flat{w2->s, w2->q}};
    return report;
  }
  // Double root: the class is a square of dt/(t - s/2). Characteristic 2 cannot halve s.
  const Field f = c.field();
  if (f.characteristic() == 2) return report;
  const Scalar a = w2->s / Scalar::from_integer(2, f);
  DifferentialForm root = DifferentialForm::flat_weight1(a);
  if (auto lambda = semi_invariance_ratio(c, root))
    report.primitive = Primitive{std::move(root), 1, *lambda, Weight1Square{a}};
  return report;
}

}  // namespace corrforms
