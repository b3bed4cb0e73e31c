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

#include "corrforms/differential_form.hpp"

namespace corrforms {

DifferentialForm::DifferentialForm(RationalFunction coeff, int weight) : coeff_(std::move(coeff)), weight_(weight) {
  if (coeff_.is_zero()) throw MathError(ErrorCode::InvalidArgument, "differential form with zero coefficient");
  if (weight_ == 0) throw MathError(ErrorCode::InvalidArgument, "differential form of weight 0");
}

DifferentialForm DifferentialForm::flat_weight1(const Scalar& a) {
  const Field f = a.field();
  return DifferentialForm(RationalFunction(Polynomial::constant(Scalar::one(f)), Polynomial(f, {-a, Scalar::one(f)})),
                          1);
}

DifferentialForm DifferentialForm::flat_weight2(const Scalar& s, const Scalar& q) {
  const Field f = s.field();
  return DifferentialForm(
      RationalFunction(Polynomial::constant(Scalar::one(f)), Polynomial(f, {q, -s, Scalar::one(f)})), 2);
}

DifferentialForm DifferentialForm::scaled(const Scalar& c) const {
  return DifferentialForm(RationalFunction::constant(c) * coeff_, weight_);
}

std::string DifferentialForm::to_string() const {
  std::string w = weight_ == 1 ? "dt" : "(dt)^" + std::to_string(weight_);
  return coeff_.to_string() + " " + w;
}

DifferentialForm pullback(const RationalMap& sigma, const DifferentialForm& omega) {
  require_same_field(sigma.field(), omega.field());
  RationalFunction d = sigma.body().derivative();
  if (d.is_zero())
    throw MathError(ErrorCode::Inseparable, "pullback along " + sigma.body().to_string() + ", whose derivative is 0");
  return DifferentialForm(compose(omega.coeff(), sigma.body()) * d.pow(omega.weight()), omega.weight());
}

Divisor divisor_of(const DifferentialForm& omega) {
  const Polynomial& num = omega.coeff().num();
  const Polynomial& den = omega.coeff().den();
  const long at_inf = den.degree() - num.degree() - 2L * omega.weight();
  return Divisor::zeros_of(num) + Divisor::zeros_of(den, -1) + Divisor::at_infinity_only(omega.field(), at_inf);
}

std::size_t conductor(const DifferentialForm& omega) { return divisor_of(omega).support_size(); }

std::size_t affine_conductor(const DifferentialForm& omega) { return divisor_of(omega).affine_support_size(); }

}  // namespace corrforms
