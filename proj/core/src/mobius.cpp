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

#include "corrforms/mobius.hpp"

namespace corrforms {

MobiusTransform::MobiusTransform(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const Field f = a_.field();
  require_same_field(f, b_.field());
  require_same_field(f, c_.field());
  require_same_field(f, d_.field());
  if ((a_ * d_ - b_ * c_).is_zero()) throw MathError(ErrorCode::InvalidArgument, "Mobius transform with ad - bc = 0");
}

MobiusTransform MobiusTransform::identity(Field field) {
  return MobiusTransform(Scalar::one(field), Scalar::zero(field), Scalar::zero(field), Scalar::one(field));
}

MobiusTransform MobiusTransform::translation(const Scalar& shift) {
  const Field f = shift.field();
  return MobiusTransform(Scalar::one(f), shift, Scalar::zero(f), Scalar::one(f));
}

RationalMap MobiusTransform::as_map() const {
  const Field f = field();
  return RationalMap(RationalFunction(Polynomial(f, {b_, a_}), Polynomial(f, {d_, c_})));
}

RationalMap mobius_conjugate(const RationalMap& sigma, const MobiusTransform& phi) {
  require_same_field(sigma.field(), phi.field());
  return compose(phi.as_map(), compose(sigma, phi.inverse().as_map()));
}

}  // namespace corrforms
