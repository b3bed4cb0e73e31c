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

#include "corrforms/rational_function.hpp"

#include <algorithm>

namespace corrforms {

RationalFunction::RationalFunction(Field field)
    : num_(field), den_(Polynomial::constant(Scalar::one(field))) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(Scalar::one(num_.field()))) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  require_same_field(num.field(), den.field());
  if (den.is_zero()) throw MathError(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial(num.field());
    den_ = Polynomial::constant(Scalar::one(num.field()));
    return;
  }
  Polynomial g = gcd_monic(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  Scalar lead_inv = den.leading().inverse();
  num_ = lead_inv * num;
  den_ = lead_inv * den;
}

std::optional<Scalar> RationalFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of the zero function");
  Scalar lead_inv = num_.leading().inverse();
  return RationalFunction(lead_inv * den_, lead_inv * num_, Reduced{});
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const auto e = static_cast<unsigned>(exponent);
  return RationalFunction(num_.pow(e), den_.pow(e), Reduced{});
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction compose(const RationalFunction& outer, const RationalFunction& inner) {
  require_same_field(outer.field(), inner.field());
  const Field f = outer.field();
  const Polynomial& p = inner.num();
  const Polynomial& q = inner.den();
  const auto n = static_cast<std::size_t>(std::max({outer.num().degree(), outer.den().degree(), 0L}));
  // Homogenise: h(P, Q) = sum c_i P^i Q^(n-i).
  std::vector<Polynomial> p_pow{Polynomial::constant(Scalar::one(f))};
  std::vector<Polynomial> q_pow{Polynomial::constant(Scalar::one(f))};
  for (std::size_t i = 1; i <= n; ++i) {
    p_pow.push_back(p_pow.back() * p);
    q_pow.push_back(q_pow.back() * q);
  }
  auto homogenise = [&](const Polynomial& h) {
    Polynomial acc(f);
    const auto c = h.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) acc += c[i] * (p_pow[i] * q_pow[n - i]);
    return acc;
  };
  return RationalFunction(homogenise(outer.num()), homogenise(outer.den()));
}

RationalMap::RationalMap(RationalFunction body) : body_(std::move(body)) {
  if (body_.is_constant())
    throw MathError(ErrorCode::InvalidArgument, "a rational map must be nonconstant");
  degree_ = static_cast<unsigned>(std::max(body_.num().degree(), body_.den().degree()));
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  return RationalMap(compose(outer.body(), inner.body()));
}

}  // namespace corrforms
