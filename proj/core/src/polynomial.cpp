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

#include "corrforms/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace corrforms {

void require_same_field(Field a, Field b) {
  if (a != b) throw MathError(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

Polynomial::Polynomial(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const Scalar& c : coeffs_) require_same_field(c.field(), field_);
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> coeffs(k + 1, Scalar::zero(c.field()));
  coeffs[k] = c;
  return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::variable(Field field) { return monomial(Scalar::one(field), 1); }

Polynomial Polynomial::from_integers(Field field, std::initializer_list<long> coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (long c : coeffs) out.push_back(Scalar::from_integer(c, field));
  return Polynomial(field, std::move(out));
}

Polynomial Polynomial::from_rationals(Field field, std::span<const Rational> coeffs) {
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (const Rational& c : coeffs) out.push_back(Scalar::from_rational(c, field));
  return Polynomial(field, std::move(out));
}

Scalar Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw MathError(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (Scalar& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  const Polynomial& longer = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
  const Polynomial& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
  Polynomial out(longer);
  for (std::size_t i = 0; i < shorter.coeffs_.size(); ++i) out.coeffs_[i] += shorter.coeffs_[i];
  out.trim();
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  require_same_field(c.field(), a.field_);
  if (c.is_zero()) return Polynomial(a.field_);
  Polynomial out(a);
  for (Scalar& x : out.coeffs_) x *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Scalar::one(field_));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  require_same_field(x.field(), field_);
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(Scalar::from_integer(static_cast<long>(i), field_) * coeffs_[i]);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::hasse_derivative(unsigned k) const {
  if (coeffs_.size() <= k) return Polynomial(field_);
  std::vector<Scalar> out;
  out.reserve(coeffs_.size() - k);
  mpz_class binom;
  for (std::size_t j = k; j < coeffs_.size(); ++j) {
    mpz_bin_uiui(binom.get_mpz_t(), j, k);
    out.push_back(Scalar::from_integer(binom, field_) * coeffs_[j]);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::reversed(std::size_t n) const {
  if (degree() > static_cast<long>(n))
    throw MathError(ErrorCode::InvalidArgument, "reversal length below the degree");
  std::vector<Scalar> out(n + 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[n - i] = coeffs_[i];
  return Polynomial(field_, std::move(out));
}

unsigned Polynomial::order_at(const Scalar& c) const {
  if (is_zero()) throw MathError(ErrorCode::InvalidArgument, "order of the zero polynomial");
  const Polynomial linear(field_, {-c, Scalar::one(field_)});
  unsigned order = 0;
  Polynomial cur = *this;
  for (;;) {
    DivRem qr = divrem(cur, linear);
    if (!qr.remainder.is_zero()) return order;
    cur = std::move(qr.quotient);
    ++order;
  }
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool negative = field_.is_rational() && c.as_rational().sign() < 0;
    if (negative) text.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = text == "1";
    if (i == 0 || !unit) os << text;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  const Scalar lead_inv = b.leading().inverse();
  const auto bd = static_cast<std::size_t>(b.degree());
  std::vector<Scalar> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Scalar> quot(rem.size() - bd, Scalar::zero(f));
  const auto bc = b.coefficients();
  for (std::size_t i = rem.size(); i-- > bd;) {
    if (rem[i].is_zero()) continue;
    Scalar q = rem[i] * lead_inv;
    const std::size_t shift = i - bd;
    for (std::size_t j = 0; j <= bd; ++j) rem[shift + j] -= q * bc[j];
    quot[shift] = std::move(q);
  }
  rem.resize(bd);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  DivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero())
    throw MathError(ErrorCode::InvalidArgument, "inexact division of " + a.to_string() + " by " + b.to_string());
  return std::move(qr.quotient);
}

Polynomial gcd_monic(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) throw MathError(ErrorCode::InvalidArgument, "gcd(0, 0) is undefined");
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divrem(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial compose(const Polynomial& outer, const Polynomial& inner) {
  require_same_field(outer.field(), inner.field());
  Polynomial acc(outer.field());
  const auto c = outer.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * inner + Polynomial::constant(c[i]);
  return acc;
}

Polynomial reduce_mod(const Polynomial& a, Field target) {
  if (!a.field().is_rational()) {
    require_same_field(a.field(), target);
    return a;
  }
  std::vector<Scalar> out;
  out.reserve(a.coefficients().size());
  for (const Scalar& c : a.coefficients()) out.push_back(Scalar::from_rational(c.as_rational(), target));
  return Polynomial(target, std::move(out));
}

}  // namespace corrforms
