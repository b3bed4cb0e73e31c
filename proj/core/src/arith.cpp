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

#include "corrforms/arith.hpp"

#include <cctype>
#include <utility>

namespace corrforms {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPLocalUnit: return "NotPLocalUnit";
    case ErrorCode::WildInput: return "WildInput";
    case ErrorCode::Inseparable: return "Inseparable";
    case ErrorCode::WildRamification: return "WildRamification";
    case ErrorCode::NormalizationRequired: return "NormalizationRequired";
    case ErrorCode::UnsupportedEqualDegrees: return "UnsupportedEqualDegrees";
    case ErrorCode::DegreeOrder: return "DegreeOrder";
    case ErrorCode::NotSemiInvariant: return "NotSemiInvariant";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p))
    throw MathError(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw MathError(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return ParseError("invalid rational literal \"" + std::string(text) + "\""); };
  std::size_t i = 0;
  std::string num;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') num.push_back('-');
    ++i;
  }
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    num.push_back(text[i++]);
    ++digits;
  }
  if (digits == 0) throw fail();
  mpz_class den = 1;
  if (i < text.size()) {
    if (text[i] != '/') throw fail();
    ++i;
    std::string d(text.substr(i));
    if (d.empty()) throw fail();
    for (char c : d)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
    den = mpz_class(d, 10);
    if (den == 0) throw fail();
  }
  return Rational(mpz_class(num, 10), den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of 0");
  return Rational(mpq_class(1 / value_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by 0");
  return Rational(mpq_class(a.value_ / b.value_));
}

std::string Rational::to_string() const { return value_.get_str(10); }

// ---------------------------------------------------------------- F_p

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  residue_ = static_cast<std::uint32_t>(r);
}

PrimeFieldElement::PrimeFieldElement(const mpz_class& value, std::uint32_t modulus) : modulus_(modulus) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus);
  residue_ = static_cast<std::uint32_t>(r.get_ui());
}

namespace {

void require_same_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  if (a.modulus() != b.modulus())
    throw MathError(ErrorCode::FieldMismatch,
                    "F_" + std::to_string(a.modulus()) + " vs F_" + std::to_string(b.modulus()));
}

}  // namespace

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw MathError(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(modulus_));
  std::int64_t r0 = modulus_, r1 = residue_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return PrimeFieldElement(s0, modulus_);
}

PrimeFieldElement PrimeFieldElement::operator-() const {
  return PrimeFieldElement(residue_ == 0 ? 0 : static_cast<std::int64_t>(modulus_) - residue_, modulus_);
}

PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require_same_modulus(a, b);
  return PrimeFieldElement(static_cast<std::int64_t>(a.residue_) + b.residue_, a.modulus_);
}

PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require_same_modulus(a, b);
  return PrimeFieldElement(static_cast<std::int64_t>(a.residue_) - b.residue_, a.modulus_);
}

PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require_same_modulus(a, b);
  std::uint64_t prod = static_cast<std::uint64_t>(a.residue_) * b.residue_ % a.modulus_;
  return PrimeFieldElement(static_cast<std::int64_t>(prod), a.modulus_);
}

PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
  require_same_modulus(a, b);
  return a * b.inverse();
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_integer(const mpz_class& n, Field field) {
  if (field.is_rational()) return Scalar(Rational(n));
  return Scalar(PrimeFieldElement(n, field.characteristic()));
}

Scalar Scalar::from_rational(const Rational& q, Field field) {
  if (field.is_rational()) return Scalar(q);
  const std::uint32_t p = field.characteristic();
  PrimeFieldElement den(q.denominator(), p);
  if (den.is_zero())
    throw MathError(ErrorCode::NotPLocalUnit, q.to_string() + " has denominator divisible by " + std::to_string(p));
  return Scalar(PrimeFieldElement(q.numerator(), p) / den);
}

Field Scalar::field() const {
  if (const auto* e = std::get_if<PrimeFieldElement>(&value_)) return Field(e->modulus());
  return Field::rationals();
}

bool Scalar::is_zero() const noexcept {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool Scalar::is_one() const { return *this == one(field()); }

namespace {

template <class Op>
Scalar combine(const std::variant<Rational, PrimeFieldElement>& a, const std::variant<Rational, PrimeFieldElement>& b,
               Op op) {
  if (a.index() != b.index()) throw MathError(ErrorCode::FieldMismatch, "rational combined with prime-field element");
  if (a.index() == 0) return Scalar(op(std::get<0>(a), std::get<0>(b)));
  return Scalar(op(std::get<1>(a), std::get<1>(b)));
}

}  // namespace

Scalar Scalar::inverse() const {
  return std::visit([](const auto& v) { return Scalar(v.inverse()); }, value_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& v) { return Scalar(-v); }, value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  return combine(a.value_, b.value_, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Scalar result = one(field());
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

// ---------------------------------------------------------------- theta_p

PrimeFieldElement theta_p(const Rational& x, std::uint32_t p) {
  Field::prime(p);
  PrimeFieldElement num(x.numerator(), p);
  PrimeFieldElement den(x.denominator(), p);
  if (num.is_zero() || den.is_zero())
    throw MathError(ErrorCode::NotPLocalUnit, x.to_string() + " is not a unit of Z_(" + std::to_string(p) + ")");
  return num / den;
}

}  // namespace corrforms
