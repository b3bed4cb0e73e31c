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

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace corrforms {
namespace {

using testing::eval;
using testing::kQ;
using testing::P;
using testing::R;
using testing::Rng;
using testing::S;

RationalFunction random_function(Rng& rng, Field f) {
  return R(rng.nonzero_polynomial(f, 4), rng.nonzero_polynomial(f, 3));
}

TEST(RationalFunction, ReducesToLowestTerms) {
  const RationalFunction r = R(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.num(), P({1, 1}));
  const RationalFunction s = R(P({2}), P({0, 4}));
  EXPECT_EQ(s.num(), Polynomial::constant(testing::Sq(1, 2)));
  EXPECT_EQ(s.den(), P({0, 1}));
  EXPECT_EQ(R(P({0, 2}), P({0, 0, 6})), R(P({1}), P({0, 3})));
  EXPECT_THROW((void)R(P({1}), P({0})), MathError);
}

TEST(RationalFunction, ArithmeticMatchesPointwise) {
  Rng rng(47);
  for (Field f : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const RationalFunction a = random_function(rng, f);
      const RationalFunction b = random_function(rng, f);
      const Scalar x = rng.scalar(f);
      const auto ax = eval(a, x), bx = eval(b, x);
      if (!ax || !bx) continue;
      EXPECT_EQ(eval(a + b, x), *ax + *bx);
      EXPECT_EQ(eval(a - b, x), *ax - *bx);
      EXPECT_EQ(eval(a * b, x), *ax * *bx);
      if (!bx->is_zero()) EXPECT_EQ(eval(a / b, x), *ax / *bx);
    }
  }
}

TEST(RationalFunction, DerivativeMatchesTaylorOracle) {
  Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction a = random_function(rng, kQ);
    const Scalar x = rng.scalar(kQ);
    if (a.den().evaluate(x).is_zero()) continue;
    EXPECT_EQ(eval(a.derivative(), x), testing::taylor_derivative(a, x));
  }
}

TEST(RationalFunction, CompositionMatchesPointwise) {
  Rng rng(59);
  for (int i = 0; i < 60; ++i) {
    const RationalFunction outer = random_function(rng, kQ);
    const RationalFunction inner = random_function(rng, kQ);
    const Scalar x = rng.scalar(kQ);
    const auto ix = eval(inner, x);
    if (!ix) continue;
    const auto ox = eval(outer, *ix);
    if (!ox) continue;
    EXPECT_EQ(eval(compose(outer, inner), x), *ox);
  }
}

TEST(RationalFunction, PowersAndInverse) {
  const RationalFunction r = R(P({1, 1}), P({0, 1}));
  EXPECT_EQ(r.pow(-2), R(P({0, 0, 1}), P({1, 2, 1})));
  EXPECT_EQ(r * r.inverse(), R(P({1}), P({1})));
  EXPECT_THROW((void)R(P({0}), P({1})).inverse(), MathError);
  EXPECT_EQ(R(P({3}), P({1})).constant_value(), S(3));
  EXPECT_FALSE(r.constant_value().has_value());
}

TEST(RationalMap, DegreeAndValidation) {
  EXPECT_EQ(RationalMap(R(P({1, 0, 1}), P({0, 1}))).degree(), 2u);
  EXPECT_EQ(RationalMap(R(P({1}), P({0, 0, 0, 1}))).degree(), 3u);
  EXPECT_EQ(RationalMap(P({0, 0, 0, 0, 1})).degree(), 4u);
  EXPECT_THROW((void)RationalMap(R(P({0, 2}), P({0, 1}))), MathError);
  EXPECT_FALSE(RationalMap(P({0, 0, 0, 1}, Field::prime(3))).is_separable());
  EXPECT_TRUE(RationalMap(P({0, 1, 0, 1}, Field::prime(3))).is_separable());
}

TEST(RationalMap, CompositionMultipliesDegrees) {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const RationalMap a(R(rng.polynomial(kQ, static_cast<unsigned>(rng.integer(1, 3))), rng.nonzero_polynomial(kQ, 2)));
    const RationalMap b(R(rng.polynomial(kQ, static_cast<unsigned>(rng.integer(1, 3))), rng.nonzero_polynomial(kQ, 2)));
    EXPECT_EQ(compose(a, b).degree(), a.degree() * b.degree());
  }
  const RationalMap id = RationalMap::identity(kQ);
  const RationalMap s(P({-2, 0, 1}));
  EXPECT_EQ(compose(id, s), s);
  EXPECT_EQ(compose(s, id), s);
}

}  // namespace
}  // namespace corrforms
