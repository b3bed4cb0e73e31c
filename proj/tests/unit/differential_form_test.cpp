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

#include "random_objects.hpp"

namespace corrforms {
namespace {

using testing::form;
using testing::kQ;
using testing::P;
using testing::R;
using testing::Rng;
using testing::S;

TEST(Pullback, Examples) {
  for (unsigned m = 1; m <= 7; ++m) {
    const RationalMap tm(Polynomial::monomial(S(1), m));
    EXPECT_EQ(pullback(tm, testing::dlog()), testing::dlog().scaled(S(static_cast<long>(m))));
  }
  const DifferentialForm w = form(P({1, 2}), P({3, 0, 1}), 3);
  EXPECT_EQ(pullback(RationalMap::identity(kQ), w), w);
  EXPECT_EQ(pullback(RationalMap(P({-2, 0, 1})), testing::cheb_form()), testing::cheb_form().scaled(S(4)));
  try {
    (void)pullback(RationalMap(P({0, 0, 0, 1}, Field::prime(3))), testing::dlog(Field::prime(3)));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inseparable);
  }
}

TEST(Pullback, MatchesPointwiseOracle) {
  Rng rng(67);
  for (Field f : {kQ, Field::prime(101)}) {
    for (int i = 0; i < 60; ++i) {
      const RationalMap sigma = testing::random_map(rng, f, 4, i % 2 == 0);
      const DifferentialForm w = testing::random_form(rng, f, static_cast<int>(rng.integer(1, 3)));
      const DifferentialForm pulled = pullback(sigma, w);
      const Scalar x = rng.scalar(f);
      const auto sx = testing::eval(sigma.body(), x);
      if (!sx) continue;
      const auto wx = testing::eval(w.coeff(), *sx);
      if (!wx) continue;
      const Scalar expected = *wx * testing::taylor_derivative(sigma.body(), x).pow(w.weight());
      EXPECT_EQ(testing::eval(pulled.coeff(), x), expected);
    }
  }
}

TEST(Pullback, IsFunctorial) {
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    const RationalMap sigma = testing::random_map(rng, kQ, 3, true);
    const RationalMap tau = testing::random_map(rng, kQ, 3, true);
    const DifferentialForm w = testing::random_form(rng, kQ, static_cast<int>(rng.integer(1, 3)));
    EXPECT_EQ(pullback(compose(sigma, tau), w), pullback(tau, pullback(sigma, w)));
  }
}

TEST(DivisorOfForm, Examples) {
  const Divisor dlog = divisor_of(testing::dlog());
  ASSERT_EQ(dlog.affine().size(), 1u);
  EXPECT_EQ(dlog.affine()[0], (DivisorComponent{P({0, 1}), -1}));
  EXPECT_EQ(dlog.at_infinity(), -1);
  EXPECT_EQ(conductor(testing::dlog()), 2u);

  const DifferentialForm dt = form(P({1}), P({1}), 1);
  EXPECT_TRUE(divisor_of(dt).affine().empty());
  EXPECT_EQ(divisor_of(dt).at_infinity(), -2);
  EXPECT_EQ(conductor(dt), 1u);

  const DifferentialForm w = form(P({1}), P({2, -3, 1}), 2);
  const Divisor dw = divisor_of(w);
  ASSERT_EQ(dw.affine().size(), 1u);
  EXPECT_EQ(dw.affine()[0], (DivisorComponent{P({2, -3, 1}), -1}));
  EXPECT_EQ(dw.at_infinity(), -2);
  EXPECT_EQ(conductor(w), 3u);

  EXPECT_EQ(conductor(form(P({1}), P({1, 0, 1}) * P({-3, 1}), 2)), 4u);
  EXPECT_EQ(affine_conductor(form(P({1}), P({1, 0, 1}) * P({-3, 1}), 2)), 3u);
}

TEST(DivisorOfForm, CanonicalDegree) {
  Rng rng(73);
  for (Field f : {kQ, Field::prime(5)}) {
    for (int i = 0; i < 100; ++i) {
      const int weight = static_cast<int>(rng.nonzero(-3, 3));
      const DifferentialForm w = testing::random_form(rng, f, weight);
      EXPECT_EQ(divisor_of(w).degree(), -2L * weight) << w.to_string();
    }
  }
}

TEST(DivisorOfForm, ScalingDoesNotMove) {
  const DifferentialForm w = form(P({1, 1}), P({0, 0, 1}), 2);
  EXPECT_EQ(divisor_of(w.scaled(S(-7))), divisor_of(w));
}

}  // namespace
}  // namespace corrforms
