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

using testing::kQ;
using testing::Rng;
using testing::S;

using Matrix = std::vector<std::vector<Scalar>>;

TEST(LinearSystem, UniqueSolution) {
  // x + y = 3, x - y = 1.
  const LinearSolution s = solve_linear_system({{S(1), S(1)}, {S(1), S(-1)}}, {S(3), S(1)}, kQ);
  ASSERT_EQ(s.kind, LinearSolution::Kind::Unique);
  EXPECT_EQ(s.values, (std::vector<Scalar>{S(2), S(1)}));
}

TEST(LinearSystem, OverdeterminedConsistentAndInconsistent) {
  const Matrix m{{S(1), S(0)}, {S(0), S(1)}, {S(1), S(1)}};
  const LinearSolution ok = solve_linear_system(m, {S(1), S(2), S(3)}, kQ);
  ASSERT_EQ(ok.kind, LinearSolution::Kind::Unique);
  EXPECT_EQ(ok.values, (std::vector<Scalar>{S(1), S(2)}));
  EXPECT_EQ(solve_linear_system(m, {S(1), S(2), S(4)}, kQ).kind, LinearSolution::Kind::Inconsistent);
}

TEST(LinearSystem, Underdetermined) {
  EXPECT_EQ(solve_linear_system({{S(1), S(1)}, {S(2), S(2)}}, {S(1), S(2)}, kQ).kind,
            LinearSolution::Kind::Underdetermined);
  EXPECT_EQ(solve_linear_system({{S(1), S(1)}, {S(2), S(2)}}, {S(1), S(3)}, kQ).kind,
            LinearSolution::Kind::Inconsistent);
}

TEST(LinearSystem, RandomSystemsSatisfyEquations) {
  Rng rng(109);
  for (Field f : {kQ, Field::prime(7)}) {
    for (int i = 0; i < 60; ++i) {
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
      const std::size_t rows = n + static_cast<std::size_t>(rng.integer(0, 2));
      std::vector<Scalar> x(n);
      for (auto& v : x) v = rng.scalar(f);
      Matrix m(rows, std::vector<Scalar>(n));
      std::vector<Scalar> rhs(rows, Scalar::zero(f));
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          m[r][c] = rng.scalar(f);
          rhs[r] += m[r][c] * x[c];
        }
      }
      const LinearSolution s = solve_linear_system(m, rhs, f);
      ASSERT_NE(s.kind, LinearSolution::Kind::Inconsistent);
      if (s.kind == LinearSolution::Kind::Unique) EXPECT_EQ(s.values, x);
    }
  }
}

}  // namespace
}  // namespace corrforms
