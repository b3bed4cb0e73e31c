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

#include "corrforms/linear_system.hpp"

#include <utility>

namespace corrforms {

LinearSolution solve_linear_system(std::vector<std::vector<Scalar>> matrix, std::vector<Scalar> rhs, Field field) {
  const std::size_t rows = matrix.size();
  if (rhs.size() != rows) throw MathError(ErrorCode::InvalidArgument, "row count differs from right-hand side");
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  for (const auto& row : matrix)
    if (row.size() != cols) throw MathError(ErrorCode::InvalidArgument, "ragged coefficient matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && matrix[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(matrix[pivot], matrix[r]);
    std::swap(rhs[pivot], rhs[r]);
    const Scalar inv = matrix[r][col].inverse();
    for (std::size_t j = col; j < cols; ++j) matrix[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || matrix[i][col].is_zero()) continue;
      const Scalar factor = matrix[i][col];
      for (std::size_t j = col; j < cols; ++j) matrix[i][j] -= factor * matrix[r][j];
      rhs[i] -= factor * rhs[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return {LinearSolution::Kind::Inconsistent, {}};
  if (pivot_cols.size() < cols) return {LinearSolution::Kind::Underdetermined, {}};

  std::vector<Scalar> values(cols, Scalar::zero(field));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) values[pivot_cols[i]] = rhs[i];
  return {LinearSolution::Kind::Unique, std::move(values)};
}

}  // namespace corrforms
