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

#include "corrforms/decompose.hpp"

#include <numeric>

#include "corrforms/squarefree.hpp"

namespace corrforms {

namespace {

struct Cell {
  Polynomial points;
  unsigned k;  // exponent in sigma1
  unsigned l;  // exponent in sigma2
};

std::optional<Scalar> constant_quotient(const Polynomial& a, const Polynomial& b) {
  DivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero() || qr.quotient.degree() != 0) return std::nullopt;
  return qr.quotient.coeff(0);
}

}  // namespace

std::optional<Decomposition> decompose_power_pair(const Polynomial& sigma1, const Polynomial& sigma2) {
  require_same_field(sigma1.field(), sigma2.field());
  if (!sigma1.field().is_rational())
    throw MathError(ErrorCode::UnsupportedCharacteristic,
                    "power-pair decomposition runs over Q only, got " + sigma1.field().to_string());
  if (sigma1.degree() < 1 || sigma2.degree() < 1)
    throw MathError(ErrorCode::InvalidArgument, "both maps must be nonconstant");

  const SquarefreeDecomposition sq1 = squarefree_decompose(sigma1);
  const SquarefreeDecomposition sq2 = squarefree_decompose(sigma2);

  std::vector<Cell> cells;
  std::vector<long> covered2(sq2.parts.size(), 0);
  for (const SquarefreePart& a : sq1.parts) {
    long covered = 0;
    for (std::size_t j = 0; j < sq2.parts.size(); ++j) {
      Polynomial g = gcd_monic(a.factor, sq2.parts[j].factor);
      if (g.degree() <= 0) continue;
      covered += g.degree();
      covered2[j] += g.degree();
      cells.push_back({std::move(g), a.exponent, sq2.parts[j].exponent});
    }
    // Roots of sigma1 that are not roots of sigma2.
    if (covered != a.factor.degree()) return std::nullopt;
  }
  for (std::size_t j = 0; j < sq2.parts.size(); ++j)
    if (covered2[j] != sq2.parts[j].factor.degree()) return std::nullopt;

  const unsigned g0 = std::gcd(cells.front().k, cells.front().l);
  const unsigned m = cells.front().k / g0;
  const unsigned h = cells.front().l / g0;
  Polynomial sigma = Polynomial::constant(Scalar::one(sigma1.field()));
  for (const Cell& cell : cells) {
    if (cell.k * h != cell.l * m) return std::nullopt;
    sigma *= cell.points.pow(cell.k / m);
  }

  auto lambda1 = constant_quotient(sigma1, sigma.pow(m));
  auto lambda2 = constant_quotient(sigma2, sigma.pow(h));
  if (!lambda1 || !lambda2) return std::nullopt;
  return Decomposition{std::move(sigma), m, h, std::move(*lambda1), std::move(*lambda2)};
}

}  // namespace corrforms
