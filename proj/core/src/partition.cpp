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

#include "partition.hpp"

namespace corrforms::detail {

std::vector<LabeledCell> refine(const std::vector<LabeledCell>& cells,
                                const std::vector<std::pair<Polynomial, long>>& layer, std::size_t depth) {
  std::vector<Polynomial> pending;
  pending.reserve(layer.size());
  for (const auto& entry : layer) pending.push_back(entry.first.monic());

  std::vector<LabeledCell> out;
  for (const LabeledCell& cell : cells) {
    Polynomial rest = cell.points;
    for (std::size_t j = 0; j < layer.size() && rest.degree() > 0; ++j) {
      if (pending[j].degree() <= 0) continue;
      Polynomial g = gcd_monic(rest, pending[j]);
      if (g.degree() <= 0) continue;
      LabeledCell split{g, cell.labels};
      split.labels.push_back(layer[j].second);
      out.push_back(std::move(split));
      rest = exact_quotient(rest, g);
      pending[j] = exact_quotient(pending[j], g);
    }
    if (rest.degree() > 0) {
      LabeledCell kept{rest.monic(), cell.labels};
      kept.labels.push_back(0);
      out.push_back(std::move(kept));
    }
  }
  for (std::size_t j = 0; j < layer.size(); ++j) {
    if (pending[j].degree() <= 0) continue;
    LabeledCell fresh{pending[j], std::vector<long>(depth, 0)};
    fresh.labels.push_back(layer[j].second);
    out.push_back(std::move(fresh));
  }
  return out;
}

}  // namespace corrforms::detail
