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

#pragma once

// Common refinement of labelled sets of geometric points.

#include <utility>
#include <vector>

#include "corrforms/polynomial.hpp"

namespace corrforms::detail {

struct LabeledCell {
  Polynomial points;          // monic squarefree, nonconstant
  std::vector<long> labels;   // one entry per refinement layer, 0 when absent
};

/// Splits every cell against a new layer of pairwise coprime (points, label) entries.
/// Points only in the layer become new cells with 0 in all earlier positions.
std::vector<LabeledCell> refine(const std::vector<LabeledCell>& cells,
                                const std::vector<std::pair<Polynomial, long>>& layer, std::size_t depth);

}  // namespace corrforms::detail
