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

#include "corrforms/divisor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "corrforms/squarefree.hpp"
#include "partition.hpp"

namespace corrforms {

namespace {

// Merges cells with equal total multiplicity and drops the zero ones.
std::vector<DivisorComponent> normalise(const std::vector<detail::LabeledCell>& cells) {
  std::map<long, Polynomial> by_mult;
  for (const auto& cell : cells) {
    long m = 0;
    for (long l : cell.labels) m += l;
    if (m == 0) continue;
    auto [it, inserted] = by_mult.try_emplace(m, cell.points);
    if (!inserted) it->second *= cell.points;
  }
  std::vector<DivisorComponent> out;
  out.reserve(by_mult.size());
  for (auto& [m, points] : by_mult) out.push_back({points.monic(), m});
  return out;
}

std::vector<detail::LabeledCell> as_cells(const std::vector<DivisorComponent>& affine) {
  std::vector<detail::LabeledCell> cells;
  for (const auto& c : affine) cells.push_back({c.points, {c.multiplicity}});
  return cells;
}

}  // namespace

Divisor::Divisor(Field field, std::vector<DivisorComponent> affine, long at_infinity)
    : field_(field), at_infinity_(at_infinity) {
  std::vector<detail::LabeledCell> cells;
  std::size_t depth = 0;
  for (DivisorComponent& c : affine) {
    require_same_field(c.points.field(), field);
    if (c.multiplicity == 0 || c.points.degree() <= 0) continue;
    if (radical(c.points).degree() != c.points.degree())
      throw MathError(ErrorCode::InvalidArgument, "divisor component " + c.points.to_string() + " is not squarefree");
    cells = detail::refine(cells, {{c.points, c.multiplicity}}, depth++);
  }
  affine_ = normalise(cells);
}

Divisor Divisor::zeros_of(const Polynomial& f, long scale) {
  Divisor out(f.field());
  if (scale == 0 || f.degree() <= 0) return out;
  for (const PointClass& c : split_by_order(radical(f), f))
    out.affine_.push_back({c.points, scale * static_cast<long>(c.order)});
  std::sort(out.affine_.begin(), out.affine_.end(),
            [](const auto& x, const auto& y) { return x.multiplicity < y.multiplicity; });
  return out;
}

long Divisor::degree() const {
  long d = at_infinity_;
  for (const auto& c : affine_) d += c.multiplicity * c.points.degree();
  return d;
}

std::size_t Divisor::support_size() const { return affine_support_size() + (at_infinity_ != 0 ? 1 : 0); }

std::size_t Divisor::affine_support_size() const {
  std::size_t n = 0;
  for (const auto& c : affine_) n += static_cast<std::size_t>(c.points.degree());
  return n;
}

long Divisor::affine_degree() const { return degree() - at_infinity_; }

Divisor operator+(const Divisor& a, const Divisor& b) {
  require_same_field(a.field_, b.field_);
  std::vector<std::pair<Polynomial, long>> layer;
  for (const auto& c : b.affine_) layer.emplace_back(c.points, c.multiplicity);
  Divisor out(a.field_);
  out.affine_ = normalise(detail::refine(as_cells(a.affine_), layer, 1));
  out.at_infinity_ = a.at_infinity_ + b.at_infinity_;
  return out;
}

Divisor operator*(long k, const Divisor& a) {
  Divisor out(a.field_);
  if (k == 0) return out;
  out.at_infinity_ = k * a.at_infinity_;
  out.affine_ = a.affine_;
  for (auto& c : out.affine_) c.multiplicity *= k;
  if (k < 0) std::reverse(out.affine_.begin(), out.affine_.end());
  return out;
}

std::string Divisor::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : affine_) {
    os << (first ? "" : " + ") << c.multiplicity << "*[" << c.points.to_string() << "]";
    first = false;
  }
  if (at_infinity_ != 0 || first) os << (first ? "" : " + ") << at_infinity_ << "*[inf]";
  return os.str();
}

}  // namespace corrforms
