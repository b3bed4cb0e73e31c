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

#include "corrforms/ramification.hpp"

#include <map>
#include <stdexcept>

#include "partition.hpp"

namespace corrforms {

namespace {

// Coefficient of eps^k in N(t+eps) D(t) - N(t) D(t+eps).
Polynomial wronskian(const Polynomial& n, const Polynomial& d, unsigned k) {
  return n.hasse_derivative(k) * d - n * d.hasse_derivative(k);
}

// D^k P(N/D) with k = deg P: vanishes exactly at affine preimages of the roots of P.
Polynomial preimage_polynomial(const RationalMap& sigma, const Polynomial& p) {
  const Polynomial& n = sigma.body().num();
  const Polynomial& d = sigma.body().den();
  const auto c = p.coefficients();
  const std::size_t k = c.size() - 1;
  std::vector<Polynomial> n_pow{Polynomial::constant(Scalar::one(p.field()))};
  std::vector<Polynomial> d_pow{n_pow.front()};
  for (std::size_t i = 1; i <= k; ++i) {
    n_pow.push_back(n_pow.back() * n);
    d_pow.push_back(d_pow.back() * d);
  }
  Polynomial acc(p.field());
  for (std::size_t i = 0; i <= k; ++i)
    if (!c[i].is_zero()) acc += c[i] * (n_pow[i] * d_pow[k - i]);
  return acc;
}

std::vector<std::pair<Polynomial, long>> as_layer(const Divisor& d) {
  std::vector<std::pair<Polynomial, long>> out;
  for (const auto& c : d.affine()) out.emplace_back(c.points, c.multiplicity);
  return out;
}

}  // namespace

RamificationProfile ramification_profile(const RationalMap& sigma) {
  const Polynomial& n = sigma.body().num();
  const Polynomial& d = sigma.body().den();
  const unsigned deg = sigma.degree();
  const Polynomial w = wronskian(n, d, 1);
  if (w.is_zero())
    throw MathError(ErrorCode::Inseparable, sigma.body().to_string() + " has vanishing derivative");

  std::map<unsigned, Polynomial> by_index;
  auto add = [&](const Polynomial& points, unsigned e) {
    auto [it, inserted] = by_index.try_emplace(e, points);
    if (!inserted) it->second *= points;
  };

  // Finite critical points that are not poles: roots of W; e = first k with W_k != 0.
  Polynomial cur = radical(w);
  if (d.degree() > 0) cur = exact_quotient(cur, gcd_monic(cur, d));
  for (unsigned k = 2; cur.degree() > 0; ++k) {
    if (k > deg) throw std::logic_error("ramification index exceeds the degree");
    Polynomial wk = wronskian(n, d, k);
    Polynomial next = wk.is_zero() ? cur : gcd_monic(cur, wk);
    if (next.degree() < cur.degree()) add(exact_quotient(cur, next), k);
    cur = std::move(next);
  }

  // Poles: the chart 1/sigma = D/N vanishes to order ord_x(D).
  if (d.degree() > 0)
    for (const PointClass& c : split_by_order(radical(d), d))
      if (c.order >= 2) add(c.points, c.order);

  RamificationProfile out;
  for (auto& [e, points] : by_index) out.affine.push_back({points.monic(), e});

  // Infinity through s = 1/t.
  if (n.degree() > d.degree()) {
    out.index_at_infinity = static_cast<unsigned>(n.degree() - d.degree());
  } else {
    const Polynomial nr = n.reversed(deg);
    const Polynomial dr = d.reversed(deg);
    unsigned e = 0;
    for (unsigned k = 1; k <= deg && e == 0; ++k)
      if (!(nr.coeff(k) * dr.coeff(0) - nr.coeff(0) * dr.coeff(k)).is_zero()) e = k;
    if (e == 0) throw std::logic_error("ramification index at infinity exceeds the degree");
    out.index_at_infinity = e;
  }
  return out;
}

TamenessReport is_tame(const RationalMap& sigma) {
  if (!sigma.is_separable())
    return {false, "inseparable: derivative of " + sigma.body().to_string() + " vanishes identically"};
  const std::uint32_t p = sigma.field().characteristic();
  if (p == 0) return {true, {}};
  const RamificationProfile profile = ramification_profile(sigma);
  for (const PointClass& c : profile.affine)
    if (c.order % p == 0)
      return {false, "roots of " + c.points.to_string() + " with ramification index " + std::to_string(c.order)};
  if (profile.index_at_infinity % p == 0)
    return {false, "infinity with ramification index " + std::to_string(profile.index_at_infinity)};
  return {true, {}};
}

Divisor ramification_divisor(const RationalMap& sigma) {
  TamenessReport tame = is_tame(sigma);
  if (!tame.tame) {
    if (!sigma.is_separable()) throw MathError(ErrorCode::Inseparable, tame.witness);
    throw MathError(ErrorCode::WildRamification, tame.witness);
  }
  const RamificationProfile profile = ramification_profile(sigma);
  std::vector<DivisorComponent> affine;
  for (const PointClass& c : profile.affine) affine.push_back({c.points, static_cast<long>(c.order) - 1});
  return Divisor(sigma.field(), std::move(affine), static_cast<long>(profile.index_at_infinity) - 1);
}

Divisor pullback(const RationalMap& sigma, const Divisor& div) {
  require_same_field(sigma.field(), div.field());
  const Field f = sigma.field();
  const Polynomial& n = sigma.body().num();
  const Polynomial& d = sigma.body().den();
  const long deg = sigma.degree();
  Divisor out(f);
  for (const DivisorComponent& c : div.affine()) {
    Polynomial r = preimage_polynomial(sigma, c.points);
    out = out + Divisor::zeros_of(r, c.multiplicity) +
          Divisor::at_infinity_only(f, c.multiplicity * (deg * c.points.degree() - r.degree()));
  }
  if (const long m = div.at_infinity(); m != 0) {
    out = out + Divisor::zeros_of(d, m);
    if (n.degree() > d.degree()) out = out + Divisor::at_infinity_only(f, m * (n.degree() - d.degree()));
  }
  return out;
}

bool ord_identity_check(const RationalMap& sigma, const DifferentialForm& omega) {
  require_same_field(sigma.field(), omega.field());
  const long nu = omega.weight();
  const Polynomial& n = sigma.body().num();
  const Polynomial& d = sigma.body().den();

  const Divisor upstairs = divisor_of(pullback(sigma, omega));
  const RamificationProfile profile = ramification_profile(sigma);
  const Divisor downstairs = divisor_of(omega);

  std::vector<std::pair<Polynomial, long>> index_layer;
  for (const PointClass& c : profile.affine) index_layer.emplace_back(c.points, static_cast<long>(c.order) - 1);

  // ord_{sigma(x)} omega, constant on the preimage of each component.
  std::vector<std::pair<Polynomial, long>> image_layer;
  for (const DivisorComponent& c : downstairs.affine()) {
    Polynomial r = preimage_polynomial(sigma, c.points);
    if (r.degree() > 0) image_layer.emplace_back(radical(r), c.multiplicity);
  }
  if (downstairs.at_infinity() != 0 && d.degree() > 0) image_layer.emplace_back(radical(d), downstairs.at_infinity());

  std::vector<detail::LabeledCell> cells = detail::refine({}, as_layer(upstairs), 0);
  cells = detail::refine(cells, index_layer, 1);
  cells = detail::refine(cells, image_layer, 2);
  for (const auto& cell : cells) {
    const long ord_up = cell.labels[0];
    const long e = cell.labels[1] + 1;
    const long ord_down = cell.labels[2];
    if (ord_up + nu != e * (ord_down + nu)) return false;
  }

  long ord_down_inf = 0;
  if (n.degree() > d.degree()) {
    ord_down_inf = downstairs.at_infinity();
  } else {
    const Field f = sigma.field();
    const Scalar value = n.degree() == d.degree() ? n.leading() / d.leading() : Scalar::zero(f);
    ord_down_inf = static_cast<long>(omega.coeff().num().order_at(value)) -
                   static_cast<long>(omega.coeff().den().order_at(value));
  }
  const long e_inf = profile.index_at_infinity;
  return upstairs.at_infinity() + nu == e_inf * (ord_down_inf + nu);
}

}  // namespace corrforms
