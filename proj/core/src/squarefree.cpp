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

#include "corrforms/squarefree.hpp"

namespace corrforms {

namespace {

Polynomial one(Field f) { return Polynomial::constant(Scalar::one(f)); }

// f(t) = g(t)^p for f with vanishing derivative over F_p (Frobenius is the identity on F_p).
Polynomial pth_root(const Polynomial& f) {
  const std::uint32_t p = f.field().characteristic();
  const auto c = f.coefficients();
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < c.size(); i += p) out.push_back(c[i]);
  return Polynomial(f.field(), std::move(out));
}

bool valid_in_positive_characteristic(const SquarefreeDecomposition& d, const Polynomial& monic_input) {
  if (d.expand() != d.unit * monic_input) return false;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Polynomial& a = d.parts[i].factor;
    if (gcd_monic(a, a.derivative()).degree() != 0) return false;
    for (std::size_t j = i + 1; j < d.parts.size(); ++j)
      if (gcd_monic(a, d.parts[j].factor).degree() != 0) return false;
  }
  return true;
}

}  // namespace

Polynomial SquarefreeDecomposition::expand() const {
  Polynomial out = Polynomial::constant(unit);
  for (const SquarefreePart& part : parts) out *= part.factor.pow(part.exponent);
  return out;
}

Polynomial SquarefreeDecomposition::radical() const {
  Polynomial out = one(unit.field());
  for (const SquarefreePart& part : parts) out *= part.factor;
  return out;
}

SquarefreeDecomposition squarefree_decompose(const Polynomial& a) {
  if (a.is_zero()) throw MathError(ErrorCode::InvalidArgument, "squarefree decomposition of 0");
  SquarefreeDecomposition out{a.leading(), {}};
  const Polynomial f = a.monic();
  if (f.degree() == 0) return out;

  const Polynomial fp = f.derivative();
  if (fp.is_zero())
    throw MathError(ErrorCode::WildInput, f.to_string() + " is a p-th power in " + f.field().to_string());

  const Polynomial c = gcd_monic(f, fp);
  Polynomial w = exact_quotient(f, c);
  Polynomial y = exact_quotient(fp, c);
  Polynomial z = y - w.derivative();
  for (unsigned k = 1; w.degree() > 0; ++k) {
    Polynomial g = gcd_monic(w, z);
    if (g.degree() > 0) out.parts.push_back({g, k});
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    z = y - w.derivative();
  }
  // Yun is exact in characteristic 0; in characteristic p it silently drops
  // multiplicities divisible by p, which the round trip exposes.
  if (!f.field().is_rational() && !valid_in_positive_characteristic(out, f))
    throw MathError(ErrorCode::WildInput, f.to_string() + " has a root of multiplicity divisible by " +
                                              std::to_string(f.field().characteristic()));
  return out;
}

Polynomial radical(const Polynomial& a) {
  if (a.is_zero()) throw MathError(ErrorCode::InvalidArgument, "radical of 0");
  const Polynomial f = a.monic();
  if (f.degree() == 0) return one(f.field());
  const Polynomial fp = f.derivative();
  if (f.field().is_rational()) return exact_quotient(f, gcd_monic(f, fp));
  if (fp.is_zero()) return radical(pth_root(f));

  const Polynomial g = gcd_monic(f, fp);
  const Polynomial w = exact_quotient(f, g);
  // What survives in g after stripping w's roots has only multiplicities divisible by p.
  Polynomial rest = g;
  for (;;) {
    Polynomial h = gcd_monic(rest, w);
    if (h.degree() == 0) break;
    rest = exact_quotient(rest, h);
  }
  if (rest.degree() == 0) return w;
  return w * radical(pth_root(rest));
}

std::vector<PointClass> split_by_order(const Polynomial& points, const Polynomial& f) {
  if (f.is_zero()) throw MathError(ErrorCode::InvalidArgument, "order in the zero polynomial");
  std::vector<PointClass> out;
  Polynomial cur = points.monic();
  if (cur.degree() > 0 && gcd_monic(cur, f) != cur)
    throw MathError(ErrorCode::InvalidArgument, "points are not all roots of " + f.to_string());
  for (unsigned k = 1; cur.degree() > 0; ++k) {
    Polynomial hk = f.hasse_derivative(k);
    Polynomial next = hk.is_zero() ? cur : gcd_monic(cur, hk);
    if (next.degree() < cur.degree()) out.push_back({exact_quotient(cur, next), k});
    cur = std::move(next);
  }
  return out;
}

}  // namespace corrforms
