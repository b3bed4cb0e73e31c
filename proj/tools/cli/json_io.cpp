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

#include "cli/json_io.hpp"

#include <limits>

namespace corrforms::cli {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

Rational parse_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(j.get<long>());
  }
  if (!j.is_string()) fail(path, "expected a rational literal string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(path, e.what());
  }
}

Scalar parse_scalar(const Json& j, Field field, const std::string& path) {
  return Scalar::from_rational(parse_rational(j, path), field);
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Field parse_field(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const Json& p = j.at("Fp");
    if (!p.is_number_unsigned()) fail(path + "/Fp", "expected a positive integer");
    const auto value = p.get<std::uint64_t>();
    if (value >= kMaxModulus || !is_prime(value)) fail(path + "/Fp", std::to_string(value) + " is not a prime below 2^31");
    return Field::prime(value);
  }
  fail(path, "expected \"Q\" or {\"Fp\": p}");
}

Polynomial parse_polynomial(const Json& j, Field field, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of coefficients in ascending degree");
  std::vector<Scalar> coeffs;
  coeffs.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(parse_scalar(j[i], field, path + "/" + std::to_string(i)));
  return Polynomial(field, std::move(coeffs));
}

RationalMap parse_map(const Json& j, Field field, const std::string& path) {
  RationalFunction body(field);
  if (j.is_array()) {
    body = RationalFunction(parse_polynomial(j, field, path));
  } else if (j.is_object()) {
    Polynomial num = parse_polynomial(member(j, "num", path), field, path + "/num");
    Polynomial den = j.contains("den") ? parse_polynomial(j.at("den"), field, path + "/den")
                                       : Polynomial::constant(Scalar::one(field));
    if (den.is_zero()) fail(path + "/den", "zero denominator");
    body = RationalFunction(std::move(num), std::move(den));
  } else {
    fail(path, "expected a coefficient array or {\"num\", \"den\"}");
  }
  if (body.is_constant()) fail(path, "a map must be nonconstant");
  return RationalMap(std::move(body));
}

DifferentialForm parse_form(const Json& j, Field field, const std::string& path) {
  Polynomial num = parse_polynomial(member(j, "num", path), field, path + "/num");
  Polynomial den = j.contains("den") ? parse_polynomial(j.at("den"), field, path + "/den")
                                     : Polynomial::constant(Scalar::one(field));
  const Json& w = member(j, "weight", path);
  if (!w.is_number_integer()) fail(path + "/weight", "expected an integer");
  const auto weight = w.get<long>();
  if (weight == 0 || weight > std::numeric_limits<int>::max() || weight < std::numeric_limits<int>::min())
    fail(path + "/weight", "weight must be a nonzero int");
  if (num.is_zero()) fail(path + "/num", "a form must be nonzero");
  if (den.is_zero()) fail(path + "/den", "zero denominator");
  return DifferentialForm(RationalFunction(std::move(num), std::move(den)), static_cast<int>(weight));
}

MobiusTransform parse_mobius(const Json& j, Field field, const std::string& path) {
  return MobiusTransform(parse_scalar(member(j, "a", path), field, path + "/a"),
                         parse_scalar(member(j, "b", path), field, path + "/b"),
                         parse_scalar(member(j, "c", path), field, path + "/c"),
                         parse_scalar(member(j, "d", path), field, path + "/d"));
}

InputDocument parse_document(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  const Field field = j.contains("field") ? parse_field(j.at("field"), "/field") : Field::rationals();
  InputDocument doc{field, parse_map(member(j, "sigma1", ""), field, "/sigma1"),
                    parse_map(member(j, "sigma2", ""), field, "/sigma2"), std::nullopt, std::nullopt};
  if (j.contains("omega")) doc.omega = parse_form(j.at("omega"), field, "/omega");
  if (j.contains("mobius")) doc.mobius = parse_mobius(j.at("mobius"), field, "/mobius");
  return doc;
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const Scalar& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Json to_json(const RationalMap& sigma) {
  if (sigma.is_polynomial()) return to_json(sigma.body().num());
  return Json{{"num", to_json(sigma.body().num())}, {"den", to_json(sigma.body().den())}};
}

Json to_json(const DifferentialForm& omega) {
  return Json{{"num", to_json(omega.coeff().num())},
              {"den", to_json(omega.coeff().den())},
              {"weight", omega.weight()}};
}

Json to_json(const Divisor& d) {
  Json affine = Json::array();
  for (const DivisorComponent& c : d.affine()) affine.push_back(Json{{"poly", to_json(c.points)}, {"mult", c.multiplicity}});
  return Json{{"affine", std::move(affine)}, {"infinity", d.at_infinity()}};
}

Json to_json(Field field) {
  if (field.is_rational()) return "Q";
  return Json{{"Fp", field.characteristic()}};
}

namespace {

void add_primitive(Json& out, const Primitive& prim) {
  out["weight"] = prim.weight;
  out["lambda"] = to_json(prim.lambda);
  std::visit(
      [&](const auto& flat) {
        using T = std::decay_t<decltype(flat)>;
        if constexpr (std::is_same_v<T, Weight1Flat>) {
          out["flatness"] = "weight1";
          out["form"] = Json{{"a", to_json(flat.a)}};
        } else if constexpr (std::is_same_v<T, Weight2Flat>) {
          out["flatness"] = "weight2";
          out["form"] = Json{{"s", to_json(flat.s)}, {"q", to_json(flat.q)}};
        } else {
          out["flatness"] = "weight1-square";
          out["form"] = Json{{"a", to_json(flat.a)}};
        }
      },
      prim.flatness);
}

}  // namespace

Json to_json(const GroupReport& report) {
  Json out;
  out["status"] = report.primitive ? "cyclic" : "trivial";
  if (report.primitive) add_primitive(out, *report.primitive);
  out["complete"] = report.complete;
  return out;
}

Json to_json(const SweepEntry& entry) {
  Json out;
  out["p"] = entry.p;
  out["guard"] = entry.guard;
  if (const auto* skip = std::get_if<SkipReason>(&entry.outcome)) {
    out["status"] = "skipped";
    out["reason"] = std::string(to_string(skip->kind));
    out["detail"] = skip->detail;
    return out;
  }
  const GroupReport& g = std::get<GroupReport>(entry.outcome);
  out["status"] = g.primitive ? "cyclic" : "trivial";
  if (g.primitive) add_primitive(out, *g.primitive);
  out["complete"] = g.complete;
  return out;
}

Json to_json(const SweepSummary& s) {
  return Json{{"summary",
               {{"primes", s.primes},
                {"skipped", s.skipped},
                {"trivial", s.trivial},
                {"weight1", s.weight1},
                {"weight2", s.weight2},
                {"guarded_good", s.guarded_good},
                {"guarded_weight1", s.guarded_weight1},
                {"weight1_evidence", s.weight1_evidence()}}}};
}

Json to_json(const std::optional<Decomposition>& d) {
  if (!d) return Json{{"result", "none"}};
  return Json{{"result", "decomposition"},
              {"sigma", to_json(d->sigma)},
              {"m", d->m},
              {"h", d->h},
              {"lambda1", to_json(d->lambda1)},
              {"lambda2", to_json(d->lambda2)}};
}

Json document_json(const Correspondence& c, const std::optional<DifferentialForm>& omega) {
  Json out{{"field", to_json(c.field())}, {"sigma1", to_json(c.sigma1())}, {"sigma2", to_json(c.sigma2())}};
  if (omega) out["omega"] = to_json(*omega);
  return out;
}

}  // namespace corrforms::cli
