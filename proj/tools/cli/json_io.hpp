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

// JSON wire formats for the command-line front end. Scalars always travel as
// strings; coefficient arrays are in ascending degree.

#include <optional>
#include <string>

#include <json.hpp>

#include "corrforms/corrforms.hpp"

namespace corrforms::cli {

using Json = nlohmann::ordered_json;

/// Parsed input document: two maps, an optional form and an optional conjugating transform.
struct InputDocument {
  Field field;
  RationalMap sigma1;
  RationalMap sigma2;
  std::optional<DifferentialForm> omega;
  std::optional<MobiusTransform> mobius;
};

/// Parses JSON text; malformed text or schema violations throw ParseError with a position or JSON pointer.
Json parse_json_text(const std::string& text, const std::string& source);

Field parse_field(const Json& j, const std::string& path);
Polynomial parse_polynomial(const Json& j, Field field, const std::string& path);
RationalMap parse_map(const Json& j, Field field, const std::string& path);
DifferentialForm parse_form(const Json& j, Field field, const std::string& path);
MobiusTransform parse_mobius(const Json& j, Field field, const std::string& path);
InputDocument parse_document(const Json& j);

Json to_json(const Scalar& s);
Json to_json(const Polynomial& p);
Json to_json(const RationalMap& sigma);
Json to_json(const DifferentialForm& omega);
Json to_json(const Divisor& d);
Json to_json(const GroupReport& report);
Json to_json(const SweepEntry& entry);
Json to_json(const SweepSummary& summary);
Json to_json(const std::optional<Decomposition>& d);
Json to_json(Field field);

/// Document that parse_document accepts back.
Json document_json(const Correspondence& c, const std::optional<DifferentialForm>& omega = std::nullopt);

}  // namespace corrforms::cli
