// Copyright 2026 The entorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON wire formats. Parsers throw SchemaError carrying a JSON pointer to the
// offending value.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "entorder/criteria.hpp"
#include "entorder/measures.hpp"
#include "entorder/order.hpp"
#include "entorder/states.hpp"

namespace entorder {

using Json = nlohmann::ordered_json;

class SchemaError : public ValidationError {
 public:
  SchemaError(const std::string& pointer, const std::string& message)
      : ValidationError(pointer + ": " + message), pointer_(pointer) {}
  [[nodiscard]] const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

// {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& pointer = "");

// {"label", "kind": "pure"|"density", "dims": [dA, dB], "ket"|"matrix": <matrix>}
Json state_to_json(const State& s);
State state_from_json(const Json& j, const std::string& pointer = "");

// {"measure", "lo", "hi", "provenance": "computed" | {"certificate": str}}
Json interval_to_json(const MeasureInterval& m);
MeasureInterval interval_from_json(const Json& j, const std::string& pointer = "");

// {"kind", "subject", "target"?, "measure"?, "value"?, "citation"}
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j, const std::string& pointer = "");
/// Accepts either a bare array or {"certificates": [...]}.
std::vector<Certificate> certificates_from_json(const Json& j);

Json seesaw_to_json(const SeesawResult& r, bool verbose);
Json eof_to_json(const EofResult& r);
Json verdict_to_json(const Verdict& v);
Json graph_to_json(const OrderGraph& g);

}  // namespace entorder
