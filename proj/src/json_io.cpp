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

#include "entorder/json_io.hpp"

#include <cmath>

namespace entorder {

namespace {

const Json& field(const Json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) throw SchemaError(pointer.empty() ? "/" : pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(pointer + "/" + key, "missing required field");
  return *it;
}

int positive_int(const Json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw SchemaError(pointer, "expected a positive integer");
  return j.get<int>();
}

double finite_number(const Json& j, const std::string& pointer) {
  if (!j.is_number()) throw SchemaError(pointer, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw SchemaError(pointer, "expected a finite number");
  return x;
}

std::string string_field(const Json& j, const std::string& key, const std::string& pointer) {
  const Json& v = field(j, key, pointer);
  if (!v.is_string()) throw SchemaError(pointer + "/" + key, "expected a string");
  return v.get<std::string>();
}

DimPair dims_from_json(const Json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2) throw SchemaError(pointer, "expected [dimA, dimB]");
  return {positive_int(j[0], pointer + "/0"), positive_int(j[1], pointer + "/1")};
}

// Re-raise domain validation failures with the location of the payload.
template <typename F>
auto located(const std::string& pointer, F&& f) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(pointer.empty() ? "/" : pointer, e.what());
  }
}

Json pair_to_json(const LabelPair& p) { return Json::array({p.first, p.second}); }

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& pointer) {
  const int rows = positive_int(field(j, "rows", pointer), pointer + "/rows");
  const int cols = positive_int(field(j, "cols", pointer), pointer + "/cols");
  const Json& entries = field(j, "entries", pointer);
  const std::string ep = pointer + "/entries";
  if (!entries.is_array()) throw SchemaError(ep, "expected an array");
  if (entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw SchemaError(ep, "expected " + std::to_string(rows * cols) + " entries, found " +
                              std::to_string(entries.size()));
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string p = ep + "/" + std::to_string(k);
    const Json& e = entries[k];
    if (!e.is_array() || e.size() != 2) throw SchemaError(p, "expected [re, im]");
    m(static_cast<Eigen::Index>(k) / cols, static_cast<Eigen::Index>(k) % cols) =
        Complex(finite_number(e[0], p + "/0"), finite_number(e[1], p + "/1"));
  }
  return m;
}

Json state_to_json(const State& s) {
  const DimPair d = dims_of(s);
  Json j{{"label", label_of(s)}};
  if (const auto* psi = std::get_if<PureState>(&s)) {
    j["kind"] = "pure";
    j["dims"] = Json::array({d.dim_a, d.dim_b});
    j["ket"] = matrix_to_json(psi->ket());
  } else {
    j["kind"] = "density";
    j["dims"] = Json::array({d.dim_a, d.dim_b});
    j["matrix"] = matrix_to_json(std::get<DensityState>(s).matrix());
  }
  return j;
}

State state_from_json(const Json& j, const std::string& pointer) {
  const std::string label = string_field(j, "label", pointer);
  const std::string kind = string_field(j, "kind", pointer);
  const DimPair dims = dims_from_json(field(j, "dims", pointer), pointer + "/dims");
  if (kind == "pure") {
    const std::string p = pointer + "/ket";
    const ComplexMatrix ket = matrix_from_json(field(j, "ket", pointer), p);
    if (ket.cols() != 1) throw SchemaError(p + "/cols", "a ket must have exactly one column");
    return located(p, [&] { return State(PureState(ket.col(0), dims, label)); });
  }
  if (kind == "density") {
    const std::string p = pointer + "/matrix";
    const ComplexMatrix m = matrix_from_json(field(j, "matrix", pointer), p);
    return located(p, [&] { return State(DensityState(m, dims, label)); });
  }
  throw SchemaError(pointer + "/kind", "expected \"pure\" or \"density\"");
}

Json interval_to_json(const MeasureInterval& m) {
  Json j{{"measure", m.measure}, {"lo", m.lo}};
  // JSON has no infinity; an unbounded side is written as null.
  j["hi"] = std::isfinite(m.hi) ? Json(m.hi) : Json(nullptr);
  j["provenance"] = m.provenance.is_computed() ? Json("computed") : Json{{"certificate", *m.provenance.citation}};
  return j;
}

MeasureInterval interval_from_json(const Json& j, const std::string& pointer) {
  const std::string name = string_field(j, "measure", pointer);
  const double lo = finite_number(field(j, "lo", pointer), pointer + "/lo");
  const Json& hi_j = field(j, "hi", pointer);
  const double hi = hi_j.is_null() ? std::numeric_limits<double>::infinity() : finite_number(hi_j, pointer + "/hi");
  const Json& prov = field(j, "provenance", pointer);
  Provenance p;
  if (prov.is_string() && prov.get<std::string>() == "computed") {
    p = Provenance::computed();
  } else if (prov.is_object() && prov.contains("certificate") && prov["certificate"].is_string()) {
    p = Provenance::certificate(prov["certificate"].get<std::string>());
  } else {
    throw SchemaError(pointer + "/provenance", "expected \"computed\" or {\"certificate\": str}");
  }
  return located(pointer, [&] { return MeasureInterval(name, lo, hi, p); });
}

Json certificate_to_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"subject", c.subject}};
  if (!c.target.empty()) j["target"] = c.target;
  if (c.measure) j["measure"] = *c.measure;
  if (c.value) j["value"] = *c.value;
  j["citation"] = c.citation;
  return j;
}

Certificate certificate_from_json(const Json& j, const std::string& pointer) {
  Certificate c;
  c.kind = located(pointer + "/kind", [&] { return certificate_kind_from_string(string_field(j, "kind", pointer)); });
  c.subject = string_field(j, "subject", pointer);
  if (j.contains("target")) c.target = string_field(j, "target", pointer);
  if (j.contains("measure")) c.measure = string_field(j, "measure", pointer);
  if (j.contains("value")) c.value = finite_number(j["value"], pointer + "/value");
  if (j.contains("citation")) c.citation = string_field(j, "citation", pointer);
  located(pointer, [&] {
    c.validate();
    return 0;
  });
  return c;
}

std::vector<Certificate> certificates_from_json(const Json& j) {
  const Json* list = &j;
  std::string base;
  if (j.is_object()) {
    list = &field(j, "certificates", "");
    base = "/certificates";
  }
  if (!list->is_array()) throw SchemaError(base.empty() ? "/" : base, "expected an array of certificates");
  std::vector<Certificate> out;
  for (std::size_t k = 0; k < list->size(); ++k) {
    out.push_back(certificate_from_json((*list)[k], base + "/" + std::to_string(k)));
  }
  return out;
}

Json seesaw_to_json(const SeesawResult& r, bool verbose) {
  Json j{{"best_overlap", r.best_overlap},
         {"unextendible", r.unextendible()},
         {"margin", r.margin},
         {"restarts", r.restarts},
         {"best_restart", r.best_restart},
         {"best_product_ket", {{"a", matrix_to_json(r.best_product_ket.first)},
                               {"b", matrix_to_json(r.best_product_ket.second)}}},
         {"iterations_per_restart", r.iterations_per_restart}};
  if (verbose) {
    j["final_overlap_per_restart"] = r.final_overlap_per_restart;
    j["traces"] = r.traces;
  }
  return j;
}

Json eof_to_json(const EofResult& r) {
  Json decomposition = Json::array();
  for (const auto& c : r.best_decomposition) {
    decomposition.push_back({{"probability", c.probability}, {"ket", matrix_to_json(c.state.ket())}});
  }
  return Json{{"upper_bound", r.upper_bound},
              {"ensemble_size", r.ensemble_size},
              {"restarts", r.restarts},
              {"best_restart", r.best_restart},
              {"decomposition", std::move(decomposition)}};
}

Json verdict_to_json(const Verdict& v) {
  Json j{{"verdict", to_string(v.value)}};
  if (v.rule) {
    j["rule"] = rule_id(*v.rule);
    j["rule_name"] = rule_name(*v.rule);
  }
  j["justification"] = v.justification;
  if (v.value == VerdictValue::Unknown) {
    Json abstained = Json::array();
    for (Rule r : v.abstained) abstained.push_back(rule_id(r));
    j["abstained"] = std::move(abstained);
  }
  return j;
}

Json graph_to_json(const OrderGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json je{{"src", e.src}, {"dst", e.dst}};
    je.update(verdict_to_json(e.verdict));
    edges.push_back(std::move(je));
  }
  Json incomparable = Json::array();
  for (const auto& p : find_incomparable_pairs(g)) incomparable.push_back(pair_to_json(p));
  Json undecided = Json::array();
  for (const auto& p : find_undecided_pairs(g)) undecided.push_back(pair_to_json(p));
  Json violations = Json::array();
  for (const auto& [c, a, b] : find_axiom5_violations(g)) violations.push_back(Json::array({c, a, b}));
  return Json{{"nodes", g.nodes()},
              {"edges", std::move(edges)},
              {"incomparable", std::move(incomparable)},
              {"undecided", std::move(undecided)},
              {"axiom5_violations", std::move(violations)}};
}

}  // namespace entorder
