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

#include "entorder/app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "entorder/json_io.hpp"

namespace entorder::app {

namespace {

constexpr const char* kEcCitation = "Vidal-Cirac positive cost";
constexpr const char* kPureCostCitation = "pure-state entanglement cost equals entropy of entanglement";

std::string num(double x, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

double tol_or(const RunConfig& c, const std::string& name, double fallback) {
  const auto it = c.tolerances.find(name);
  return it == c.tolerances.end() ? fallback : it->second;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("/", "'" + path + "' is not valid JSON: " + e.what());
  }
}

DensityState as_density(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return DensityState::from_pure(*p);
  return std::get<DensityState>(s);
}

const PureState& require_pure(const State& s, const std::string& sub) {
  const auto* p = std::get_if<PureState>(&s);
  if (p == nullptr) throw ValidationError("check " + sub + ": '" + label_of(s) + "' must be a pure state");
  return *p;
}

void require_inputs(const std::string& sub, const std::vector<std::string>& inputs, std::size_t n) {
  if (inputs.size() != n) {
    throw ValidationError("check " + sub + " expects " + std::to_string(n) + " state argument(s), got " +
                          std::to_string(inputs.size()));
  }
}

Json report_header(const std::string& command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::invalid_argument& e) {
    return {kExitInputInvalid, "", std::string("input invalid: ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitCheckFailed, "", std::string("check failed: ") + e.what()};
  }
}

std::string graph_text(const OrderGraph& g) {
  std::ostringstream os;
  for (const auto& e : g.edges()) {
    os << e.src << " -> " << e.dst << ": " << to_string(e.verdict.value);
    if (e.verdict.rule) os << " [" << rule_id(*e.verdict.rule) << "]";
    os << " " << e.verdict.justification << "\n";
  }
  os << "incomparable pairs:";
  for (const auto& [a, b] : find_incomparable_pairs(g)) os << " (" << a << ", " << b << ")";
  os << "\nundecided pairs:";
  for (const auto& [a, b] : find_undecided_pairs(g)) os << " (" << a << ", " << b << ")";
  os << "\naxiom-5 violations:";
  for (const auto& [c, a, b] : find_axiom5_violations(g)) os << " (" << c << ", " << a << ", " << b << ")";
  os << "\n";
  return os.str();
}

std::vector<Ket> upb_from_json(const Json& j, DimPair& dims) {
  if (!j.is_object() || !j.contains("dims")) throw SchemaError("/dims", "missing required field");
  const Json& d = j["dims"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer()) {
    throw SchemaError("/dims", "expected [dimA, dimB]");
  }
  dims = DimPair(d[0].get<int>(), d[1].get<int>());
  if (!j.contains("kets") || !j["kets"].is_array()) throw SchemaError("/kets", "expected an array of kets");
  std::vector<Ket> kets;
  for (std::size_t k = 0; k < j["kets"].size(); ++k) {
    const std::string p = "/kets/" + std::to_string(k);
    const ComplexMatrix m = matrix_from_json(j["kets"][k], p);
    if (m.cols() != 1) throw SchemaError(p + "/cols", "a ket must have exactly one column");
    kets.emplace_back(m.col(0));
  }
  return kets;
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "dot") return OutputFormat::Dot;
  if (s == "text") return OutputFormat::Text;
  throw ValidationError("unknown format '" + s + "' (expected json, dot or text)");
}

std::vector<std::string> tolerance_names() {
  return {"ppt",          "gap",          "majorization",        "asymptotic", "max_entangled",
          "identity",     "unextendible_margin", "seesaw_gain", "eof_gain"};
}

void apply_tolerance_override(RunConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) throw ValidationError("--tol expects <name>=<value>, got '" + assignment + "'");
  const std::string name = assignment.substr(0, eq);
  const auto names = tolerance_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw ValidationError("unknown tolerance '" + name + "'");
  }
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(assignment.substr(eq + 1), &used);
    if (used != assignment.size() - eq - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ValidationError("tolerance '" + name + "' has a non-numeric value");
  }
  if (!(value > 0.0) || !std::isfinite(value)) throw ValidationError("tolerance '" + name + "' must be positive");
  config.tolerances[name] = value;
}

EngineOptions engine_options(const RunConfig& config) {
  EngineOptions o = config.asymptotic ? EngineOptions::asymptotic() : EngineOptions::single_copy();
  o.ppt_tol = tol_or(config, "ppt", o.ppt_tol);
  o.gap_margin = tol_or(config, "gap", o.gap_margin);
  o.majorization_tol = tol_or(config, "majorization", o.majorization_tol);
  o.asymptotic_tol = tol_or(config, "asymptotic", o.asymptotic_tol);
  o.max_entangled_tol = tol_or(config, "max_entangled", o.max_entangled_tol);
  o.identity_tol = tol_or(config, "identity", o.identity_tol);
  return o;
}

SeesawOptions seesaw_options(const RunConfig& config) {
  SeesawOptions o;
  o.unextendible_margin = tol_or(config, "unextendible_margin", o.unextendible_margin);
  o.gain_tol = tol_or(config, "seesaw_gain", o.gain_tol);
  o.keep_traces = config.verbose;
  return o;
}

EofOptions eof_options(const RunConfig& config) {
  EofOptions o;
  o.gain_tol = tol_or(config, "eof_gain", o.gain_tol);
  return o;
}

PureState counterexample_sigma(const RunConfig& config) {
  return pure_with_entanglement(config.sigma_entropy, {3, 3}, "sigma_AB");
}

State load_state(const std::string& ref, const RunConfig& config) {
  if (ref == "sigma_AB") return counterexample_sigma(config);
  const auto names = builtin_state_names();
  if (std::find(names.begin(), names.end(), ref) != names.end()) return builtin_state(ref);
  if (std::filesystem::is_regular_file(ref)) return state_from_json(read_json_file(ref));
  throw ValidationError("unknown state '" + ref + "': not a built-in name or a readable file");
}

StateRegistry counterexample_registry(const RunConfig& config) {
  StateRegistry reg;
  if (config.pure_example) {
    for (const char* n : {"Phi3", "phi1", "phi2"}) reg.add(builtin_state(n));
  } else {
    reg.add(builtin_state("Phi3"));
    reg.add(tiles_bound_state());
    reg.add(counterexample_sigma(config));
  }
  return reg;
}

std::vector<Certificate> counterexample_certificates(const RunConfig& config) {
  if (config.pure_example) return {};
  return {Certificate::lower_bound("rho_AB", "E_C", config.ec_certificate, kEcCitation),
          Certificate::upper_bound("sigma_AB", "E_C", entropy_of_entanglement(counterexample_sigma(config)), kPureCostCitation)};
}

CommandResult cmd_reproduce_paper(const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const auto format = config.format.value_or(OutputFormat::Json);
    const StateRegistry reg = counterexample_registry(config);
    const auto certs = counterexample_certificates(config);
    const EngineOptions opts = engine_options(config);

    Json report = report_header("reproduce-paper");
    report["profile"] = config.pure_example ? "pure-example" : "mixed";
    report["config"] = Json{{"seed", config.seed},
                            {"restarts", config.restarts},
                            {"sigma_entropy", config.sigma_entropy},
                            {"ec_certificate", config.ec_certificate}};
    Json states = Json::array();
    for (const auto& s : reg.states()) {
      const DimPair d = dims_of(s);
      states.push_back({{"label", label_of(s)},
                        {"kind", is_pure(s) ? "pure" : "density"},
                        {"dims", Json::array({d.dim_a, d.dim_b})}});
    }
    report["states"] = std::move(states);
    Json jc = Json::array();
    for (const auto& c : certs) jc.push_back(certificate_to_json(c));
    report["certificates"] = std::move(jc);

    std::optional<std::string> failed;
    Json checks = Json::object();
    if (!config.pure_example) {
      const auto& rho = std::get<DensityState>(reg.get("rho_AB"));
      const auto& sigma = std::get<PureState>(reg.get("sigma_AB"));
      const PptVerdict ppt = ppt_check(rho, opts.ppt_tol);
      checks["ppt_rho_AB"] = {{"min_eig", ppt.min_eig}, {"is_ppt", ppt.is_ppt}};
      if (!ppt.is_ppt) failed = failed.value_or("ppt");

      const double neg = negativity(DensityState::from_pure(sigma));
      checks["negativity_sigma_AB"] = neg;
      if (!(neg > 0.0)) failed = failed.value_or("negativity");

      const SeesawResult upb = upb_unextendibility(tiles_upb(), {3, 3}, config.restarts, config.seed,
                                                   seesaw_options(config));
      checks["upb_seesaw"] = seesaw_to_json(upb, config.verbose);
      if (!upb.unextendible()) failed = failed.value_or("upb");

      checks["entropy_of_entanglement_sigma_AB"] = entropy_of_entanglement(sigma);
      checks["restored_entanglement"] = {{"rho_AB", restored_entanglement(rho)},
                                         {"sigma_AB", restored_entanglement(DensityState::from_pure(sigma))}};
    }
    report["checks"] = std::move(checks);

    const OrderGraph g = build_graph(reg, certs, opts);
    report["graph"] = graph_to_json(g);

    const auto labels = reg.labels();
    const LabelTriple expected{labels[0], labels[1], labels[2]};
    const auto violations = find_axiom5_violations(g);
    const bool found = std::find(violations.begin(), violations.end(), expected) != violations.end();
    report["expected_triple"] = Json::array({labels[0], labels[1], labels[2]});
    report["expected_triple_found"] = found;
    if (!found) failed = failed.value_or("axiom5");
    report["failed_stage"] = failed ? Json(*failed) : Json(nullptr);
    const std::string dot = to_dot(g);
    report["dot"] = dot;

    CommandResult out;
    switch (format) {
      case OutputFormat::Json: out.output = render(report); break;
      case OutputFormat::Dot: out.output = dot; break;
      case OutputFormat::Text: {
        std::ostringstream os;
        os << "profile: " << report["profile"].get<std::string>() << "\n";
        if (!config.pure_example) {
          const auto& c = report["checks"];
          os << "rho_AB partial transpose min eigenvalue: " << c["ppt_rho_AB"]["min_eig"].get<double>()
             << (c["ppt_rho_AB"]["is_ppt"].get<bool>() ? " (PPT)\n" : " (NPT)\n");
          os << "negativity(sigma_AB): " << num(c["negativity_sigma_AB"].get<double>()) << "\n";
          os << "UPB best product overlap: " << num(c["upb_seesaw"]["best_overlap"].get<double>(), 9)
             << (c["upb_seesaw"]["unextendible"].get<bool>() ? " (unextendible)\n" : " (extendible)\n");
        }
        os << graph_text(g);
        out.output = os.str();
        break;
      }
    }
    if (failed) {
      out.exit_code = kExitCheckFailed;
      out.error = "reproduce-paper failed at stage '" + *failed + "'";
    }
    return out;
  });
}

CommandResult cmd_check(const std::string& sub, const std::vector<std::string>& inputs, const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const auto format = config.format.value_or(OutputFormat::Text);
    if (format == OutputFormat::Dot) throw ValidationError("check does not support --format dot");
    Json j = report_header("check " + sub);
    std::string text;

    if (sub == "ppt") {
      require_inputs(sub, inputs, 1);
      const auto rho = as_density(load_state(inputs[0], config));
      const auto v = ppt_check(rho, engine_options(config).ppt_tol);
      j["state"] = rho.label();
      j["min_eig"] = v.min_eig;
      j["is_ppt"] = v.is_ppt;
      text = rho.label() + ": partial transpose min eigenvalue " + num(v.min_eig, 12) + " => " +
             (v.is_ppt ? "PPT" : "NPT") + "\n";
    } else if (sub == "upb") {
      if (inputs.size() > 1) throw ValidationError("check upb takes at most one UPB file");
      DimPair dims(3, 3);
      std::vector<Ket> kets = inputs.empty() ? tiles_upb() : upb_from_json(read_json_file(inputs[0]), dims);
      const auto r = upb_unextendibility(kets, dims, config.restarts, config.seed, seesaw_options(config));
      j["upb"] = inputs.empty() ? "tiles" : inputs[0];
      j["result"] = seesaw_to_json(r, config.verbose);
      text = "best product overlap with complement: " + num(r.best_overlap, 9) + " over " +
             std::to_string(r.restarts) + " restarts => " + (r.unextendible() ? "unextendible" : "extendible") + "\n";
    } else if (sub == "schmidt") {
      require_inputs(sub, inputs, 1);
      const State s = load_state(inputs[0], config);
      const auto sv = schmidt(require_pure(s, sub));
      j["state"] = label_of(s);
      j["coefficients"] = sv.coefficients;
      j["probabilities"] = sv.probabilities();
      std::ostringstream os;
      os << label_of(s) << " Schmidt coefficients:";
      for (double c : sv.coefficients) os << " " << num(c);
      os << "\nsquared:";
      for (double p : sv.probabilities()) os << " " << num(p);
      os << "\n";
      text = os.str();
    } else if (sub == "nielsen") {
      require_inputs(sub, inputs, 2);
      const State a = load_state(inputs[0], config);
      const State b = load_state(inputs[1], config);
      const double tol = engine_options(config).majorization_tol;
      const bool ab = nielsen_convertible(require_pure(a, sub), require_pure(b, sub), tol);
      const bool ba = nielsen_convertible(require_pure(b, sub), require_pure(a, sub), tol);
      const std::string la = label_of(a);
      const std::string lb = label_of(b);
      j["forward"] = {{"src", la}, {"dst", lb}, {"convertible", ab}};
      j["backward"] = {{"src", lb}, {"dst", la}, {"convertible", ba}};
      std::string summary;
      if (ab && ba) {
        summary = "convertible in both directions";
      } else if (ab) {
        summary = la + " -> " + lb + " only";
      } else if (ba) {
        summary = lb + " -> " + la + " only";
      } else {
        summary = "not convertible in either direction";
      }
      j["summary"] = summary;
      text = la + " -> " + lb + ": " + (ab ? "yes" : "no") + "\n" + lb + " -> " + la + ": " + (ba ? "yes" : "no") +
             "\n" + summary + "\n";
    } else if (sub == "entropy") {
      require_inputs(sub, inputs, 1);
      const State s = load_state(inputs[0], config);
      j["state"] = label_of(s);
      if (const auto* p = std::get_if<PureState>(&s)) {
        const double e = entropy_of_entanglement(*p);
        j["entropy_of_entanglement_bits"] = e;
        text = "entropy of entanglement of " + p->label() + ": " + num(e, 5) + " bits\n";
      } else {
        const double e = von_neumann_entropy(std::get<DensityState>(s).matrix());
        j["von_neumann_entropy_bits"] = e;
        text = "von Neumann entropy of " + label_of(s) + ": " + num(e, 5) + " bits\n";
      }
    } else if (sub == "negativity") {
      require_inputs(sub, inputs, 1);
      const auto rho = as_density(load_state(inputs[0], config));
      const double n = negativity(rho);
      j["state"] = rho.label();
      j["interval"] = interval_to_json(MeasureInterval("negativity", std::max(n, 0.0), std::max(n, 0.0),
                                                        Provenance::computed()));
      text = "negativity of " + rho.label() + ": " + num(n, 9) + "\n";
    } else if (sub == "eof") {
      require_inputs(sub, inputs, 1);
      const auto rho = as_density(load_state(inputs[0], config));
      const EofResult r = config.ensemble_size > 0
                              ? eof_upper_bound(rho, config.ensemble_size, config.restarts, config.seed,
                                                eof_options(config))
                              : eof_upper_bound_sweep(rho, config.restarts, config.seed, eof_options(config));
      j["state"] = rho.label();
      j["interval"] = interval_to_json(MeasureInterval("E_f", 0.0, std::max(r.upper_bound, 0.0), Provenance::computed()));
      j["result"] = eof_to_json(r);
      text = "entanglement of formation of " + rho.label() + " <= " + num(r.upper_bound, 9) + " bits (ensemble size " +
             std::to_string(r.ensemble_size) + ", " + std::to_string(r.restarts) + " restarts)\n";
    } else if (sub == "restored-e") {
      require_inputs(sub, inputs, 1);
      const auto rho = as_density(load_state(inputs[0], config));
      const double e = restored_entanglement(rho);
      j["state"] = rho.label();
      j["interval"] = interval_to_json(MeasureInterval("restored_E", e, e, Provenance::computed()));
      text = "restored entanglement of " + rho.label() + ": " + num(e) + " bits\n";
    } else if (sub == "distance") {
      require_inputs(sub, inputs, 2);
      const State a = load_state(inputs[0], config);
      const State b = load_state(inputs[1], config);
      if (!(dims_of(a) == dims_of(b))) throw DimensionError("check distance: states have different dimensions");
      const double d = trace_norm_distance(density_of(a), density_of(b));
      j["states"] = Json::array({label_of(a), label_of(b)});
      j["trace_norm_distance"] = d;
      text = "trace norm distance between " + label_of(a) + " and " + label_of(b) + ": " + num(d, 9) + "\n";
    } else {
      throw ValidationError("unknown check '" + sub + "'");
    }
    return {kExitOk, format == OutputFormat::Json ? render(j) : text, ""};
  });
}

CommandResult cmd_graph(const std::vector<std::string>& inputs, const std::string& certificate_file,
                        const RunConfig& config) {
  return guarded([&]() -> CommandResult {
    const auto format = config.format.value_or(OutputFormat::Json);
    StateRegistry reg;
    for (const auto& in : inputs) reg.add(load_state(in, config));
    const std::vector<Certificate> certs =
        certificate_file.empty() ? std::vector<Certificate>{} : certificates_from_json(read_json_file(certificate_file));
    const OrderGraph g = build_graph(reg, certs, engine_options(config));
    switch (format) {
      case OutputFormat::Dot: return {kExitOk, to_dot(g), ""};
      case OutputFormat::Text: return {kExitOk, graph_text(g), ""};
      case OutputFormat::Json: break;
    }
    Json j = report_header("graph");
    j["semantics"] = config.asymptotic ? "asymptotic" : "single-copy";
    j.update(graph_to_json(g));
    return {kExitOk, render(j), ""};
  });
}

CommandResult cmd_state(const std::string& ref, const RunConfig& config) {
  return guarded([&]() -> CommandResult { return {kExitOk, render(state_to_json(load_state(ref, config))), ""}; });
}

}  // namespace entorder::app
