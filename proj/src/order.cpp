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

#include "entorder/order.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "entorder/measures.hpp"

namespace entorder {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

Verdict decided(VerdictValue v, Rule r, std::string why) { return {v, r, std::move(why), {}}; }

void tighten(std::map<std::string, Bounds>& bounds, const std::string& measure, std::optional<double> lo,
             std::optional<double> hi, const std::string& source) {
  Bounds& b = bounds[measure];
  if (lo && *lo > b.lo) {
    b.lo = *lo;
    b.lo_source = source;
  }
  if (hi && *hi < b.hi) {
    b.hi = *hi;
    b.hi_source = source;
  }
}

}  // namespace

std::string rule_id(Rule r) {
  switch (r) {
    case Rule::Certificate: return "R1";
    case Rule::PptNoGo: return "R2";
    case Rule::MonotoneGap: return "R3";
    case Rule::Nielsen: return "R4";
    case Rule::PureAsymptotic: return "R5";
    case Rule::MaximalSource: return "R6";
    case Rule::Identity: return "R0";
  }
  return "R?";
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Certificate: return "certificate";
    case Rule::PptNoGo: return "PPT->NPT no-go";
    case Rule::MonotoneGap: return "monotone gap";
    case Rule::Nielsen: return "Nielsen majorization";
    case Rule::PureAsymptotic: return "pure asymptotic entropy order";
    case Rule::MaximalSource: return "maximally entangled source";
    case Rule::Identity: return "identity process";
  }
  return "unknown rule";
}

std::string to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::Yes: return "YES";
    case VerdictValue::No: return "NO";
    case VerdictValue::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::MeasureLowerBound: return "measure_lower_bound";
    case CertificateKind::MeasureUpperBound: return "measure_upper_bound";
    case CertificateKind::EdgeYes: return "edge_yes";
    case CertificateKind::EdgeNo: return "edge_no";
  }
  return "";
}

CertificateKind certificate_kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::MeasureLowerBound, CertificateKind::MeasureUpperBound, CertificateKind::EdgeYes,
                 CertificateKind::EdgeNo}) {
    if (to_string(k) == s) return k;
  }
  throw ValidationError("unknown certificate kind '" + s + "'");
}

void Certificate::validate() const {
  if (subject.empty()) throw ValidationError("certificate has no subject");
  switch (kind) {
    case CertificateKind::MeasureLowerBound:
    case CertificateKind::MeasureUpperBound:
      if (!measure || measure->empty()) throw ValidationError("measure certificate on '" + subject + "' names no measure");
      if (!value || !std::isfinite(*value)) {
        throw ValidationError("measure certificate on '" + subject + "' needs a finite value");
      }
      break;
    case CertificateKind::EdgeYes:
    case CertificateKind::EdgeNo:
      if (target.empty()) throw ValidationError("edge certificate from '" + subject + "' has no target");
      if (citation.empty()) {
        throw ValidationError("edge certificate " + subject + " -> " + target + " carries no citation");
      }
      break;
  }
}

Certificate Certificate::lower_bound(std::string subject, std::string measure, double value, std::string citation) {
  return {CertificateKind::MeasureLowerBound, std::move(subject), {}, std::move(measure), value, std::move(citation)};
}

Certificate Certificate::upper_bound(std::string subject, std::string measure, double value, std::string citation) {
  return {CertificateKind::MeasureUpperBound, std::move(subject), {}, std::move(measure), value, std::move(citation)};
}

Certificate Certificate::edge(bool yes, std::string src, std::string dst, std::string citation) {
  return {yes ? CertificateKind::EdgeYes : CertificateKind::EdgeNo, std::move(src), std::move(dst), {}, {},
          std::move(citation)};
}

EngineOptions EngineOptions::asymptotic() {
  EngineOptions o;
  std::erase(o.rule_order, Rule::Nielsen);
  o.derive_pure_intervals = true;
  return o;
}

StateFacts compute_facts(const State& s, const std::vector<Certificate>& certificates, const EngineOptions& options) {
  StateFacts f;
  f.label = label_of(s);
  f.dims = dims_of(s);
  f.density = density_of(s);
  f.ppt = ppt_check(f.density, f.dims, options.ppt_tol);
  if (const auto* psi = std::get_if<PureState>(&s)) {
    f.pure = *psi;
    f.schmidt_probabilities = schmidt(*psi).probabilities();
    f.entanglement = shannon_entropy_bits(f.schmidt_probabilities);
    if (options.derive_pure_intervals) {
      for (const char* m : {"E_C", "E_D"}) {
        tighten(f.bounds, m, f.entanglement, f.entanglement, "computed: pure-state entropy");
      }
    }

    const auto& p = f.schmidt_probabilities;
    const auto d = static_cast<int>(std::count_if(p.begin(), p.end(), [&](double x) { return x > options.max_entangled_tol; }));
    const bool uniform = d >= 2 && std::all_of(p.begin(), p.begin() + d, [&](double x) {
                           return std::abs(x - 1.0 / d) <= options.max_entangled_tol;
                         });
    if (uniform) f.maximal_dimension = d;
  } else if (f.ppt.is_ppt) {
    tighten(f.bounds, "E_D", 0.0, 0.0, "computed: PPT states are undistillable");
  }

  for (const auto& c : certificates) {
    c.validate();
    if (c.subject != f.label) continue;
    const std::string source = "certificate: " + c.citation;
    if (c.kind == CertificateKind::MeasureLowerBound) tighten(f.bounds, *c.measure, c.value, std::nullopt, source);
    if (c.kind == CertificateKind::MeasureUpperBound) tighten(f.bounds, *c.measure, std::nullopt, c.value, source);
  }
  for (const auto& [name, b] : f.bounds) {
    if (b.lo > b.hi + options.gap_margin) {
      throw ValidationError("inconsistent bounds on " + name + "(" + f.label + "): lo " + fmt(b.lo) + " from " +
                            b.lo_source + " exceeds hi " + fmt(b.hi) + " from " + b.hi_source);
    }
  }
  return f;
}

std::optional<Verdict> apply_rule(Rule rule, const StateFacts& src, const StateFacts& dst,
                                  const std::vector<Certificate>& certificates, const EngineOptions& options) {
  switch (rule) {
    case Rule::Certificate:
      for (const auto& c : certificates) {
        if ((c.kind == CertificateKind::EdgeYes || c.kind == CertificateKind::EdgeNo) && c.subject == src.label &&
            c.target == dst.label) {
          const auto v = c.kind == CertificateKind::EdgeYes ? VerdictValue::Yes : VerdictValue::No;
          return decided(v, rule, "certificate: " + c.citation);
        }
      }
      return std::nullopt;

    case Rule::PptNoGo:
      if (src.ppt.is_ppt && !dst.ppt.is_ppt) {
        return decided(VerdictValue::No, rule,
                       "PPT->NPT no-go: min eig of " + src.label + "^T_B = " + fmt(src.ppt.min_eig) + " (PPT), of " +
                           dst.label + "^T_B = " + fmt(dst.ppt.min_eig) + " (NPT)");
      }
      return std::nullopt;

    case Rule::MonotoneGap:
      for (const auto& m : options.monotones) {
        const auto s = src.bounds.find(m);
        const auto d = dst.bounds.find(m);
        if (s == src.bounds.end() || d == dst.bounds.end()) continue;
        if (d->second.lo > s->second.hi + options.gap_margin) {
          return decided(VerdictValue::No, rule,
                         "monotone gap: " + m + ": lo(" + dst.label + ") = " + fmt(d->second.lo) + " [" +
                             d->second.lo_source + "] > hi(" + src.label + ") = " + fmt(s->second.hi) + " [" +
                             s->second.hi_source + "]");
        }
      }
      return std::nullopt;

    case Rule::Nielsen:
      if (src.pure && dst.pure) {
        const bool ok = majorizes(src.schmidt_probabilities, dst.schmidt_probabilities, options.majorization_tol);
        return decided(ok ? VerdictValue::Yes : VerdictValue::No, rule,
                       std::string("Nielsen majorization: Schmidt spectrum of ") + src.label +
                           (ok ? " is" : " is not") + " majorized by that of " + dst.label);
      }
      return std::nullopt;

    case Rule::PureAsymptotic:
      if (src.pure && dst.pure && src.entanglement >= dst.entanglement - options.asymptotic_tol) {
        return decided(VerdictValue::Yes, rule,
                       "pure asymptotic: E(" + src.label + ") = " + fmt(src.entanglement) + " >= E(" + dst.label +
                           ") = " + fmt(dst.entanglement));
      }
      return std::nullopt;

    case Rule::MaximalSource:
      if (src.maximal_dimension && dst.dims.dim_a <= *src.maximal_dimension &&
          dst.dims.dim_b <= *src.maximal_dimension) {
        return decided(VerdictValue::Yes, rule,
                       "maximally entangled source: " + src.label + " is Phi_" +
                           std::to_string(*src.maximal_dimension) + ", " + dst.label +
                           " is prepared locally and teleported");
      }
      return std::nullopt;

    case Rule::Identity:
      if (src.label == dst.label) return decided(VerdictValue::Yes, rule, "identity process");
      if (src.dims == dst.dims && trace_norm_distance(src.density, dst.density) <= options.identity_tol) {
        return decided(VerdictValue::Yes, rule, "identity process: " + src.label + " and " + dst.label + " coincide");
      }
      return std::nullopt;
  }
  return std::nullopt;
}

Verdict evaluate_edge(const StateFacts& src, const StateFacts& dst, const std::vector<Certificate>& certificates,
                      const EngineOptions& options) {
  if (src.label == dst.label) return decided(VerdictValue::Yes, Rule::Identity, "identity process");
  Verdict unknown;
  for (Rule r : options.rule_order) {
    if (auto v = apply_rule(r, src, dst, certificates, options)) return *v;
    unknown.abstained.push_back(r);
  }
  if (auto v = apply_rule(Rule::Identity, src, dst, certificates, options)) return *v;
  unknown.abstained.push_back(Rule::Identity);
  unknown.justification = "no rule decided the edge";
  return unknown;
}

Verdict evaluate_edge(const StateRegistry& registry, const std::string& src, const std::string& dst,
                      const std::vector<Certificate>& certificates, const EngineOptions& options) {
  const auto s = compute_facts(registry.get(src), certificates, options);
  const auto d = compute_facts(registry.get(dst), certificates, options);
  return evaluate_edge(s, d, certificates, options);
}

OrderGraph::OrderGraph(std::vector<std::string> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (!index_.emplace(std::make_pair(edges_[k].src, edges_[k].dst), k).second) {
      throw ValidationError("duplicate edge " + edges_[k].src + " -> " + edges_[k].dst);
    }
  }
  for (const auto& a : nodes_)
    for (const auto& b : nodes_)
      if (a != b && !index_.contains({a, b})) throw ValidationError("graph is missing edge " + a + " -> " + b);
}

const Verdict& OrderGraph::verdict(const std::string& src, const std::string& dst) const {
  static const Verdict kSelf{VerdictValue::Yes, Rule::Identity, "identity process", {}};
  if (src == dst && std::find(nodes_.begin(), nodes_.end(), src) != nodes_.end()) return kSelf;
  const auto it = index_.find({src, dst});
  if (it == index_.end()) throw ValidationError("no edge " + src + " -> " + dst + " in graph");
  return edges_[it->second].verdict;
}

VerdictValue OrderGraph::value(const std::string& src, const std::string& dst) const {
  return verdict(src, dst).value;
}

OrderGraph build_graph(const StateRegistry& states, const std::vector<Certificate>& certificates,
                       const EngineOptions& options) {
  if (states.size() < 2) throw ValidationError("build_graph needs at least two states");
  for (const auto& c : certificates) c.validate();
  std::vector<StateFacts> facts;
  facts.reserve(states.size());
  for (const auto& s : states.states()) facts.push_back(compute_facts(s, certificates, options));
  std::vector<Edge> edges;
  for (const auto& a : facts)
    for (const auto& b : facts)
      if (a.label != b.label) edges.push_back({a.label, b.label, evaluate_edge(a, b, certificates, options)});
  return {states.labels(), std::move(edges)};
}

std::vector<LabelPair> find_incomparable_pairs(const OrderGraph& g) {
  std::vector<LabelPair> out;
  const auto& n = g.nodes();
  for (std::size_t i = 0; i < n.size(); ++i)
    for (std::size_t j = i + 1; j < n.size(); ++j)
      if (g.value(n[i], n[j]) == VerdictValue::No && g.value(n[j], n[i]) == VerdictValue::No)
        out.emplace_back(n[i], n[j]);
  return out;
}

std::vector<LabelPair> find_undecided_pairs(const OrderGraph& g) {
  std::vector<LabelPair> out;
  const auto& n = g.nodes();
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      const auto ab = g.value(n[i], n[j]);
      const auto ba = g.value(n[j], n[i]);
      const bool any_yes = ab == VerdictValue::Yes || ba == VerdictValue::Yes;
      const bool any_unknown = ab == VerdictValue::Unknown || ba == VerdictValue::Unknown;
      if (!any_yes && any_unknown) out.emplace_back(n[i], n[j]);
    }
  }
  return out;
}

std::vector<LabelTriple> find_axiom5_violations(const OrderGraph& g) {
  std::vector<LabelTriple> out;
  const auto pairs = find_incomparable_pairs(g);
  for (const auto& c : g.nodes()) {
    for (const auto& [a, b] : pairs) {
      if (c == a || c == b) continue;
      if (g.value(c, a) == VerdictValue::Yes && g.value(c, b) == VerdictValue::Yes) out.emplace_back(c, a, b);
    }
  }
  return out;
}

std::string to_dot(const OrderGraph& g) {
  std::ostringstream os;
  os << "digraph accessibility {\n";
  os << "  node [shape=ellipse];\n";
  for (const auto& n : g.nodes()) os << "  \"" << n << "\";\n";
  for (const auto& e : g.edges()) {
    if (e.verdict.value == VerdictValue::Yes) {
      os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << rule_id(*e.verdict.rule) << "\"];\n";
    } else if (e.verdict.value == VerdictValue::Unknown) {
      os << "  \"" << e.src << "\" -> \"" << e.dst << "\" [style=dashed, color=gray];\n";
    }
  }
  for (const auto& [a, b] : find_incomparable_pairs(g)) {
    os << "  \"" << a << "\" -> \"" << b
       << "\" [dir=none, style=dotted, color=red, constraint=false, label=\"incomparable\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace entorder
