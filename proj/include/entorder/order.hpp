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

#pragma once

#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "entorder/criteria.hpp"
#include "entorder/states.hpp"

namespace entorder {

enum class VerdictValue { Yes, No, Unknown };

/// Decision rules, in their default priority order.
enum class Rule {
  Certificate,     // R1: supplied edge certificate
  PptNoGo,         // R2: PPT source cannot reach an NPT target
  MonotoneGap,     // R3: lo(target) > hi(source) for an asymptotic monotone
  Nielsen,         // R4: single-copy majorization (pure pairs)
  PureAsymptotic,  // R5: entropy ordering (pure pairs)
  MaximalSource,   // R6: Phi_d prepares anything on at most d x d
  Identity,        // self-edges and numerically identical states
};

std::string rule_id(Rule r);    // "R1" ... "R6", "R0" for Identity
std::string rule_name(Rule r);  // human-readable
std::string to_string(VerdictValue v);

struct Verdict {
  VerdictValue value = VerdictValue::Unknown;
  std::optional<Rule> rule;
  std::string justification;
  std::vector<Rule> abstained;  // populated for Unknown
};

enum class CertificateKind { MeasureLowerBound, MeasureUpperBound, EdgeYes, EdgeNo };

std::string to_string(CertificateKind k);
CertificateKind certificate_kind_from_string(const std::string& s);

/// An externally established fact. Measure certificates bound a named quantity
/// on `subject`; edge certificates decide the conversion subject -> target.
struct Certificate {
  CertificateKind kind = CertificateKind::MeasureLowerBound;
  std::string subject;
  std::string target;  // edges only
  std::optional<std::string> measure;
  std::optional<double> value;
  std::string citation;

  /// Throws ValidationError if the invariants for `kind` are not met.
  void validate() const;

  static Certificate lower_bound(std::string subject, std::string measure, double value, std::string citation);
  static Certificate upper_bound(std::string subject, std::string measure, double value, std::string citation);
  static Certificate edge(bool yes, std::string src, std::string dst, std::string citation);
};

struct EngineOptions {
  std::vector<Rule> rule_order{Rule::Certificate, Rule::PptNoGo, Rule::MonotoneGap,
                               Rule::Nielsen,     Rule::PureAsymptotic, Rule::MaximalSource};
  double ppt_tol = 1e-10;
  double gap_margin = 1e-9;
  double majorization_tol = 1e-10;
  double asymptotic_tol = 1e-9;
  double max_entangled_tol = 1e-10;
  double identity_tol = 1e-10;
  /// Quantities that cannot increase under asymptotic same-copy conversion.
  std::set<std::string> monotones{"E_C", "E_D"};
  /// Give pure states the exact intervals E_C = E_D = entropy of entanglement.
  bool derive_pure_intervals = false;

  /// Default profile: Nielsen decides pure pairs.
  static EngineOptions single_copy() { return {}; }
  /// Asymptotic profile: R4 removed and pure-state intervals derived, so pure
  /// pairs are decided by R3 (No) or R5 (Yes).
  static EngineOptions asymptotic();
};

/// Bounds on one quantity for one state, with the source of each side.
struct Bounds {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  std::string lo_source = "nonnegativity";
  std::string hi_source = "none";
};

/// Everything the rules need to know about one state, computed once.
struct StateFacts {
  std::string label;
  DimPair dims;
  ComplexMatrix density;
  std::optional<PureState> pure;
  PptVerdict ppt;
  std::vector<double> schmidt_probabilities;  // pure states only
  double entanglement = 0.0;                  // pure states only
  std::optional<int> maximal_dimension;       // d when the state is Phi_d
  std::map<std::string, Bounds> bounds;
};

StateFacts compute_facts(const State& s, const std::vector<Certificate>& certificates,
                         const EngineOptions& options = {});

/// One rule on one ordered pair; nullopt when the rule abstains.
std::optional<Verdict> apply_rule(Rule rule, const StateFacts& src, const StateFacts& dst,
                                  const std::vector<Certificate>& certificates, const EngineOptions& options = {});

/// First decisive verdict in options.rule_order, else Unknown. A final
/// identity check turns numerically identical states into Yes.
Verdict evaluate_edge(const StateFacts& src, const StateFacts& dst, const std::vector<Certificate>& certificates,
                      const EngineOptions& options = {});

/// Throws ValidationError if either label is not registered.
Verdict evaluate_edge(const StateRegistry& registry, const std::string& src, const std::string& dst,
                      const std::vector<Certificate>& certificates, const EngineOptions& options = {});

struct Edge {
  std::string src;
  std::string dst;
  Verdict verdict;
};

class OrderGraph {
 public:
  OrderGraph(std::vector<std::string> nodes, std::vector<Edge> edges);

  [[nodiscard]] const std::vector<std::string>& nodes() const { return nodes_; }
  /// Ordered pairs of distinct nodes, row-major in node order.
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  /// Self-edges are Yes. Throws ValidationError for unknown labels.
  [[nodiscard]] VerdictValue value(const std::string& src, const std::string& dst) const;
  [[nodiscard]] const Verdict& verdict(const std::string& src, const std::string& dst) const;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

/// Evaluates every ordered pair of distinct states. Throws ValidationError for
/// fewer than two states or invalid certificates.
OrderGraph build_graph(const StateRegistry& states, const std::vector<Certificate>& certificates,
                       const EngineOptions& options = {});

using LabelPair = std::pair<std::string, std::string>;
using LabelTriple = std::tuple<std::string, std::string, std::string>;

/// Unordered pairs with No in both directions, in node order.
std::vector<LabelPair> find_incomparable_pairs(const OrderGraph& g);

/// Unordered pairs with no Yes in either direction and at least one Unknown.
std::vector<LabelPair> find_undecided_pairs(const OrderGraph& g);

/// Triples (C, A, B): C reaches A and B, while A and B are incomparable.
std::vector<LabelTriple> find_axiom5_violations(const OrderGraph& g);

/// Graphviz rendering: Yes edges solid (labelled with the deciding rule), No
/// edges omitted, Unknown edges dashed gray, incomparable pairs joined by a
/// dotted red undirected edge.
std::string to_dot(const OrderGraph& g);

}  // namespace entorder
