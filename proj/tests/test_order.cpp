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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "entorder/criteria.hpp"
#include "entorder/measures.hpp"
#include "entorder/order.hpp"
#include "oracles.hpp"

using namespace entorder;

namespace {

PureState sigma_ab() { return pure_with_entanglement(0.005, {3, 3}, "sigma_AB"); }

StateRegistry mixed_registry() {
  StateRegistry reg;
  reg.add(max_entangled(3));
  reg.add(tiles_bound_state());
  reg.add(sigma_ab());
  return reg;
}

std::vector<Certificate> mixed_certificates() {
  return {Certificate::lower_bound("rho_AB", "E_C", 0.01, "Vidal-Cirac positive cost"),
          Certificate::upper_bound("sigma_AB", "E_C", entropy_of_entanglement(sigma_ab()),
                                   "pure-state cost equals entropy of entanglement")};
}

StateRegistry pure_registry() {
  StateRegistry reg;
  reg.add(max_entangled(3));
  reg.add(builtin_state("phi1"));
  reg.add(builtin_state("phi2"));
  return reg;
}

using Expectation = std::map<LabelPair, std::pair<VerdictValue, Rule>>;

void check_graph(const OrderGraph& g, const Expectation& expected) {
  CHECK(g.edges().size() == expected.size());
  for (const auto& [pair, want] : expected) {
    CAPTURE(pair.first);
    CAPTURE(pair.second);
    const Verdict& v = g.verdict(pair.first, pair.second);
    CHECK(v.value == want.first);
    REQUIRE(v.rule.has_value());
    CHECK(*v.rule == want.second);
  }
}

// Every verdict in `tight` is Unknown or equals the one in `loose`.
void check_no_flips(const OrderGraph& loose, const OrderGraph& tight) {
  for (const auto& e : tight.edges()) {
    if (e.verdict.value == VerdictValue::Unknown) continue;
    CHECK(e.verdict.value == loose.value(e.src, e.dst));
  }
}

}  // namespace

TEST_CASE("mixed-state counterexample graph") {
  const OrderGraph g = build_graph(mixed_registry(), mixed_certificates());
  using enum VerdictValue;
  check_graph(g, {{{"Phi3", "rho_AB"}, {Yes, Rule::MaximalSource}},
                  {{"Phi3", "sigma_AB"}, {Yes, Rule::Nielsen}},
                  {{"rho_AB", "Phi3"}, {No, Rule::PptNoGo}},
                  {{"rho_AB", "sigma_AB"}, {No, Rule::PptNoGo}},
                  {{"sigma_AB", "Phi3"}, {No, Rule::Nielsen}},
                  {{"sigma_AB", "rho_AB"}, {No, Rule::MonotoneGap}}});
  CHECK(find_incomparable_pairs(g) == std::vector<LabelPair>{{"rho_AB", "sigma_AB"}});
  CHECK(find_axiom5_violations(g) == std::vector<LabelTriple>{{"Phi3", "rho_AB", "sigma_AB"}});
  CHECK(find_undecided_pairs(g).empty());

  const std::string why = g.verdict("sigma_AB", "rho_AB").justification;
  CHECK(why.find("E_C") != std::string::npos);
  CHECK(why.find("Vidal-Cirac") != std::string::npos);
}

TEST_CASE("pure single-copy graph") {
  const OrderGraph g = build_graph(pure_registry(), {});
  using enum VerdictValue;
  check_graph(g, {{{"Phi3", "phi1"}, {Yes, Rule::Nielsen}},
                  {{"Phi3", "phi2"}, {Yes, Rule::Nielsen}},
                  {{"phi1", "Phi3"}, {No, Rule::Nielsen}},
                  {{"phi2", "Phi3"}, {No, Rule::Nielsen}},
                  {{"phi1", "phi2"}, {No, Rule::Nielsen}},
                  {{"phi2", "phi1"}, {No, Rule::Nielsen}}});
  CHECK(find_incomparable_pairs(g) == std::vector<LabelPair>{{"phi1", "phi2"}});
  CHECK(find_axiom5_violations(g) == std::vector<LabelTriple>{{"Phi3", "phi1", "phi2"}});
}

TEST_CASE("evaluate_edge examples") {
  const auto reg = mixed_registry();
  const auto certs = mixed_certificates();
  const Verdict sr = evaluate_edge(reg, "sigma_AB", "rho_AB", certs);
  CHECK(sr.value == VerdictValue::No);
  CHECK(*sr.rule == Rule::MonotoneGap);
  const Verdict rs = evaluate_edge(reg, "rho_AB", "sigma_AB", certs);
  CHECK(rs.value == VerdictValue::No);
  CHECK(*rs.rule == Rule::PptNoGo);
  const Verdict pr = evaluate_edge(reg, "Phi3", "rho_AB", certs);
  CHECK(pr.value == VerdictValue::Yes);
  CHECK(*pr.rule == Rule::MaximalSource);

  auto with_edge = certs;
  with_edge.push_back(Certificate::edge(true, "Phi3", "rho_AB", "teleportation"));
  CHECK(*evaluate_edge(reg, "Phi3", "rho_AB", with_edge).rule == Rule::Certificate);

  // Certificates outrank computed rules.
  with_edge.push_back(Certificate::edge(true, "rho_AB", "sigma_AB", "hypothetical"));
  CHECK(evaluate_edge(reg, "rho_AB", "sigma_AB", with_edge).value == VerdictValue::Yes);

  CHECK_THROWS_AS(evaluate_edge(reg, "missing", "rho_AB", certs), ValidationError);
  CHECK(evaluate_edge(reg, "rho_AB", "rho_AB", certs).value == VerdictValue::Yes);
}

TEST_CASE("identical states are mutually reachable") {
  StateRegistry reg;
  reg.add(tiles_bound_state());
  reg.add(DensityState(tiles_bound_state().matrix(), {3, 3}, "rho_copy"));
  const OrderGraph g = build_graph(reg, {});
  CHECK(g.value("rho_AB", "rho_copy") == VerdictValue::Yes);
  CHECK(g.value("rho_copy", "rho_AB") == VerdictValue::Yes);
  CHECK(*g.verdict("rho_AB", "rho_copy").rule == Rule::Identity);
  CHECK(g.value("rho_AB", "rho_AB") == VerdictValue::Yes);
  CHECK(find_axiom5_violations(g).empty());

  StateRegistry three;
  three.add(max_entangled(2));
  three.add(max_entangled(2).relabeled("Bell_b"));
  three.add(max_entangled(2).relabeled("Bell_c"));
  const OrderGraph all_yes = build_graph(three, {});
  for (const auto& e : all_yes.edges()) CHECK(e.verdict.value == VerdictValue::Yes);
  CHECK(find_axiom5_violations(all_yes).empty());
  CHECK(find_incomparable_pairs(all_yes).empty());
}

TEST_CASE("undecidable pairs stay unknown") {
  oracle::Random rnd(500);
  StateRegistry reg;
  while (reg.size() < 2) {
    const DensityState rho(rnd.density(4, 3), {2, 2}, "npt" + std::to_string(reg.size()));
    if (!ppt_check(rho).is_ppt) reg.add(rho);
  }
  const std::vector<Certificate> certs{Certificate::lower_bound("npt0", "E_C", 0.1, "c"),
                                       Certificate::upper_bound("npt0", "E_C", 0.4, "c"),
                                       Certificate::lower_bound("npt1", "E_C", 0.2, "c"),
                                       Certificate::upper_bound("npt1", "E_C", 0.5, "c")};
  const OrderGraph g = build_graph(reg, certs);
  for (const auto& e : g.edges()) {
    CHECK(e.verdict.value == VerdictValue::Unknown);
    CHECK_FALSE(e.verdict.rule.has_value());
    CHECK(e.verdict.abstained.size() == 7);
  }
  CHECK(find_undecided_pairs(g) == std::vector<LabelPair>{{"npt0", "npt1"}});
  const std::string dot = to_dot(g);
  CHECK(dot.find("\"npt0\" -> \"npt1\" [style=dashed, color=gray];") != std::string::npos);
  CHECK(dot.find("\"npt1\" -> \"npt0\" [style=dashed, color=gray];") != std::string::npos);
}

TEST_CASE("gap certificates separate a mixed state from a pure one") {
  oracle::Random rnd(501);
  DensityState tau(rnd.density(9, 2), {3, 3}, "tau");
  while (ppt_check(tau).is_ppt) tau = DensityState(rnd.density(9, 2), {3, 3}, "tau");
  StateRegistry reg;
  reg.add(tau);
  reg.add(pure_with_entanglement(0.3, {3, 3}, "psi"));
  const std::vector<Certificate> certs{Certificate::lower_bound("tau", "E_C", 0.5, "cost bound"),
                                       Certificate::upper_bound("tau", "E_D", 0.1, "distillation bound")};
  const OrderGraph g = build_graph(reg, certs, EngineOptions::asymptotic());
  CHECK(g.value("psi", "tau") == VerdictValue::No);
  CHECK(g.value("tau", "psi") == VerdictValue::No);
  CHECK(g.verdict("psi", "tau").justification.find("E_C") != std::string::npos);
  CHECK(g.verdict("tau", "psi").justification.find("E_D") != std::string::npos);
  CHECK(find_incomparable_pairs(g).size() == 1);
}

TEST_CASE("certificate and bound validation") {
  const auto reg = mixed_registry();
  CHECK_THROWS_AS(build_graph(reg, {Certificate::edge(true, "Phi3", "rho_AB", "")}), ValidationError);
  CHECK_THROWS_AS(build_graph(reg, {Certificate::lower_bound("rho_AB", "", 0.1, "c")}), ValidationError);
  CHECK_THROWS_AS(build_graph(reg, {Certificate::lower_bound("rho_AB", "E_C", 0.5, "c"),
                                    Certificate::upper_bound("rho_AB", "E_C", 0.1, "c")}),
                  ValidationError);
  CHECK_THROWS_AS(build_graph(reg, {Certificate::lower_bound("rho_AB", "E_D", 0.5, "c")}), ValidationError);
  StateRegistry one;
  one.add(max_entangled(3));
  CHECK_THROWS_AS(build_graph(one, {}), ValidationError);
}

TEST_CASE("property: tightening every tolerance tenfold flips no verdict") {
  EngineOptions tight;
  tight.ppt_tol /= 10;
  tight.gap_margin /= 10;
  tight.majorization_tol /= 10;
  tight.asymptotic_tol /= 10;
  tight.max_entangled_tol /= 10;
  tight.identity_tol /= 10;
  check_no_flips(build_graph(mixed_registry(), mixed_certificates()),
                 build_graph(mixed_registry(), mixed_certificates(), tight));
  check_no_flips(build_graph(pure_registry(), {}), build_graph(pure_registry(), {}, tight));
}

TEST_CASE("property: no rule ordering produces a contradiction") {
  const auto reg = mixed_registry();
  const auto certs = mixed_certificates();
  std::vector<Rule> tail{Rule::PptNoGo, Rule::MonotoneGap, Rule::Nielsen, Rule::PureAsymptotic, Rule::MaximalSource};
  std::sort(tail.begin(), tail.end());
  std::map<LabelPair, std::set<VerdictValue>> seen;
  int orderings = 0;
  do {
    EngineOptions opts;
    opts.rule_order = {Rule::Certificate};
    opts.rule_order.insert(opts.rule_order.end(), tail.begin(), tail.end());
    const OrderGraph g = build_graph(reg, certs, opts);
    for (const auto& e : g.edges())
      if (e.verdict.value != VerdictValue::Unknown) seen[{e.src, e.dst}].insert(e.verdict.value);
    ++orderings;
  } while (std::next_permutation(tail.begin(), tail.end()));
  CHECK(orderings == 120);
  for (const auto& [pair, values] : seen) {
    CAPTURE(pair.first);
    CAPTURE(pair.second);
    CHECK(values.size() == 1);
  }

  // Stronger: no two individual rules disagree on any edge.
  std::vector<StateFacts> facts;
  for (const auto& s : reg.states()) facts.push_back(compute_facts(s, certs));
  for (const auto& a : facts) {
    for (const auto& b : facts) {
      if (a.label == b.label) continue;
      std::set<VerdictValue> values;
      for (Rule r : {Rule::Certificate, Rule::PptNoGo, Rule::MonotoneGap, Rule::Nielsen, Rule::PureAsymptotic,
                     Rule::MaximalSource, Rule::Identity})
        if (auto v = apply_rule(r, a, b, certs)) values.insert(v->value);
      CHECK(values.size() <= 1);
    }
  }
}

TEST_CASE("property: asymptotic YES edges between pure states are transitive") {
  oracle::Random rnd(502);
  for (int t = 0; t < 20; ++t) {
    StateRegistry reg;
    for (int k = 0; k < 5; ++k) reg.add(PureState(rnd.unit_ket(9), DimPair{3, 3}, "s" + std::to_string(k)));
    const OrderGraph g = build_graph(reg, {}, EngineOptions::asymptotic());
    for (const auto& a : g.nodes())
      for (const auto& b : g.nodes())
        for (const auto& c : g.nodes())
          if (g.value(a, b) == VerdictValue::Yes && g.value(b, c) == VerdictValue::Yes)
            REQUIRE(g.value(a, c) == VerdictValue::Yes);
    // Entropy totally orders pure states, so nothing is incomparable.
    CHECK(find_incomparable_pairs(g).empty());
    for (const auto& e : g.edges()) CHECK(e.verdict.value != VerdictValue::Unknown);
  }
}

TEST_CASE("property: every NO premise re-checks independently") {
  oracle::Random rnd(503);
  std::vector<std::pair<StateRegistry, std::vector<Certificate>>> cases;
  cases.emplace_back(mixed_registry(), mixed_certificates());
  cases.emplace_back(pure_registry(), std::vector<Certificate>{});
  StateRegistry random_pure;
  for (int k = 0; k < 4; ++k) random_pure.add(PureState(rnd.unit_ket(9), DimPair{3, 3}, "r" + std::to_string(k)));
  cases.emplace_back(std::move(random_pure), std::vector<Certificate>{});

  for (const auto& [reg, certs] : cases) {
    const OrderGraph g = build_graph(reg, certs);
    for (const auto& e : g.edges()) {
      if (e.verdict.value != VerdictValue::No) continue;
      const State& src = reg.get(e.src);
      const State& dst = reg.get(e.dst);
      switch (*e.verdict.rule) {
        case Rule::PptNoGo: {
          const DimPair ds = dims_of(src);
          const DimPair dd = dims_of(dst);
          const ComplexMatrix ps = oracle::transpose_b(density_of(src), ds.dim_a, ds.dim_b);
          const ComplexMatrix pd = oracle::transpose_b(density_of(dst), dd.dim_a, dd.dim_b);
          CHECK(Eigen::SelfAdjointEigenSolver<ComplexMatrix>(ps).eigenvalues().minCoeff() >= -1e-10);
          CHECK(Eigen::SelfAdjointEigenSolver<ComplexMatrix>(pd).eigenvalues().minCoeff() < -1e-10);
          break;
        }
        case Rule::MonotoneGap: {
          const std::string& why = e.verdict.justification;
          const std::string m = why.substr(why.find(": ") + 2, 3);
          double lo = 0.0;
          double hi = 1e300;
          for (const auto& c : certs) {
            if (c.measure != m) continue;
            if (c.subject == e.dst && c.kind == CertificateKind::MeasureLowerBound) lo = std::max(lo, *c.value);
            if (c.subject == e.src && c.kind == CertificateKind::MeasureUpperBound) hi = std::min(hi, *c.value);
          }
          CHECK(lo > hi);
          break;
        }
        case Rule::Nielsen: {
          const auto ps = schmidt(std::get<PureState>(src)).probabilities();
          const auto pd = schmidt(std::get<PureState>(dst)).probabilities();
          const auto ss = oracle::partial_sums(ps, 9);
          const auto sd = oracle::partial_sums(pd, 9);
          bool violated = false;
          for (std::size_t i = 0; i < ss.size(); ++i) violated = violated || ss[i] > sd[i] + 1e-10;
          CHECK(violated);
          break;
        }
        default:
          FAIL("unexpected NO rule " << rule_id(*e.verdict.rule));
      }
    }
  }
}

TEST_CASE("dot rendering") {
  const std::string dot = to_dot(build_graph(mixed_registry(), mixed_certificates()));
  CHECK(dot.rfind("digraph accessibility {\n", 0) == 0);
  CHECK(dot.find("\"Phi3\" -> \"rho_AB\" [label=\"R6\"];") != std::string::npos);
  CHECK(dot.find("\"rho_AB\" -> \"Phi3\"") == std::string::npos);
  CHECK(dot.find("label=\"incomparable\"") != std::string::npos);
}
