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

#include <cmath>

#include "entorder/criteria.hpp"
#include "entorder/measures.hpp"
#include "entorder/states.hpp"
#include "oracles.hpp"

using namespace entorder;

namespace {

// Reduced state on AB of a tripartite C (x) A (x) B ket.
ComplexMatrix trace_out_ancilla(const PureState& psi) {
  const int c = psi.dims()[0];
  const int ab = psi.dims()[1] * psi.dims()[2];
  return oracle::trace_out_a(psi.ket() * psi.ket().adjoint(), c, ab);
}

}  // namespace

TEST_CASE("max_entangled") {
  const PureState phi3 = max_entangled(3);
  CHECK(phi3.label() == "Phi3");
  Ket expected = Ket::Zero(9);
  expected(0) = expected(4) = expected(8) = 1.0 / std::sqrt(3.0);
  CHECK(oracle::max_abs(phi3.ket() - expected) < 1e-15);

  const auto p = schmidt(max_entangled(2)).probabilities();
  REQUIRE(p.size() == 2);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));

  CHECK(std::abs(max_entangled(5).ket().norm() - 1.0) < 1e-12);
  CHECK_THROWS_AS(max_entangled(1), ValidationError);
}

TEST_CASE("pure_from_schmidt") {
  const PureState phi1 = pure_from_schmidt({std::sqrt(0.5), std::sqrt(0.5)}, {2, 2}, "phi1");
  Ket e = Ket::Zero(4);
  e(0) = e(3) = 1.0 / std::sqrt(2.0);
  CHECK(oracle::max_abs(phi1.ket() - e) < 1e-15);
  CHECK(oracle::max_abs(std::get<PureState>(builtin_state("phi1")).ket() - e) < 1e-15);

  const PureState phi2 = pure_from_schmidt({std::sqrt(2.0 / 3), std::sqrt(1.0 / 6), std::sqrt(1.0 / 6)}, {3, 3});
  Ket f = Ket::Zero(9);
  f(0) = std::sqrt(2.0 / 3);
  f(4) = f(8) = std::sqrt(1.0 / 6);
  CHECK(oracle::max_abs(phi2.ket() - f) < 1e-15);
  CHECK(oracle::max_abs(std::get<PureState>(builtin_state("phi2")).ket() - f) < 1e-15);

  const PureState product = pure_from_schmidt({1.0}, {3, 3});
  CHECK(oracle::max_abs(product.ket() - Ket::Unit(9, 0)) == 0.0);

  CHECK_THROWS_AS(pure_from_schmidt({0.5, 0.5}, {2, 2}), ValidationError);
  CHECK_THROWS_AS(pure_from_schmidt({0.6, 0.6, 0.52}, {2, 2}), DimensionError);
}

TEST_CASE("pure_with_entanglement hits its target") {
  for (double target : {0.005, 0.1, 0.5, 0.99, 1.0}) {
    const PureState s = pure_with_entanglement(target, {3, 3}, "s");
    CHECK(std::abs(entropy_of_entanglement(s) - target) < 1e-12);
  }
  CHECK_THROWS_AS(pure_with_entanglement(1.5, {3, 3}, "s"), ValidationError);
}

TEST_CASE("tiles_upb") {
  const auto upb = tiles_upb();
  REQUIRE(upb.size() == 5);
  ComplexMatrix gram(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) gram(i, j) = upb[i].dot(upb[j]);
  CHECK(oracle::max_abs(gram - ComplexMatrix::Identity(5, 5)) < 1e-10);

  const auto hand = oracle::tiles_by_hand();
  for (int i = 0; i < 5; ++i) CHECK(oracle::max_abs(upb[i] - hand[i]) < 1e-15);
  CHECK(std::abs(upb[4].dot(upb[0])) < 1e-15);

  for (const auto& k : upb) CHECK(schmidt(PureState(k, DimPair{3, 3}, "k")).rank() == 1);
}

TEST_CASE("tiles_bound_state") {
  const DensityState rho = tiles_bound_state();
  CHECK(rho.label() == "rho_AB");
  CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) < 1e-14);
  const auto ev = hermitian_eigenvalues(rho.matrix());
  for (int i = 0; i < 9; ++i) CHECK(std::abs(ev(i) - (i < 4 ? 0.25 : 0.0)) < 1e-10);
  for (const auto& k : tiles_upb()) CHECK(std::abs(k.dot(rho.matrix() * k)) < 1e-15);

  ComplexMatrix assembled = ComplexMatrix::Identity(9, 9);
  for (const auto& k : oracle::tiles_by_hand()) assembled -= k * k.adjoint();
  assembled /= 4.0;
  CHECK(oracle::max_abs(rho.matrix() - assembled) <= 1e-12);
}

TEST_CASE("purify") {
  const DensityState gc = std::get<DensityState>(builtin_state("classical-corr"));
  const PureState ghz = purify(gc);
  REQUIRE(ghz.dims() == std::vector<int>{2, 2, 2});
  Ket expected = Ket::Zero(8);
  expected(0) = expected(7) = 1.0 / std::sqrt(2.0);
  CHECK(oracle::max_abs(ghz.ket() - expected) < 1e-12);

  const PureState phi = std::get<PureState>(builtin_state("phi2"));
  const PureState lifted = purify(DensityState::from_pure(phi));
  REQUIRE(lifted.dims() == std::vector<int>{1, 3, 3});
  CHECK(oracle::max_abs(lifted.ket() - phi.ket()) < 1e-12);

  const DensityState rho = tiles_bound_state();
  const PureState big = purify(rho);
  REQUIRE(big.dims() == std::vector<int>{4, 3, 3});
  CHECK(big.label() == "rho_AB_purified");
  CHECK(oracle::max_abs(trace_out_ancilla(big) - rho.matrix()) < 1e-12);
  // Each ancilla block is (1/2) times a unit vector in the complement.
  const ComplexMatrix pc = complement_projector(tiles_upb(), 9);
  for (int c = 0; c < 4; ++c) {
    const Ket block = big.ket().segment(9 * c, 9);
    CHECK(std::abs(block.norm() - 0.5) < 1e-12);
    CHECK(oracle::max_abs(pc * block - block) < 1e-12);
  }
}

TEST_CASE("property: purification reproduces its input") {
  oracle::Random rnd(200);
  for (int t = 0; t < 200; ++t) {
    const int rank = rnd.integer(1, 4);
    const DensityState rho(rnd.density(9, rank), {3, 3}, "r");
    const PureState psi = purify(rho);
    REQUIRE(psi.dims()[0] == rank);
    REQUIRE(trace_norm_distance(trace_out_ancilla(psi), rho.matrix()) <= 1e-9);
  }
}

TEST_CASE("state validation") {
  Ket unnormalized = Ket::Ones(4);
  CHECK_THROWS_AS(PureState(unnormalized, DimPair{2, 2}, "x"), ValidationError);
  CHECK_THROWS_AS(PureState(Ket::Unit(5, 0), DimPair{2, 2}, "x"), DimensionError);

  ComplexMatrix not_unit = ComplexMatrix::Identity(4, 4);
  CHECK_THROWS_AS(DensityState(not_unit, {2, 2}, "x"), ValidationError);
  ComplexMatrix negative = ComplexMatrix::Zero(4, 4);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityState(negative, {2, 2}, "x"), ValidationError);
  ComplexMatrix skew = ComplexMatrix::Identity(4, 4) / 4.0;
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityState(skew, {2, 2}, "x"), ValidationError);
  CHECK_THROWS_AS(DensityState(ComplexMatrix::Identity(4, 4) / 4.0, {3, 3}, "x"), DimensionError);
}

TEST_CASE("registry") {
  StateRegistry reg;
  reg.add(max_entangled(3));
  reg.add(tiles_bound_state());
  CHECK(reg.size() == 2);
  CHECK(reg.contains("rho_AB"));
  CHECK(reg.labels() == std::vector<std::string>{"Phi3", "rho_AB"});
  CHECK_THROWS_AS(reg.add(max_entangled(3)), ValidationError);
  CHECK_THROWS_AS(reg.get("missing"), ValidationError);
  CHECK_THROWS_AS(reg.add(purify(tiles_bound_state())), ValidationError);
  CHECK(reg.size() == 2);
}

TEST_CASE("builtin states") {
  for (const auto& name : builtin_state_names()) CHECK(label_of(builtin_state(name)) == name);
  CHECK_THROWS_AS(builtin_state("nope"), ValidationError);
}
