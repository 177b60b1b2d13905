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

#include <string>
#include <variant>
#include <vector>

#include "entorder/linalg.hpp"

namespace entorder {

inline constexpr double kStateTol = 1e-10;

/// Normalized state vector on a bipartite (two dims) or tripartite (three
/// dims, ancilla first) system.
class PureState {
 public:
  PureState(Ket ket, std::vector<int> dims, std::string label);
  PureState(Ket ket, const DimPair& dims, std::string label);

  [[nodiscard]] const Ket& ket() const { return ket_; }
  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  [[nodiscard]] bool is_bipartite() const { return dims_.size() == 2; }

  /// Throws DimensionError for tripartite states.
  [[nodiscard]] DimPair bipartite_dims() const;
  [[nodiscard]] ComplexMatrix density() const { return projector(ket_); }

  /// dim_a x dim_b matrix C with ket = sum_ij C(i, j) |i>|j>.
  [[nodiscard]] ComplexMatrix coefficient_matrix() const;

  [[nodiscard]] PureState relabeled(std::string label) const;

 private:
  Ket ket_;
  std::vector<int> dims_;
  std::string label_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on A (x) B.
class DensityState {
 public:
  DensityState(ComplexMatrix matrix, const DimPair& dims, std::string label);

  [[nodiscard]] const ComplexMatrix& matrix() const { return matrix_; }
  [[nodiscard]] const DimPair& dims() const { return dims_; }
  [[nodiscard]] const std::string& label() const { return label_; }

  static DensityState from_pure(const PureState& psi);

 private:
  ComplexMatrix matrix_;
  DimPair dims_;
  std::string label_;
};

using State = std::variant<PureState, DensityState>;

const std::string& label_of(const State& s);
DimPair dims_of(const State& s);
ComplexMatrix density_of(const State& s);
inline bool is_pure(const State& s) { return std::holds_alternative<PureState>(s); }

/// Insertion-ordered label -> state map. States are validated on
/// construction, so anything stored here satisfies its invariants.
class StateRegistry {
 public:
  /// Throws ValidationError on a duplicate label; tripartite pure states are
  /// rejected since the registry holds bipartite states only.
  void add(State s);

  [[nodiscard]] bool contains(const std::string& label) const;
  [[nodiscard]] const State& get(const std::string& label) const;
  [[nodiscard]] std::vector<std::string> labels() const;
  [[nodiscard]] std::size_t size() const { return states_.size(); }
  [[nodiscard]] const std::vector<State>& states() const { return states_; }

 private:
  std::vector<State> states_;
};

/// (1/sqrt(d)) sum_i |ii>, labelled "Phi<d>".
PureState max_entangled(int d);

/// sum_i c_i |ii> on the given dimensions.
PureState pure_from_schmidt(const std::vector<double>& coeffs, const DimPair& dims,
                            std::string label = "schmidt");

/// cos(t)|00> + sin(t)|11> on dims, with t found by bisection on [0, pi/4]
/// so that its entropy of entanglement equals target_bits (0 < target <= 1).
PureState pure_with_entanglement(double target_bits, const DimPair& dims, std::string label);

/// The five product kets of the 3x3 "Tiles" unextendible product basis.
std::vector<Ket> tiles_upb();

/// (I - sum_i |psi_i><psi_i|) / 4 over the Tiles UPB: a PPT bound entangled
/// state of rank 4.
DensityState tiles_bound_state();

/// Canonical purification sum_i sqrt(l_i) |i>_C (x) |e_i>_AB over nonzero
/// eigenvalues (descending), each eigenvector phase-fixed so its first nonzero
/// component is real positive. Result dims are {rank, dim_a, dim_b}.
PureState purify(const DensityState& rho);

/// Named states used throughout the examples and the CLI: "Phi3", "phi1",
/// "phi2", "rho_AB", "classical-corr", "Bell". Throws ValidationError for an
/// unknown name.
State builtin_state(const std::string& name);
std::vector<std::string> builtin_state_names();

}  // namespace entorder
