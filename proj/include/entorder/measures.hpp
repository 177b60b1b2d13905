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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entorder/linalg.hpp"
#include "entorder/states.hpp"

namespace entorder {

/// Where an interval came from: computed by this library, or supplied as a
/// certificate citing an external result.
struct Provenance {
  std::optional<std::string> citation;  // empty => computed

  static Provenance computed() { return {}; }
  static Provenance certificate(std::string cite) { return {std::move(cite)}; }
  [[nodiscard]] bool is_computed() const { return !citation.has_value(); }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Bounds [lo, hi] on a named entanglement quantity (bits, or dimensionless
/// for negativity). Comparisons between states are interval comparisons.
struct MeasureInterval {
  std::string measure;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  Provenance provenance;

  MeasureInterval() = default;
  MeasureInterval(std::string name, double lower, double upper, Provenance prov);

  friend bool operator==(const MeasureInterval&, const MeasureInterval&) = default;
};

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy_bits(const std::vector<double>& p);

/// Von Neumann entropy in bits. Throws ValidationError unless rho is a valid
/// density matrix (Hermitian, unit trace, positive within 1e-10).
double von_neumann_entropy(const ComplexMatrix& rho);

double entropy_of_entanglement(const PureState& psi);

/// (||rho^T_B||_1 - 1) / 2
double negativity(const DensityState& rho);

/// Entropy of Bob's marginal: the entanglement across the (ancilla + A) | B
/// cut of any purification whose ancilla sits with Alice.
double restored_entanglement(const DensityState& rho);

struct EofOptions {
  int max_steps = 2000;
  double gain_tol = 1e-9;
  double initial_step = 0.5;
  double min_step = 1e-14;
};

struct EofComponent {
  double probability;
  PureState state;
};

struct EofResult {
  double upper_bound = 0.0;
  std::vector<EofComponent> best_decomposition;
  int restarts = 0;
  int ensemble_size = 0;
  int best_restart = -1;
  std::vector<double> value_per_restart;
  std::vector<int> steps_per_restart;
};

/// Upper bound on the entanglement of formation (bits).
///
/// A decomposition of rho into m pure states corresponds to an m x r isometry U
/// acting on the weighted eigenvectors w_i = sqrt(l_i) e_i: the unnormalized
/// members are sum_i U_ki w_i. U is taken as the first r columns of an m x m
/// unitary V, which is descended along exp(-t (Z V^+ - V Z^+)) with Z the
/// gradient of the average entanglement. Steps that fail to improve are
/// halved; a restart stops when an accepted step gains less than gain_tol or
/// after max_steps. Every restart starts from a seeded Haar-random V, and the
/// lowest average over restarts is returned (ties keep the lowest index).
///
/// Throws ValidationError when ensemble_size < rank(rho) or restarts < 1.
EofResult eof_upper_bound(const DensityState& rho, int ensemble_size, int restarts, std::uint64_t seed,
                          const EofOptions& options = {});

/// Runs eof_upper_bound at ensemble sizes {rank, 2 rank} and keeps the lower.
EofResult eof_upper_bound_sweep(const DensityState& rho, int restarts, std::uint64_t seed,
                                const EofOptions& options = {});

/// Average entanglement of the decomposition generated by `isometry` (m x r)
/// from the weighted eigenvectors `weighted` (n x r). Exposed for testing the
/// descent's gradient.
double ensemble_entanglement(const ComplexMatrix& weighted, const ComplexMatrix& isometry, const DimPair& dims);

/// Wirtinger gradient d f / d conj(U) of ensemble_entanglement, m x r.
ComplexMatrix ensemble_entanglement_gradient(const ComplexMatrix& weighted, const ComplexMatrix& isometry,
                                             const DimPair& dims);

/// n x r matrix whose columns are sqrt(l_i) e_i over the nonzero spectrum.
ComplexMatrix weighted_eigenvectors(const DensityState& rho);

}  // namespace entorder
