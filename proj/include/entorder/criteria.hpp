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
#include <utility>
#include <vector>

#include "entorder/linalg.hpp"
#include "entorder/states.hpp"

namespace entorder {

/// Schmidt coefficients, descending and nonnegative; squares sum to 1.
struct SchmidtVector {
  std::vector<double> coefficients;

  [[nodiscard]] std::vector<double> probabilities() const;
  [[nodiscard]] int rank(double tol = 1e-10) const;
};

struct PptVerdict {
  double min_eig = 0.0;
  bool is_ppt = true;
};

struct SeesawOptions {
  int max_iterations = 500;
  double gain_tol = 1e-12;
  double unextendible_margin = 1e-6;
  bool keep_traces = false;
};

struct SeesawResult {
  double best_overlap = 0.0;
  std::pair<Ket, Ket> best_product_ket;
  int restarts = 0;
  int best_restart = -1;
  std::vector<int> iterations_per_restart;
  std::vector<double> final_overlap_per_restart;
  std::vector<std::vector<double>> traces;  // filled when SeesawOptions::keep_traces
  double margin = 1e-6;

  [[nodiscard]] bool unextendible() const { return best_overlap < 1.0 - margin; }
};

inline constexpr double kMajorizationTol = 1e-10;
inline constexpr double kPptTol = 1e-10;

/// Throws DimensionError for tripartite input.
SchmidtVector schmidt(const PureState& psi);

/// x is majorized by y (x < y): every partial sum of descending x is at most
/// the corresponding partial sum of descending y, within tol. The shorter list
/// is padded with zeros. Throws ValidationError on invalid distributions.
bool majorizes(const std::vector<double>& x, const std::vector<double>& y, double tol = kMajorizationTol);

/// Deterministic single-copy LOCC convertibility of bipartite pure states.
bool nielsen_convertible(const PureState& src, const PureState& dst, double tol = kMajorizationTol);

PptVerdict ppt_check(const DensityState& rho, double tol = kPptTol);
PptVerdict ppt_check(const ComplexMatrix& rho, const DimPair& dims, double tol = kPptTol);

/// Projector onto the orthogonal complement of span(kets).
ComplexMatrix complement_projector(const std::vector<Ket>& kets, int dim);

/// Maximizes <a (x) b| P |a (x) b> over product kets, P the complement
/// projector of `upb`, by alternating top-eigenvector updates from seeded
/// random starts. Throws ValidationError if the input is not a set of
/// orthonormal product kets.
SeesawResult upb_unextendibility(const std::vector<Ket>& upb, const DimPair& dims, int restarts,
                                 std::uint64_t seed, const SeesawOptions& options = {});

}  // namespace entorder
