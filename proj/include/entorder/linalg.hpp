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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace entorder {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when operand shapes or subsystem dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value violates a domain invariant (Hermiticity, normalization,
/// positivity, linear independence, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHermitianTol = 1e-10;

/// Local dimensions of the Alice (A) and Bob (B) subsystems.
///
/// Composite indices are A-major throughout the library: the basis state
/// |i>_A |j>_B sits at index i * dim_b + j.
struct DimPair {
  int dim_a = 1;
  int dim_b = 1;

  DimPair() = default;
  DimPair(int a, int b);

  [[nodiscard]] int total() const { return dim_a * dim_b; }
  friend bool operator==(const DimPair&, const DimPair&) = default;
};

enum class Subsystem { A, B };

/// Eigen-decomposition of a Hermitian matrix, eigenvalues in descending order.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]
};

/// Checks shape and finiteness invariants; throws ValidationError.
void validate_matrix(const ComplexMatrix& m);

/// Largest entrywise |m - m^dagger|. Requires a square matrix.
double hermitian_deviation(const ComplexMatrix& m);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor_product(const Ket& a, const Ket& b);

/// Reduced matrix on the `keep` subsystem.
ComplexMatrix partial_trace(const ComplexMatrix& m, const DimPair& dims, Subsystem keep);

/// Transposes the B indices only.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimPair& dims);

/// Throws ValidationError naming the deviation if m is not Hermitian within
/// kHermitianTol.
HermitianSpectrum hermitian_eig(const ComplexMatrix& m);

/// Eigenvalues only, descending. Same preconditions as hermitian_eig.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// ||rho - sigma||_1, the sum of absolute eigenvalues of the difference.
double trace_norm_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Orthonormal basis of the orthogonal complement of span(vectors) in C^dim.
///
/// Deterministic: the inputs are orthonormalized in order, then standard basis
/// vectors |0>, |1>, ... are offered as candidates to Gram-Schmidt and kept
/// when their residual norm exceeds 1e-8.
std::vector<Ket> orthonormal_complement(const std::vector<Ket>& vectors, int dim);

/// |v><v|
ComplexMatrix projector(const Ket& v);

/// exp(A) for anti-Hermitian A, computed through the spectrum of -iA.
ComplexMatrix expm_anti_hermitian(const ComplexMatrix& a);

}  // namespace entorder
