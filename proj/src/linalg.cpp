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

#include "entorder/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace entorder {

namespace {

constexpr double kResidualTol = 1e-8;

void require_bipartite_square(const ComplexMatrix& m, const DimPair& dims, const char* op) {
  if (m.rows() != m.cols() || m.rows() != dims.total()) {
    std::ostringstream os;
    os << op << ": matrix is " << m.rows() << "x" << m.cols() << " but dims " << dims.dim_a
       << "x" << dims.dim_b << " require a square side of " << dims.total();
    throw DimensionError(os.str());
  }
}

// Removes the components of v along every vector in basis (two passes of
// modified Gram-Schmidt) and returns the residual.
Ket project_out(Ket v, const std::vector<Ket>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) v -= b * b.dot(v);
  }
  return v;
}

}  // namespace

DimPair::DimPair(int a, int b) : dim_a(a), dim_b(b) {
  if (a < 1 || b < 1) {
    throw DimensionError("subsystem dimensions must be >= 1, got " + std::to_string(a) + "x" +
                         std::to_string(b));
  }
}

void validate_matrix(const ComplexMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) throw ValidationError("matrix must have at least one entry");
  if (!m.allFinite()) throw ValidationError("matrix contains non-finite entries");
}

double hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("hermitian_deviation: matrix is not square");
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Ket tensor_product(const Ket& a, const Ket& b) {
  Ket out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const DimPair& dims, Subsystem keep) {
  require_bipartite_square(m, dims, "partial_trace");
  const int da = dims.dim_a;
  const int db = dims.dim_b;
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int k = 0; k < da; ++k)
        for (int j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < da; ++i) out += m.block(i * db, i * db, db, db);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const DimPair& dims) {
  require_bipartite_square(m, dims, "partial_transpose");
  const int da = dims.dim_a;
  const int db = dims.dim_b;
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < da; ++k) out.block(i * db, k * db, db, db) = m.block(i * db, k * db, db, db).transpose();
  return out;
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& m) {
  validate_matrix(m);
  const double dev = hermitian_deviation(m);
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eig: matrix is not Hermitian (max |m - m^dagger| = " << dev << ")";
    throw ValidationError(os.str());
  }
  const ComplexMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  // Stable descending sort: exactly tied eigenvalues keep the solver's order.
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });
  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(order[k]);
    out.eigenvectors.col(k) = solver.eigenvectors().col(order[k]);
  }
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  validate_matrix(m);
  const double dev = hermitian_deviation(m);
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "hermitian_eigenvalues: matrix is not Hermitian (max |m - m^dagger| = " << dev << ")";
    throw ValidationError(os.str());
  }
  const ComplexMatrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

namespace {

double distance_ordered(const ComplexMatrix& first, const ComplexMatrix& second) {
  return hermitian_eigenvalues(first - second).cwiseAbs().sum();
}

}  // namespace

double trace_norm_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw DimensionError("trace_norm_distance: operands differ in shape");
  }
  // A fixed operand order makes the result exactly symmetric.
  for (Eigen::Index k = 0; k < rho.size(); ++k) {
    const Complex a = rho.data()[k];
    const Complex b = sigma.data()[k];
    if (a.real() != b.real()) return a.real() < b.real() ? distance_ordered(rho, sigma) : distance_ordered(sigma, rho);
    if (a.imag() != b.imag()) return a.imag() < b.imag() ? distance_ordered(rho, sigma) : distance_ordered(sigma, rho);
  }
  return distance_ordered(rho, sigma);
}

std::vector<Ket> orthonormal_complement(const std::vector<Ket>& vectors, int dim) {
  if (dim < 1) throw DimensionError("orthonormal_complement: dim must be >= 1");
  std::vector<Ket> basis;
  basis.reserve(dim);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != dim) {
      throw DimensionError("orthonormal_complement: input " + std::to_string(k) + " has length " +
                           std::to_string(vectors[k].size()) + ", expected " + std::to_string(dim));
    }
    Ket r = project_out(vectors[k], basis);
    if (r.norm() < kResidualTol) {
      throw ValidationError("orthonormal_complement: input " + std::to_string(k) +
                            " is linearly dependent on the preceding inputs");
    }
    basis.push_back(r / r.norm());
  }
  const std::size_t n_inputs = basis.size();
  for (int e = 0; e < dim && static_cast<int>(basis.size()) < dim; ++e) {
    Ket r = project_out(Ket::Unit(dim, e), basis);
    const double norm = r.norm();
    if (norm > kResidualTol) basis.push_back(r / norm);
  }
  return {basis.begin() + static_cast<std::ptrdiff_t>(n_inputs), basis.end()};
}

ComplexMatrix projector(const Ket& v) { return v * v.adjoint(); }

ComplexMatrix expm_anti_hermitian(const ComplexMatrix& a) {
  const ComplexMatrix h = Complex(0.0, -1.0) * a;  // Hermitian when a is anti-Hermitian
  const auto spec = hermitian_eig(h);
  Eigen::VectorXcd phases(spec.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, spec.eigenvalues(k));
  return spec.eigenvectors * phases.asDiagonal() * spec.eigenvectors.adjoint();
}

}  // namespace entorder
