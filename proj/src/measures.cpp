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

#include "entorder/measures.hpp"

#include <cmath>
#include <sstream>

#include "detail/random.hpp"
#include "entorder/criteria.hpp"

namespace entorder {

namespace {

// Marginal eigenvalues below this are treated as exact zeros.
constexpr double kLogFloor = 1e-15;
constexpr double kRankTol = 1e-10;

ComplexMatrix reshape_ket(const Eigen::Ref<const Ket>& v, const DimPair& d) {
  ComplexMatrix c(d.dim_a, d.dim_b);
  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_b; ++j) c(i, j) = v(i * d.dim_b + j);
  return c;
}

// p S(rho_A / p) for the unnormalized vector v, in bits.
double weighted_entanglement(const ComplexMatrix& c) {
  const double p = c.squaredNorm();
  if (p <= 0.0) return 0.0;
  const RealVector mu = hermitian_eigenvalues(c * c.adjoint());
  double h = 0.0;
  for (Eigen::Index j = 0; j < mu.size(); ++j) {
    if (mu(j) > kLogFloor * p) h -= mu(j) * std::log2(mu(j) / p);
  }
  return h;
}

// -log2(rho_A / p) C, the conjugate-gradient of weighted_entanglement.
ComplexMatrix weighted_entanglement_gradient(const ComplexMatrix& c) {
  const double p = c.squaredNorm();
  if (p <= 0.0) return ComplexMatrix::Zero(c.rows(), c.cols());
  const auto spec = hermitian_eig(c * c.adjoint());
  RealVector logs = RealVector::Zero(spec.eigenvalues.size());
  for (Eigen::Index j = 0; j < logs.size(); ++j) {
    if (spec.eigenvalues(j) > kLogFloor * p) logs(j) = -std::log2(spec.eigenvalues(j) / p);
  }
  return spec.eigenvectors * logs.asDiagonal() * spec.eigenvectors.adjoint() * c;
}

void validate_density_matrix(const ComplexMatrix& rho) {
  validate_matrix(rho);
  if (rho.rows() != rho.cols()) throw DimensionError("density matrix must be square");
  std::ostringstream os;
  if (const double dev = hermitian_deviation(rho); dev > kStateTol) {
    os << "density matrix is not Hermitian (max deviation " << dev << ")";
    throw ValidationError(os.str());
  }
  if (const Complex tr = rho.trace(); std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
    os << "density matrix has trace " << tr.real() << ", expected 1";
    throw ValidationError(os.str());
  }
}

struct DescentOutcome {
  double value;
  ComplexMatrix unitary;
  int steps;
};

DescentOutcome descend(const ComplexMatrix& weighted, ComplexMatrix v, const DimPair& dims,
                       const EofOptions& options) {
  const auto r = weighted.cols();
  const auto m = v.rows();
  double value = ensemble_entanglement(weighted, v.leftCols(r), dims);
  double step = options.initial_step;
  int steps = 0;
  while (steps < options.max_steps && step >= options.min_step) {
    ++steps;
    ComplexMatrix z = ComplexMatrix::Zero(m, m);
    z.leftCols(r) = ensemble_entanglement_gradient(weighted, v.leftCols(r), dims);
    const ComplexMatrix b = z * v.adjoint();
    const ComplexMatrix direction = b - b.adjoint();
    if (direction.norm() == 0.0) break;
    ComplexMatrix candidate = expm_anti_hermitian(-step * direction) * v;
    const double next = ensemble_entanglement(weighted, candidate.leftCols(r), dims);
    if (next < value) {
      const double gain = value - next;
      value = next;
      v = std::move(candidate);
      if (gain < options.gain_tol) break;
    } else {
      step *= 0.5;
    }
  }
  return {value, std::move(v), steps};
}

}  // namespace

MeasureInterval::MeasureInterval(std::string name, double lower, double upper, Provenance prov)
    : measure(std::move(name)), lo(lower), hi(upper), provenance(std::move(prov)) {
  if (std::isnan(lo) || std::isnan(hi)) throw ValidationError("interval for '" + measure + "' has NaN bounds");
  if (lo > hi) throw ValidationError("interval for '" + measure + "' has lo > hi");
  if (lo < 0.0) throw ValidationError("interval for '" + measure + "' has a negative lower bound");
}

double shannon_entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  validate_density_matrix(rho);
  const RealVector ev = hermitian_eigenvalues(rho);
  if (ev.minCoeff() < -kStateTol) {
    std::ostringstream os;
    os << "density matrix is not positive (min eigenvalue " << ev.minCoeff() << ")";
    throw ValidationError(os.str());
  }
  return shannon_entropy_bits(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double entropy_of_entanglement(const PureState& psi) { return shannon_entropy_bits(schmidt(psi).probabilities()); }

double negativity(const DensityState& rho) {
  const RealVector ev = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dims()));
  return (ev.cwiseAbs().sum() - 1.0) / 2.0;
}

double restored_entanglement(const DensityState& rho) {
  return von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), Subsystem::B));
}

ComplexMatrix weighted_eigenvectors(const DensityState& rho) {
  const auto spec = hermitian_eig(rho.matrix());
  int rank = 0;
  while (rank < spec.eigenvalues.size() && spec.eigenvalues(rank) > kRankTol) ++rank;
  ComplexMatrix w(rho.dims().total(), rank);
  for (int i = 0; i < rank; ++i) w.col(i) = std::sqrt(spec.eigenvalues(i)) * spec.eigenvectors.col(i);
  return w;
}

double ensemble_entanglement(const ComplexMatrix& weighted, const ComplexMatrix& isometry, const DimPair& dims) {
  const ComplexMatrix members = weighted * isometry.transpose();  // column k is the k-th member
  double total = 0.0;
  for (Eigen::Index k = 0; k < members.cols(); ++k) total += weighted_entanglement(reshape_ket(members.col(k), dims));
  return total;
}

ComplexMatrix ensemble_entanglement_gradient(const ComplexMatrix& weighted, const ComplexMatrix& isometry,
                                             const DimPair& dims) {
  const ComplexMatrix members = weighted * isometry.transpose();
  ComplexMatrix g(members.rows(), members.cols());
  for (Eigen::Index k = 0; k < members.cols(); ++k) {
    const ComplexMatrix gc = weighted_entanglement_gradient(reshape_ket(members.col(k), dims));
    for (int i = 0; i < dims.dim_a; ++i)
      for (int j = 0; j < dims.dim_b; ++j) g(i * dims.dim_b + j, k) = gc(i, j);
  }
  return (weighted.adjoint() * g).transpose();
}

EofResult eof_upper_bound(const DensityState& rho, int ensemble_size, int restarts, std::uint64_t seed,
                          const EofOptions& options) {
  const ComplexMatrix w = weighted_eigenvectors(rho);
  const auto rank = static_cast<int>(w.cols());
  if (ensemble_size < rank) {
    throw ValidationError("eof_upper_bound: ensemble size " + std::to_string(ensemble_size) + " is below rank " +
                          std::to_string(rank));
  }
  if (restarts < 1) throw ValidationError("eof_upper_bound: restarts must be >= 1");
  const DimPair dims = rho.dims();

  EofResult result;
  result.restarts = restarts;
  result.ensemble_size = ensemble_size;
  ComplexMatrix best_isometry;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    auto outcome = descend(w, detail::random_unitary(ensemble_size, rng), dims, options);
    result.value_per_restart.push_back(outcome.value);
    result.steps_per_restart.push_back(outcome.steps);
    if (outcome.value < best) {
      best = outcome.value;
      best_isometry = outcome.unitary.leftCols(rank);
      result.best_restart = r;
    }
  }

  const ComplexMatrix members = w * best_isometry.transpose();
  double bound = 0.0;
  for (Eigen::Index k = 0; k < members.cols(); ++k) {
    const double p = members.col(k).squaredNorm();
    if (p <= kLogFloor) continue;
    PureState psi(members.col(k) / std::sqrt(p), dims, rho.label() + "_eof_" + std::to_string(k));
    bound += p * entropy_of_entanglement(psi);
    result.best_decomposition.push_back({p, std::move(psi)});
  }
  result.upper_bound = bound;
  return result;
}

EofResult eof_upper_bound_sweep(const DensityState& rho, int restarts, std::uint64_t seed, const EofOptions& options) {
  const auto rank = static_cast<int>(weighted_eigenvectors(rho).cols());
  EofResult best = eof_upper_bound(rho, rank, restarts, seed, options);
  EofResult doubled = eof_upper_bound(rho, 2 * rank, restarts, seed, options);
  return doubled.upper_bound < best.upper_bound ? doubled : best;
}

}  // namespace entorder
