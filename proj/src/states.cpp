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

#include "entorder/states.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>

namespace entorder {

namespace {

constexpr double kZeroEigenvalue = 1e-10;

Ket basis_ket(int dim, int i) { return Ket::Unit(dim, i); }

double binary_entropy_bits(double p) {
  double h = 0.0;
  for (double x : {p, 1.0 - p}) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace

PureState::PureState(Ket ket, std::vector<int> dims, std::string label)
    : ket_(std::move(ket)), dims_(std::move(dims)), label_(std::move(label)) {
  if (dims_.size() != 2 && dims_.size() != 3) {
    throw DimensionError("pure state '" + label_ + "' needs 2 or 3 subsystem dimensions");
  }
  for (int d : dims_) {
    if (d < 1) throw DimensionError("pure state '" + label_ + "' has a subsystem dimension < 1");
  }
  const long total = std::accumulate(dims_.begin(), dims_.end(), 1L, std::multiplies<>());
  if (ket_.size() != total) {
    throw DimensionError("pure state '" + label_ + "' has " + std::to_string(ket_.size()) +
                         " amplitudes, dims require " + std::to_string(total));
  }
  if (!ket_.allFinite()) throw ValidationError("pure state '" + label_ + "' has non-finite amplitudes");
  const double norm = ket_.norm();
  if (std::abs(norm - 1.0) > kStateTol) {
    std::ostringstream os;
    os << "pure state '" << label_ << "' is not normalized (norm = " << norm << ")";
    throw ValidationError(os.str());
  }
}

PureState::PureState(Ket ket, const DimPair& dims, std::string label)
    : PureState(std::move(ket), std::vector<int>{dims.dim_a, dims.dim_b}, std::move(label)) {}

DimPair PureState::bipartite_dims() const {
  if (!is_bipartite()) throw DimensionError("state '" + label_ + "' is not bipartite");
  return {dims_[0], dims_[1]};
}

ComplexMatrix PureState::coefficient_matrix() const {
  const DimPair d = bipartite_dims();
  ComplexMatrix c(d.dim_a, d.dim_b);
  for (int i = 0; i < d.dim_a; ++i)
    for (int j = 0; j < d.dim_b; ++j) c(i, j) = ket_(i * d.dim_b + j);
  return c;
}

PureState PureState::relabeled(std::string label) const { return {ket_, dims_, std::move(label)}; }

DensityState::DensityState(ComplexMatrix matrix, const DimPair& dims, std::string label)
    : matrix_(std::move(matrix)), dims_(dims), label_(std::move(label)) {
  validate_matrix(matrix_);
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != dims_.total()) {
    throw DimensionError("density state '" + label_ + "' is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", dims require side " +
                         std::to_string(dims_.total()));
  }
  std::ostringstream os;
  const double dev = hermitian_deviation(matrix_);
  if (dev > kStateTol) {
    os << "density state '" << label_ << "' is not Hermitian (max deviation " << dev << ")";
    throw ValidationError(os.str());
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTol) {
    os << "density state '" << label_ << "' has trace " << tr.real() << "+" << tr.imag() << "i, expected 1";
    throw ValidationError(os.str());
  }
  const double min_eig = hermitian_eigenvalues(matrix_).minCoeff();
  if (min_eig < -kStateTol) {
    os << "density state '" << label_ << "' is not positive (min eigenvalue " << min_eig << ")";
    throw ValidationError(os.str());
  }
}

DensityState DensityState::from_pure(const PureState& psi) {
  return {psi.density(), psi.bipartite_dims(), psi.label()};
}

const std::string& label_of(const State& s) {
  return std::visit([](const auto& x) -> const std::string& { return x.label(); }, s);
}

DimPair dims_of(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return p->bipartite_dims();
  return std::get<DensityState>(s).dims();
}

ComplexMatrix density_of(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return p->density();
  return std::get<DensityState>(s).matrix();
}

void StateRegistry::add(State s) {
  if (const auto* p = std::get_if<PureState>(&s); p != nullptr && !p->is_bipartite()) {
    throw ValidationError("registry accepts bipartite states only, '" + p->label() + "' is tripartite");
  }
  if (contains(label_of(s))) throw ValidationError("duplicate state label '" + label_of(s) + "'");
  states_.push_back(std::move(s));
}

bool StateRegistry::contains(const std::string& label) const {
  for (const auto& s : states_)
    if (label_of(s) == label) return true;
  return false;
}

const State& StateRegistry::get(const std::string& label) const {
  for (const auto& s : states_)
    if (label_of(s) == label) return s;
  throw ValidationError("state '" + label + "' is not registered");
}

std::vector<std::string> StateRegistry::labels() const {
  std::vector<std::string> out;
  out.reserve(states_.size());
  for (const auto& s : states_) out.push_back(label_of(s));
  return out;
}

PureState max_entangled(int d) {
  if (d < 2) throw ValidationError("max_entangled: d must be >= 2, got " + std::to_string(d));
  std::vector<double> coeffs(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
  return pure_from_schmidt(coeffs, {d, d}, "Phi" + std::to_string(d));
}

PureState pure_from_schmidt(const std::vector<double>& coeffs, const DimPair& dims, std::string label) {
  if (coeffs.empty()) throw ValidationError("pure_from_schmidt: no coefficients");
  if (static_cast<int>(coeffs.size()) > std::min(dims.dim_a, dims.dim_b)) {
    throw DimensionError("pure_from_schmidt: " + std::to_string(coeffs.size()) +
                         " coefficients exceed the smaller local dimension");
  }
  double sq = 0.0;
  for (double c : coeffs) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw ValidationError("pure_from_schmidt: coefficients must be nonnegative");
    sq += c * c;
  }
  if (std::abs(sq - 1.0) > kStateTol) {
    std::ostringstream os;
    os << "pure_from_schmidt: squared coefficients sum to " << sq << ", expected 1";
    throw ValidationError(os.str());
  }
  Ket ket = Ket::Zero(dims.total());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto idx = static_cast<Eigen::Index>(i) * dims.dim_b + static_cast<Eigen::Index>(i);
    ket(idx) = coeffs[i];
  }
  return {std::move(ket), dims, std::move(label)};
}

PureState pure_with_entanglement(double target_bits, const DimPair& dims, std::string label) {
  if (!(target_bits > 0.0) || target_bits > 1.0) {
    throw ValidationError("pure_with_entanglement: target must lie in (0, 1] bits");
  }
  double lo = 0.0;
  double hi = std::numbers::pi / 4.0;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double c = std::cos(mid);
    if (binary_entropy_bits(c * c) < target_bits) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t = 0.5 * (lo + hi);
  return pure_from_schmidt({std::cos(t), std::sin(t)}, dims, std::move(label));
}

std::vector<Ket> tiles_upb() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const Ket e0 = basis_ket(3, 0);
  const Ket e1 = basis_ket(3, 1);
  const Ket e2 = basis_ket(3, 2);
  const Ket alt = (e0 - e1 + e2) * r3;
  return {
      tensor_product(e0, Ket((e0 + e1) * r2)),
      tensor_product(Ket((e0 + e1) * r2), e2),
      tensor_product(e2, Ket((e1 + e2) * r2)),
      tensor_product(Ket((e1 + e2) * r2), e0),
      tensor_product(alt, alt),
  };
}

DensityState tiles_bound_state() {
  ComplexMatrix p = ComplexMatrix::Identity(9, 9);
  for (const auto& psi : tiles_upb()) p -= projector(psi);
  return {p / 4.0, {3, 3}, "rho_AB"};
}

PureState purify(const DensityState& rho) {
  const auto spec = hermitian_eig(rho.matrix());
  const DimPair d = rho.dims();
  int rank = 0;
  while (rank < spec.eigenvalues.size() && spec.eigenvalues(rank) > kZeroEigenvalue) ++rank;
  Ket ket = Ket::Zero(static_cast<Eigen::Index>(rank) * d.total());
  for (int i = 0; i < rank; ++i) {
    Ket v = spec.eigenvectors.col(i);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (std::abs(v(k)) > kZeroEigenvalue) {
        v *= std::conj(v(k)) / std::abs(v(k));
        break;
      }
    }
    ket.segment(static_cast<Eigen::Index>(i) * d.total(), d.total()) = std::sqrt(spec.eigenvalues(i)) * v;
  }
  // Dropped eigenvalues leave a norm deficit of at most rank * 1e-10.
  ket /= ket.norm();
  return {std::move(ket), std::vector<int>{rank, d.dim_a, d.dim_b}, rho.label() + "_purified"};
}

std::vector<std::string> builtin_state_names() {
  return {"Phi3", "phi1", "phi2", "rho_AB", "classical-corr", "Bell"};
}

State builtin_state(const std::string& name) {
  if (name == "Phi3") return max_entangled(3);
  if (name == "phi1") return pure_from_schmidt({std::sqrt(0.5), std::sqrt(0.5)}, {2, 2}, "phi1");
  if (name == "phi2") {
    return pure_from_schmidt({std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 6.0), std::sqrt(1.0 / 6.0)}, {3, 3}, "phi2");
  }
  if (name == "rho_AB") return tiles_bound_state();
  if (name == "classical-corr") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 0.5;
    m(3, 3) = 0.5;
    return DensityState(m, {2, 2}, "classical-corr");
  }
  if (name == "Bell") return max_entangled(2).relabeled("Bell");
  throw ValidationError("unknown built-in state '" + name + "'");
}

}  // namespace entorder
