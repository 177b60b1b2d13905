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

#include "entorder/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "detail/random.hpp"

namespace entorder {

namespace {

constexpr double kProductTol = 1e-8;

std::vector<double> sorted_descending(std::vector<double> v) {
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void validate_distribution(const std::vector<double>& p, const char* name) {
  if (p.empty()) throw ValidationError(std::string("majorizes: ") + name + " is empty");
  double total = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < -kMajorizationTol) {
      throw ValidationError(std::string("majorizes: ") + name + " has a negative or non-finite entry");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kMajorizationTol) {
    std::ostringstream os;
    os << "majorizes: " << name << " sums to " << total << ", expected 1";
    throw ValidationError(os.str());
  }
}

// <b| P |b> contracted on the B side, leaving an operator on A.
ComplexMatrix contract_b(const ComplexMatrix& p, const Ket& b, const DimPair& d) {
  ComplexMatrix out(d.dim_a, d.dim_a);
  for (int i = 0; i < d.dim_a; ++i)
    for (int k = 0; k < d.dim_a; ++k)
      out(i, k) = b.dot(p.block(i * d.dim_b, k * d.dim_b, d.dim_b, d.dim_b) * b);
  return out;
}

// <a| P |a> contracted on the A side, leaving an operator on B.
ComplexMatrix contract_a(const ComplexMatrix& p, const Ket& a, const DimPair& d) {
  ComplexMatrix out = ComplexMatrix::Zero(d.dim_b, d.dim_b);
  for (int i = 0; i < d.dim_a; ++i)
    for (int k = 0; k < d.dim_a; ++k)
      out += std::conj(a(i)) * a(k) * p.block(i * d.dim_b, k * d.dim_b, d.dim_b, d.dim_b);
  return out;
}

void validate_product_basis(const std::vector<Ket>& kets, const DimPair& dims) {
  for (std::size_t k = 0; k < kets.size(); ++k) {
    if (kets[k].size() != dims.total()) {
      throw DimensionError("upb_unextendibility: ket " + std::to_string(k) + " has the wrong length");
    }
    const PureState psi(kets[k], dims, "upb");
    const auto coeffs = schmidt(psi).coefficients;
    if (coeffs.size() > 1 && coeffs[1] > kProductTol) {
      throw ValidationError("upb_unextendibility: ket " + std::to_string(k) + " is not a product state");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(kets[j].dot(kets[k])) > kHermitianTol) {
        throw ValidationError("upb_unextendibility: kets " + std::to_string(j) + " and " + std::to_string(k) +
                              " are not orthogonal");
      }
    }
  }
}

}  // namespace

std::vector<double> SchmidtVector::probabilities() const {
  std::vector<double> p;
  p.reserve(coefficients.size());
  for (double c : coefficients) p.push_back(c * c);
  return p;
}

int SchmidtVector::rank(double tol) const {
  return static_cast<int>(std::count_if(coefficients.begin(), coefficients.end(),
                                        [tol](double c) { return c > tol; }));
}

SchmidtVector schmidt(const PureState& psi) {
  const ComplexMatrix c = psi.coefficient_matrix();
  Eigen::JacobiSVD<ComplexMatrix> svd(c);
  const RealVector& s = svd.singularValues();  // already descending
  return {std::vector<double>(s.data(), s.data() + s.size())};
}

bool majorizes(const std::vector<double>& x, const std::vector<double>& y, double tol) {
  validate_distribution(x, "x");
  validate_distribution(y, "y");
  auto xs = sorted_descending(x);
  auto ys = sorted_descending(y);
  const std::size_t n = std::max(xs.size(), ys.size());
  xs.resize(n, 0.0);
  ys.resize(n, 0.0);
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx > sy + tol) return false;
  }
  return true;
}

bool nielsen_convertible(const PureState& src, const PureState& dst, double tol) {
  return majorizes(schmidt(src).probabilities(), schmidt(dst).probabilities(), tol);
}

PptVerdict ppt_check(const ComplexMatrix& rho, const DimPair& dims, double tol) {
  const double min_eig = hermitian_eigenvalues(partial_transpose(rho, dims)).minCoeff();
  return {min_eig, min_eig >= -tol};
}

PptVerdict ppt_check(const DensityState& rho, double tol) { return ppt_check(rho.matrix(), rho.dims(), tol); }

ComplexMatrix complement_projector(const std::vector<Ket>& kets, int dim) {
  ComplexMatrix p = ComplexMatrix::Identity(dim, dim);
  for (const auto& k : kets) p -= projector(k);
  return p;
}

SeesawResult upb_unextendibility(const std::vector<Ket>& upb, const DimPair& dims, int restarts,
                                 std::uint64_t seed, const SeesawOptions& options) {
  if (restarts < 1) throw ValidationError("upb_unextendibility: restarts must be >= 1");
  validate_product_basis(upb, dims);
  const ComplexMatrix p = complement_projector(upb, dims.total());

  SeesawResult result;
  result.restarts = restarts;
  result.margin = options.unextendible_margin;
  result.best_overlap = -1.0;
  for (int r = 0; r < restarts; ++r) {
    auto rng = detail::restart_rng(seed, r);
    Ket a = detail::random_unit_ket(dims.dim_a, rng);
    Ket b = detail::random_unit_ket(dims.dim_b, rng);
    double overlap = std::real(tensor_product(a, b).dot(p * tensor_product(a, b)));
    std::vector<double> trace{overlap};
    int it = 0;
    while (it < options.max_iterations) {
      ++it;
      a = hermitian_eig(contract_b(p, b, dims)).eigenvectors.col(0);
      const auto spec_b = hermitian_eig(contract_a(p, a, dims));
      b = spec_b.eigenvectors.col(0);
      const double next = spec_b.eigenvalues(0);
      const double gain = next - overlap;
      overlap = next;
      trace.push_back(overlap);
      if (gain < options.gain_tol) break;
    }
    result.iterations_per_restart.push_back(it);
    result.final_overlap_per_restart.push_back(overlap);
    if (options.keep_traces) result.traces.push_back(std::move(trace));
    // Strict comparison: ties keep the lowest restart index.
    if (overlap > result.best_overlap) {
      result.best_overlap = overlap;
      result.best_product_ket = {a, b};
      result.best_restart = r;
    }
  }
  result.best_overlap = std::clamp(result.best_overlap, 0.0, 1.0);
  return result;
}

}  // namespace entorder
