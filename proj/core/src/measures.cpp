// SPDX-License-Identifier: Apache-2.0

#include "msx/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msx {

namespace detail {

double negativity_unchecked(const ComplexMatrix& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(partial_transpose(rho));
  double neg_sum = 0.0;
  for (double x : ev) {
    if (x < 0.0 && std::abs(x) > kEigZeroFloor) neg_sum += x;
  }
  double n = -neg_sum;
  if (n < kNegativityClamp) n = 0.0;
  return n;
}

double purity_unchecked(const ComplexMatrix& rho) {
  // tr rho^2 = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = 0; j < rho.cols(); ++j) s += std::norm(rho(i, j));
  return s;
}

double linear_entropy_unchecked(const ComplexMatrix& rho) {
  const double s = (9.0 / 8.0) * (1.0 - purity_unchecked(rho));
  return std::clamp(s, 0.0, 1.0);
}

}  // namespace detail

double negativity(const DensityMatrix& rho) {
  return detail::negativity_unchecked(rho.mat());
}

double linear_entropy(const DensityMatrix& rho) {
  return detail::linear_entropy_unchecked(rho.mat());
}

double purity(const DensityMatrix& rho) { return detail::purity_unchecked(rho.mat()); }

double negativity_pair_formula(double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::domain_error("negativity_pair_formula: p outside [0,1]");
  }
  return std::sqrt(1.0 - 3.0 * p * (1.0 - p));
}

double negativity_line_formula(const std::array<double, 3>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) throw std::domain_error("negativity_line_formula: negative probability");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::domain_error("negativity_line_formula: probabilities do not sum to 1");
  }
  double q = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int k = i + 1; k < 3; ++k) q += (p[i] - p[k]) * (p[i] - p[k]);
  return std::sqrt(0.5 * q);
}

DensityMatrix werner_state(double p, ModIndex alpha) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("werner_state: p outside [0,1]");
  // (1-p)/9 I + p P_alpha built directly from the Bell vector.
  const BellVector v = bell_vector(alpha);
  ComplexMatrix rho(9, 9);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      rho(i, j) = p * v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
    }
    rho(i, i) += (1.0 - p) / 9.0;
  }
  return DensityMatrix(rho);
}

double werner_negativity(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("werner_negativity: p outside [0,1]");
  return std::max(0.0, (4.0 * p - 1.0) / 3.0);
}

double curve_lines(double s) {
  if (s < 0.0 || s > 0.75) throw std::domain_error("curve_lines: s outside [0, 3/4]");
  return std::sqrt(std::max(0.0, 1.0 - 4.0 * s / 3.0));
}

double curve_werner(double s) {
  if (s < 0.0 || s > 0.9375) {
    throw std::domain_error("curve_werner: s outside [0, 15/16]");
  }
  return (4.0 * std::sqrt(1.0 - s) - 1.0) / 3.0;
}

double werner_ceiling(double s) {
  if (s < 0.0 || s > 1.0) throw std::domain_error("werner_ceiling: s outside [0, 1]");
  return s <= 0.9375 ? curve_werner(s) : 0.0;
}

bool ppt_by_purity(const DensityMatrix& rho) { return purity(rho) <= 0.125; }

}  // namespace msx
