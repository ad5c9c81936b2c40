// SPDX-License-Identifier: Apache-2.0

#include "msx/weyl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace msx {

namespace {

constexpr double kProbSumTol = 1e-12;

const std::array<ModIndex, 2> kPairSupport = {ModIndex(0, 0), ModIndex(0, 1)};
const std::array<ModIndex, 3> kLineSupport = {ModIndex(0, 0), ModIndex(0, 1),
                                              ModIndex(0, 2)};
const std::array<ModIndex, 3> kTriangleSupport = {ModIndex(0, 0), ModIndex(0, 1),
                                                  ModIndex(1, 0)};
// The rectangle and line-plus-point supports used throughout: probabilities
// attach to these points in the order written.
const std::array<ModIndex, 4> kRectangleSupport = {ModIndex(0, 0), ModIndex(1, 0),
                                                   ModIndex(1, 1), ModIndex(0, 1)};
const std::array<ModIndex, 4> kGammaSupport = {ModIndex(0, 0), ModIndex(1, 0),
                                               ModIndex(2, 0), ModIndex(2, 1)};

SubsetClass required_class(StateFamily kind) {
  switch (kind) {
    case StateFamily::pair: return SubsetClass::pair;
    case StateFamily::line: return SubsetClass::line;
    case StateFamily::triangle: return SubsetClass::triangle;
    case StateFamily::rectangle: return SubsetClass::cap;
    case StateFamily::gamma: return SubsetClass::line_plus_point;
  }
  throw std::invalid_argument("named_family: unknown family");
}

}  // namespace

ProbabilityVector9::ProbabilityVector9(const std::array<double, 9>& p) : p_(p) {
  double sum = 0.0;
  for (double x : p_) {
    if (x < 0.0) throw std::invalid_argument("ProbabilityVector9: negative entry");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument("ProbabilityVector9: entries do not sum to 1");
  }
}

cplx omega_pow(int k) {
  static const std::array<cplx, 3> table = {
      cplx{1.0, 0.0},
      std::polar(1.0, 2.0 * std::numbers::pi / 3.0),
      std::polar(1.0, 4.0 * std::numbers::pi / 3.0),
  };
  return table[static_cast<size_t>(((k % 3) + 3) % 3)];
}

ComplexMatrix weyl_operator(ModIndex alpha) {
  ComplexMatrix w(3, 3);
  for (int k = 0; k < 3; ++k) w(k, (k + alpha.m) % 3) = omega_pow(k * alpha.n);
  return w;
}

BellVector bell_vector(ModIndex alpha) {
  std::vector<cplx> psi00(9, cplx{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k) psi00[static_cast<size_t>(3 * k + k)] = amp;

  const std::vector<cplx> v =
      kron(weyl_operator(alpha), ComplexMatrix::identity(3)) * psi00;
  BellVector out;
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

DensityMatrix bell_projector(ModIndex alpha) {
  const BellVector v = bell_vector(alpha);
  ComplexMatrix p(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      p(i, j) = v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
  return DensityMatrix(p);
}

namespace detail {

ComplexMatrix simplex_matrix(const std::array<double, 9>& p) {
  ComplexMatrix rho(9, 9);
  for (int a = 0; a < 9; ++a) {
    const double pa = p[static_cast<size_t>(a)];
    if (pa == 0.0) continue;
    const BellVector v = bell_vector(ModIndex::from_flat(a));
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        rho(i, j) += pa * v[static_cast<size_t>(i)] * std::conj(v[static_cast<size_t>(j)]);
  }
  return rho;
}

std::array<double, 9> bell_coefficients_unchecked(const ComplexMatrix& rho) {
  std::array<double, 9> q{};
  for (int a = 0; a < 9; ++a) {
    const BellVector v = bell_vector(ModIndex::from_flat(a));
    cplx acc{0.0, 0.0};
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j)
        acc += std::conj(v[static_cast<size_t>(i)]) * rho(i, j) * v[static_cast<size_t>(j)];
    q[static_cast<size_t>(a)] = acc.real();
  }
  return q;
}

}  // namespace detail

DensityMatrix simplex_state(const ProbabilityVector9& p) {
  return DensityMatrix(detail::simplex_matrix(p.values()));
}

ProbabilityVector9 bell_coefficients(const DensityMatrix& rho) {
  std::array<double, 9> q = detail::bell_coefficients_unchecked(rho.mat());
  // The diagonal of a state in an orthonormal basis is nonnegative and sums
  // to the trace; strip roundoff so the result is a valid probability vector.
  double sum = 0.0;
  for (double& x : q) {
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  for (double& x : q) x /= sum;
  return ProbabilityVector9(q);
}

std::span<const ModIndex> default_family_support(StateFamily kind) {
  switch (kind) {
    case StateFamily::pair: return kPairSupport;
    case StateFamily::line: return kLineSupport;
    case StateFamily::triangle: return kTriangleSupport;
    case StateFamily::rectangle: return kRectangleSupport;
    case StateFamily::gamma: return kGammaSupport;
  }
  throw std::invalid_argument("named_family: unknown family");
}

DensityMatrix named_family(StateFamily kind, std::span<const double> probs) {
  return named_family(kind, probs, default_family_support(kind));
}

DensityMatrix named_family(StateFamily kind, std::span<const double> probs,
                           std::span<const ModIndex> points) {
  if (probs.size() != points.size()) {
    throw std::invalid_argument("named_family: probability count does not match support size");
  }
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("named_family: negative probability");
  }
  if (classify_subset(points) != required_class(kind)) {
    throw std::invalid_argument("named_family: support is not a " +
                                to_string(required_class(kind)) + " subset");
  }
  std::array<double, 9> p9{};
  for (size_t i = 0; i < points.size(); ++i) p9[static_cast<size_t>(points[i].flat())] = probs[i];
  return simplex_state(ProbabilityVector9(p9));
}

}  // namespace msx
