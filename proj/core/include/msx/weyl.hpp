// SPDX-License-Identifier: Apache-2.0
//
// The Weyl shift-and-phase unitaries on one qutrit, the nine maximally
// entangled Bell-like vectors they generate from (|00> + |11> + |22>)/sqrt(3),
// and the simplex of states that are diagonal in that basis, together with
// the named mixture families supported on 2..4 grid points.

#pragma once

#include <array>
#include <span>

#include "msx/linalg.hpp"
#include "msx/modindex.hpp"
#include "msx/symmetry.hpp"

namespace msx {

// Nine nonnegative weights summing to one (within 1e-12), indexed by ModIndex
// in lexicographic order (0,0),(0,1),...,(2,2). A point of the simplex.
class ProbabilityVector9 {
 public:
  explicit ProbabilityVector9(const std::array<double, 9>& p);

  double at(ModIndex a) const { return p_[a.flat()]; }
  double operator[](int i) const { return p_[static_cast<size_t>(i)]; }
  const std::array<double, 9>& values() const { return p_; }

 private:
  std::array<double, 9> p_;
};

using BellVector = std::array<cplx, 9>;

// Primitive cube root of unity exp(2*pi*i/3) raised to (k mod 3).
cplx omega_pow(int k);

// W(m,n) = sum_k omega^{kn} |k><k+m|, indices mod 3. Unitary; W(0,0) = I.
// Products compose as W(m,n) W(k,l) = omega^{ml} W(m+k, n+l) and adjoints as
// W(m,n)^dag = omega^{nm} W(-m,-n).
ComplexMatrix weyl_operator(ModIndex alpha);

// (W_alpha ⊗ I) applied to the maximally entangled reference vector.
// The nine results are orthonormal and each has maximally mixed marginals.
BellVector bell_vector(ModIndex alpha);

// Rank-1 projector |psi_alpha><psi_alpha|.
DensityMatrix bell_projector(ModIndex alpha);

// sum_alpha p_alpha P_alpha. Its eigenvalues are exactly the p_alpha.
DensityMatrix simplex_state(const ProbabilityVector9& p);

// q_alpha = <psi_alpha| rho |psi_alpha>: the diagonal of rho in the Bell
// basis. Inverse of simplex_state on the simplex; a projection onto it
// otherwise. Always a valid probability vector.
ProbabilityVector9 bell_coefficients(const DensityMatrix& rho);

// Mixture families supported on the named subset classes.
enum class StateFamily { pair, line, triangle, rectangle, gamma };

// Probabilities are assigned to support points by position. Default supports:
//   pair      {(0,0),(0,1)}
//   line      {(0,0),(0,1),(0,2)}
//   triangle  {(0,0),(0,1),(1,0)}
//   rectangle {(0,0),(1,0),(1,1),(0,1)}
//   gamma     {(0,0),(1,0),(2,0),(2,1)}   (a line plus one point off it)
// Custom supports are validated against the family's subset class.
// Rejects probability-count mismatches and negative entries.
DensityMatrix named_family(StateFamily kind, std::span<const double> probs);
DensityMatrix named_family(StateFamily kind, std::span<const double> probs,
                           std::span<const ModIndex> points);

std::span<const ModIndex> default_family_support(StateFamily kind);

namespace detail {
// Bell-basis diagonal of an arbitrary 9x9 matrix, without DensityMatrix
// validation. Used by hot loops that construct states by explicit formulas.
std::array<double, 9> bell_coefficients_unchecked(const ComplexMatrix& rho);
ComplexMatrix simplex_matrix(const std::array<double, 9>& p);
}  // namespace detail

}  // namespace msx
