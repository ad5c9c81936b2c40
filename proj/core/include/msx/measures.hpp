// SPDX-License-Identifier: Apache-2.0
//
// Entanglement and mixedness functionals: negativity via the partial
// transpose, normalized linear entropy, the closed forms for the pair / line
// / Werner families, the two boundary curves of the entropy-negativity
// plane, and the purity-based PPT sufficient condition.

#pragma once

#include <array>

#include "msx/weyl.hpp"

namespace msx {

// A point of the mixedness-entanglement plane: s is linear entropy, n is
// negativity, both in [0,1].
struct EntropyNegativityPoint {
  double s = 0.0;
  double n = 0.0;
};

// Values below this are clamped to zero: PT eigenvalue roundoff on 9x9
// problems is orders of magnitude smaller.
inline constexpr double kNegativityClamp = 1e-9;

// (||rho^PT||_1 - 1) / 2 = |sum of negative PT eigenvalues|. In [0,1];
// 1 exactly for the maximally entangled Bell projectors.
double negativity(const DensityMatrix& rho);

// (9/8) tr(rho - rho^2): 0 for pure states, 1 for the maximally mixed state.
double linear_entropy(const DensityMatrix& rho);

// tr rho^2.
double purity(const DensityMatrix& rho);

// Negativity of a two-projector mixture p P_a + (1-p) P_b:
// sqrt(1 - 3 p (1-p)). Minimum 1/2 at p = 1/2; never zero.
double negativity_pair_formula(double p);

// Negativity of a line-supported state: sqrt( (1/2) sum over the three
// unordered pairs of (p_a - p_b)^2 ). Zero exactly at the uniform triple;
// reduces to the pair formula when one entry vanishes.
double negativity_line_formula(const std::array<double, 3>& p);

// (1-p) * I/9 + p * P_alpha for p in [0,1].
DensityMatrix werner_state(double p, ModIndex alpha = ModIndex(0, 0));

// max(0, (4p - 1)/3): vanishes at and below the p = 1/4 threshold.
double werner_negativity(double p);

// Lower boundary of the simplex region: n = sqrt(1 - 4s/3), s in [0, 3/4].
double curve_lines(double s);

// Upper boundary of the simplex region: n = (4 sqrt(1-s) - 1)/3,
// s in [0, 15/16].
double curve_werner(double s);

// Maximal negativity the simplex admits at entropy s: curve_werner on its
// domain and 0 beyond it (no simplex state with s > 15/16 is NPPT).
double werner_ceiling(double s);

// Sufficient PPT test: tr rho^2 <= 1/8 (equivalently linear entropy
// >= 63/64) forces a positive partial transpose. False proves nothing.
bool ppt_by_purity(const DensityMatrix& rho);

namespace detail {
// Hot-loop variants on raw matrices (no DensityMatrix validation).
double negativity_unchecked(const ComplexMatrix& rho);
double purity_unchecked(const ComplexMatrix& rho);
double linear_entropy_unchecked(const ComplexMatrix& rho);
}  // namespace detail

}  // namespace msx
