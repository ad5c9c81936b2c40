// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, deliberately independent of the library's eigensolver
// path: eigenvalues through the characteristic polynomial (Leverrier-Faddeev
// coefficients, Durand-Kerner roots) and partial traces expanded by hand.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "msx/linalg.hpp"

namespace oracle {

using msx::ComplexMatrix;
using msx::cplx;

// Coefficients c of det(lambda I - A) = lambda^n + c[0] lambda^{n-1} + ... + c[n-1],
// by the Leverrier-Faddeev recursion.
inline std::vector<cplx> charpoly_coefficients(const ComplexMatrix& a) {
  const int n = a.rows();
  std::vector<cplx> c(static_cast<size_t>(n));
  ComplexMatrix m = a;
  for (int k = 1; k <= n; ++k) {
    c[static_cast<size_t>(k - 1)] = -m.trace() / static_cast<double>(k);
    if (k == n) break;
    for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<size_t>(k - 1)];
    m = a * m;
  }
  return c;
}

// All roots of the monic polynomial with the given trailing coefficients, by
// Durand-Kerner iteration with a short Newton polish.
inline std::vector<cplx> polynomial_roots(const std::vector<cplx>& c) {
  const int n = static_cast<int>(c.size());
  auto eval = [&](cplx z) {
    cplx v{1.0, 0.0};
    for (const cplx& ck : c) v = v * z + ck;
    return v;
  };
  auto deriv = [&](cplx z) {
    cplx v{static_cast<double>(n), 0.0};
    for (int k = 0; k < n - 1; ++k) {
      v = v * z + static_cast<double>(n - 1 - k) * c[static_cast<size_t>(k)];
    }
    return v;
  };

  double bound = 0.0;
  for (const cplx& ck : c) bound = std::max(bound, std::abs(ck));
  bound += 1.0;

  std::vector<cplx> z(static_cast<size_t>(n));
  const cplx seed = cplx{0.4, 0.9};  // conventional non-real starting ray
  cplx w{1.0, 0.0};
  for (int i = 0; i < n; ++i) {
    w *= seed;
    z[static_cast<size_t>(i)] = bound * w;
  }

  for (int it = 0; it < 500; ++it) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx denom{1.0, 0.0};
      for (int k = 0; k < n; ++k) {
        if (k != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(k)];
      }
      const cplx delta = eval(z[static_cast<size_t>(i)]) / denom;
      z[static_cast<size_t>(i)] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-13 * bound) break;
  }
  for (cplx& zi : z) {
    for (int it = 0; it < 6; ++it) {
      const cplx d = deriv(zi);
      if (std::abs(d) < 1e-300) break;
      zi -= eval(zi) / d;
    }
  }
  return z;
}

// Ascending eigenvalues of a Hermitian matrix via its characteristic
// polynomial. Accuracy is limited by root conditioning; adequate at 1e-8 for
// the 9x9 norms used in tests.
inline std::vector<double> charpoly_eigenvalues(const ComplexMatrix& h) {
  const std::vector<cplx> roots = polynomial_roots(charpoly_coefficients(h));
  std::vector<double> ev;
  ev.reserve(roots.size());
  for (const cplx& r : roots) ev.push_back(r.real());
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Partial traces of a 9x9 two-qutrit matrix, index (i,j) = 3i + j.
inline ComplexMatrix trace_out_first(const ComplexMatrix& rho) {
  ComplexMatrix out(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i) out(j, l) += rho(3 * i + j, 3 * i + l);
  return out;
}

inline ComplexMatrix trace_out_second(const ComplexMatrix& rho) {
  ComplexMatrix out(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) out(i, k) += rho(3 * i + j, 3 * k + j);
  return out;
}

}  // namespace oracle
