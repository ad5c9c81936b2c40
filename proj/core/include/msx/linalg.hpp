// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra sized for the 3x3 / 9x9 problems of the
// two-qutrit simplex: products, Kronecker products, partial transpose and a
// cyclic-Jacobi Hermitian eigensolver. Deliberately not a general-purpose
// library; nothing here targets matrices beyond 81x81.

#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace msx {

using cplx = std::complex<double>;

// An iterative kernel failed to converge (distinct from precondition errors,
// which throw std::invalid_argument).
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical contract constants. Double-precision roundoff on 9x9 problems is
// below 1e-13, so these leave an order of magnitude of headroom.
inline constexpr double kStateHermitianTol = 1e-12;  // density-matrix Hermiticity
inline constexpr double kStateTraceTol = 1e-12;      // |tr(rho) - 1|
inline constexpr double kPsdSlack = -1e-10;          // smallest admissible eigenvalue
inline constexpr double kEigHermitianGate = 1e-10;   // eigensolver input gate
inline constexpr double kJacobiRelTol = 1e-13;       // off-diagonal / Frobenius norm
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kEigZeroFloor = 1e-12;  // |eigenvalue| below this is zero

// Dense complex matrix in row-major order. Values are immutable in practice:
// every operation below returns a fresh matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;

  // Largest entrywise |a_ij - b_ij|; infinity if shapes differ.
  double max_abs_diff(const ComplexMatrix& b) const;
  // Equality always against an explicit absolute tolerance.
  bool approx_equal(const ComplexMatrix& b, double tol) const {
    return max_abs_diff(b) <= tol;
  }
  bool is_hermitian(double tol) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& v);

// 9x9 Hermitian, unit-trace, positive-semidefinite (up to kPsdSlack) state.
// Construction validates all three invariants and throws std::invalid_argument
// on violation.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);
  const ComplexMatrix& mat() const { return mat_; }

 private:
  ComplexMatrix mat_;
};

// Kronecker product: block (i,j) of the result is a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Transpose of the second tensor factor of a 9x9 matrix: with row index
// 3i+j and column index 3k+l, out[(i,l),(k,j)] = in[(i,j),(k,l)].
// Involutive; preserves trace and Hermiticity. Rejects non-9x9 input.
ComplexMatrix partial_transpose(const ComplexMatrix& m);
ComplexMatrix partial_transpose(const DensityMatrix& rho);

// All eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi
// rotations run until max |off-diagonal| <= kJacobiRelTol * ||h||_F.
// Throws std::invalid_argument for non-Hermitian input (gate kEigHermitianGate)
// and numerical_error if kJacobiMaxSweeps sweeps do not converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

// Trace norm ||h||_1 of a Hermitian matrix: sum of |eigenvalue|.
double trace_norm_hermitian(const ComplexMatrix& h);

}  // namespace msx
