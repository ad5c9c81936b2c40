// SPDX-License-Identifier: Apache-2.0

#include "msx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace msx {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  a_.assign(static_cast<size_t>(rows) * cols, cplx{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t{0.0, 0.0};
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) {
    return std::numeric_limits<double>::infinity();
  }
  double m = 0.0;
  for (size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - b.a_[k]));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  ComplexMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  }
  ComplexMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  return cplx{s, 0.0} * a;
}

std::vector<cplx> operator*(const ComplexMatrix& a, const std::vector<cplx>& v) {
  if (static_cast<size_t>(a.cols()) != v.size()) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  std::vector<cplx> w(a.rows(), cplx{0.0, 0.0});
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) w[i] += a(i, j) * v[j];
  return w;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != 9 || mat_.cols() != 9) {
    throw std::invalid_argument("DensityMatrix: must be 9x9");
  }
  if (!mat_.is_hermitian(kStateHermitianTol)) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  }
  if (std::abs(mat_.trace() - cplx{1.0, 0.0}) > kStateTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-12");
  }
  const std::vector<double> ev = hermitian_eigenvalues(mat_);
  if (ev.front() < kPsdSlack) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond PSD slack");
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m) {
  if (m.rows() != 9 || m.cols() != 9) {
    throw std::invalid_argument("partial_transpose: input must be 9x9");
  }
  ComplexMatrix out(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) out(3 * i + l, 3 * k + j) = m(3 * i + j, 3 * k + l);
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.mat());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  if (!h.is_hermitian(kEigHermitianGate)) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not Hermitian within 1e-10");
  }
  const int n = h.rows();
  ComplexMatrix a = h;

  const double norm = a.frobenius_norm();
  std::vector<double> ev(n);
  if (norm == 0.0) return ev;
  const double thresh = kJacobiRelTol * norm;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= thresh) {
      for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
      std::sort(ev.begin(), ev.end());
      return ev;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= thresh) continue;

        // Unitary plane rotation G with G(p,p)=G(q,q)=c, G(p,q)=s*phase,
        // G(q,p)=-s*conj(phase); chosen so (G^dag A G)(p,q) = 0.
        const cplx phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Column update T = A·G ...
        for (int i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        // ... then row update A' = G^dag·T.
        for (int j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = cplx{0.0, 0.0};
        a(q, p) = cplx{0.0, 0.0};
        a(p, p) = cplx{a(p, p).real(), 0.0};
        a(q, q) = cplx{a(q, q).real(), 0.0};
      }
    }
  }
  throw numerical_error("hermitian_eigenvalues: Jacobi failed to converge in 100 sweeps");
}

double trace_norm_hermitian(const ComplexMatrix& h) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(h)) s += std::abs(ev);
  return s;
}

}  // namespace msx
