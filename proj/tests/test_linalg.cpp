// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "msx/frontier.hpp"
#include "msx/linalg.hpp"
#include "msx/weyl.hpp"
#include "oracle.hpp"

using namespace msx;

namespace {

ComplexMatrix random_hermitian(Rng& rng, int n, double scale = 1.0) {
  ComplexMatrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = scale * rng.complex_normal();
      h(j, i) = std::conj(h(i, j));
    }
    h(i, i) = scale * rng.normal();
  }
  return h;
}

DensityMatrix random_state(Rng& rng, int rank = 9) { return sample_general_state(rng, rank); }

}  // namespace

TEST_CASE("kron: identity and diagonal cases") {
  const ComplexMatrix i3 = ComplexMatrix::identity(3);
  CHECK(kron(i3, i3).approx_equal(ComplexMatrix::identity(9), 0.0));

  ComplexMatrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  const ComplexMatrix k = kron(d, i3);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const cplx want = (i == j) ? cplx{1.0 + i / 3, 0.0} : cplx{0.0, 0.0};
      CHECK(std::abs(k(i, j) - want) == 0.0);
    }
}

TEST_CASE("kron: unit matrix block placement") {
  // E01 x E12 has its single 1 at row 0*3+1 = 1, col 1*3+2 = 5.
  ComplexMatrix e01(3, 3), e12(3, 3);
  e01(0, 1) = 1.0;
  e12(1, 2) = 1.0;
  const ComplexMatrix k = kron(e01, e12);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const cplx want = (i == 1 && j == 5) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      CHECK(k(i, j) == want);
    }
}

TEST_CASE("kron: trace is multiplicative") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_hermitian(rng, 3);
    const ComplexMatrix b = random_hermitian(rng, 3);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
  }
}

TEST_CASE("partial_transpose: maximally mixed state is invariant") {
  const ComplexMatrix rho_inf = (1.0 / 9.0) * ComplexMatrix::identity(9);
  CHECK(partial_transpose(rho_inf).max_abs_diff(rho_inf) == 0.0);
}

TEST_CASE("partial_transpose of the reference Bell projector") {
  // One third of the swap operator: eigenvalues -1/3 (x3) and +1/3 (x6).
  const ComplexMatrix pt = partial_transpose(bell_projector(ModIndex(0, 0)));
  const std::vector<double> ev = hermitian_eigenvalues(pt);
  for (int i = 0; i < 3; ++i) CHECK(ev[i] == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  for (int i = 3; i < 9; ++i) CHECK(ev[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partial_transpose: involution, trace and Hermiticity are exact") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_state(rng);
    const ComplexMatrix pt = partial_transpose(rho);
    CHECK(partial_transpose(pt).max_abs_diff(rho.mat()) == 0.0);
    CHECK(pt.trace() == rho.mat().trace());
    CHECK(pt.is_hermitian(0.0));
  }
}

TEST_CASE("partial_transpose: rejects non-9x9 input") {
  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("hermitian_eigenvalues: fixed spectra") {
  const std::vector<double> ones = hermitian_eigenvalues(ComplexMatrix::identity(9));
  for (double ev : ones) CHECK(ev == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix d(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  const std::vector<double> ev = hermitian_eigenvalues(d);
  CHECK(ev[0] == -1.0);
  CHECK(ev[1] == 2.0);
  CHECK(ev[2] == 3.0);
}

TEST_CASE("hermitian_eigenvalues: agrees with the characteristic-polynomial oracle") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(rng, 9);
    const std::vector<double> jac = hermitian_eigenvalues(h);
    const std::vector<double> ref = oracle::charpoly_eigenvalues(h);
    REQUIRE(jac.size() == ref.size());
    for (size_t k = 0; k < jac.size(); ++k) CHECK(std::abs(jac[k] - ref[k]) <= 1e-8);
  }
}

TEST_CASE("hermitian_eigenvalues: eigenvalue sum equals trace") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(rng, 9);
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(h)) sum += ev;
    CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigenvalues: invariant under Weyl-built unitary conjugation") {
  Rng rng(31);
  const ComplexMatrix u = kron(weyl_operator(ModIndex(1, 2)), weyl_operator(ModIndex(2, 1)));
  for (int t = 0; t < 10; ++t) {
    const ComplexMatrix h = random_hermitian(rng, 9);
    const std::vector<double> a = hermitian_eigenvalues(h);
    const std::vector<double> b = hermitian_eigenvalues(u * h * u.adjoint());
    for (size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-9);
  }
}

TEST_CASE("hermitian_eigenvalues: rejects non-Hermitian and non-square input") {
  ComplexMatrix bad = ComplexMatrix::identity(3);
  bad(0, 1) = cplx{0.0, 1.0};  // not mirrored
  CHECK_THROWS_AS(hermitian_eigenvalues(bad), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("trace_norm_hermitian: fixed values") {
  CHECK(trace_norm_hermitian((1.0 / 9.0) * ComplexMatrix::identity(9)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(trace_norm_hermitian(partial_transpose(bell_projector(ModIndex(0, 0)))) ==
        doctest::Approx(3.0).epsilon(1e-12));
  ComplexMatrix d(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(trace_norm_hermitian(d) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace_norm_hermitian: equals 1 on density matrices") {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = random_state(rng, 1 + t % 9);
    CHECK(trace_norm_hermitian(rho.mat()) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("DensityMatrix: construction validates the invariants") {
  SUBCASE("not Hermitian") {
    ComplexMatrix m = (1.0 / 9.0) * ComplexMatrix::identity(9);
    m(0, 1) = cplx{1e-6, 0.0};
    CHECK_THROWS_AS((DensityMatrix{m}), std::invalid_argument);
  }
  SUBCASE("wrong trace") {
    CHECK_THROWS_AS(DensityMatrix((1.0 / 8.0) * ComplexMatrix::identity(9)),
                    std::invalid_argument);
  }
  SUBCASE("negative eigenvalue") {
    // diag(-0.1, 1.1/8, ..., 1.1/8): Hermitian, trace 1, not PSD.
    ComplexMatrix m(9, 9);
    m(0, 0) = -0.1;
    for (int i = 1; i < 9; ++i) m(i, i) = 1.1 / 8.0;
    CHECK_THROWS_AS((DensityMatrix{m}), std::invalid_argument);
  }
  SUBCASE("wrong shape") {
    CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(3)), std::invalid_argument);
  }
}
