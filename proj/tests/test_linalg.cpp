#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsalign/linalg.hpp"

using namespace gsalign;

TEST_CASE("mix_seed is deterministic and tag-sensitive") {
  CHECK(mix_seed(42, 1) == mix_seed(42, 1));
  CHECK(mix_seed(42, 1) != mix_seed(42, 2));
  CHECK(mix_seed(42, 1) != mix_seed(43, 1));
}

TEST_CASE("gaussian sampling is reproducible and roughly unit variance") {
  const Matrix a = sample_complex_gaussian(40, 50, 7);
  const Matrix b = sample_complex_gaussian(40, 50, 7);
  CHECK(a == b);
  CHECK(sample_complex_gaussian(40, 50, 8) != a);

  double mean_abs2 = a.squaredNorm() / (40.0 * 50.0);
  CHECK(mean_abs2 == doctest::Approx(1.0).epsilon(0.1));
  Complex mean = a.sum() / Complex(40.0 * 50.0, 0);
  CHECK(std::abs(mean) < 0.1);
}

TEST_CASE("numerical_rank counts singular values above the relative threshold") {
  Matrix a = Matrix::Zero(5, 4);
  CHECK(numerical_rank(a) == 0);

  const Matrix u = sample_complex_gaussian(5, 2, 1);
  const Matrix v = sample_complex_gaussian(2, 4, 2);
  CHECK(numerical_rank(u * v) == 2);
  CHECK(numerical_rank(sample_complex_gaussian(5, 4, 3)) == 4);
}

TEST_CASE("null_space_basis is orthonormal and annihilated by the matrix") {
  const Matrix u = sample_complex_gaussian(6, 3, 11);
  const Matrix v = sample_complex_gaussian(3, 5, 12);
  const Matrix a = u * v;  // rank 3, 5 columns -> null dim 2
  const Matrix ns = null_space_basis(a);
  REQUIRE(ns.cols() == 2);
  CHECK(spectral_norm(a * ns) < 1e-10 * spectral_norm(a));
  CHECK(spectral_norm(ns.adjoint() * ns - Matrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("left null space uses the plain transpose, not the adjoint") {
  const Matrix a = sample_complex_gaussian(5, 3, 21);
  const Matrix ln = left_null_space_basis(a);
  REQUIRE(ln.cols() == 2);
  // x^T a = 0 must hold; x^H a = 0 must not (complex entries).
  CHECK(spectral_norm(ln.transpose() * a) < 1e-10 * spectral_norm(a));
  CHECK(spectral_norm(ln.adjoint() * a) > 1e-3);
}

TEST_CASE("spectral_norm matches a known diagonal case") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = Complex(3, 0);
  a(1, 1) = Complex(0, -4);
  CHECK(spectral_norm(a) == doctest::Approx(4.0));
}

TEST_CASE("stacking validates block shapes") {
  const Matrix a = sample_complex_gaussian(2, 3, 1);
  const Matrix b = sample_complex_gaussian(2, 4, 2);
  const Matrix h = hstack({a, b});
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 7);
  CHECK(h.leftCols(3) == a);
  CHECK(h.rightCols(4) == b);

  const Matrix v = vstack({a.transpose(), b.transpose()});
  CHECK(v.rows() == 7);
  CHECK(v.cols() == 2);

  CHECK_THROWS_AS(hstack({a, b.transpose()}), std::invalid_argument);
  CHECK_THROWS_AS(vstack({a, b}), std::invalid_argument);
  CHECK_THROWS_AS(hstack({}), std::invalid_argument);
}
