#include "gsalign/linalg.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gsalign {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  // splitmix64
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                               std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("sample_complex_gaussian: dimensions must be >= 1");
  }
  std::mt19937_64 rng(seed);
  // Each of re/im gets variance 1/2 so |entry|^2 has unit expectation.
  std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      double re = gauss(rng);
      double im = gauss(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

namespace {
Eigen::Index rank_from_svd(const Eigen::JacobiSVD<Matrix>& svd,
                           const TolerancePolicy& tol) {
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double thresh = tol.rank_tol * sv(0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > thresh) ++r;
  return r;
}
}  // namespace

Eigen::Index numerical_rank(const Matrix& a, const TolerancePolicy& tol) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument("numerical_rank: empty matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(a);
  return rank_from_svd(svd, tol);
}

Matrix null_space_basis(const Matrix& a, const TolerancePolicy& tol) {
  if (a.rows() == 0 || a.cols() == 0) {
    throw std::invalid_argument("null_space_basis: empty matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Eigen::Index r = rank_from_svd(svd, tol);
  return svd.matrixV().rightCols(a.cols() - r);
}

Matrix left_null_space_basis(const Matrix& a, const TolerancePolicy& tol) {
  return null_space_basis(a.transpose().eval(), tol);
}

double spectral_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack: no blocks");
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].rows() != rows) {
      throw std::invalid_argument("hstack: block " + std::to_string(i) + " has " +
                                  std::to_string(blocks[i].rows()) +
                                  " rows, expected " + std::to_string(rows));
    }
    cols += blocks[i].cols();
  }
  Matrix out(rows, cols);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    out.middleCols(off, b.cols()) = b;
    off += b.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack: no blocks");
  const Eigen::Index cols = blocks.front().cols();
  Eigen::Index rows = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].cols() != cols) {
      throw std::invalid_argument("vstack: block " + std::to_string(i) + " has " +
                                  std::to_string(blocks[i].cols()) +
                                  " cols, expected " + std::to_string(cols));
    }
    rows += blocks[i].rows();
  }
  Matrix out(rows, cols);
  Eigen::Index off = 0;
  for (const auto& b : blocks) {
    out.middleRows(off, b.rows()) = b;
    off += b.rows();
  }
  return out;
}

}  // namespace gsalign
