/**
 * @file linalg.hpp
 * @brief Complex dense linear algebra substrate: seeded sampling, numerical
 *        rank, null spaces and block stacking.
 */
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

namespace gsalign {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Relative thresholds used by all rank / residual decisions.
struct TolerancePolicy {
  double rank_tol = 1e-8;      // singular values > rank_tol * sigma_max count
  double residual_tol = 1e-8;  // residual norms compared against this * scale
};

/// Deterministic seed derivation (splitmix64 of seed + tag).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

/// rows x cols matrix of i.i.d. circularly-symmetric complex Gaussian entries,
/// zero mean and unit variance. Pure function of (rows, cols, seed).
Matrix sample_complex_gaussian(Eigen::Index rows, Eigen::Index cols,
                               std::uint64_t seed);

/// Number of singular values above rank_tol * sigma_max. Zero matrix -> 0.
Eigen::Index numerical_rank(const Matrix& a, const TolerancePolicy& tol = {});

/// Orthonormal basis of the right null space, as columns. May have 0 columns.
/// Column order is the (deterministic) singular-vector order of the SVD.
Matrix null_space_basis(const Matrix& a, const TolerancePolicy& tol = {});

/// Basis of the left null space: columns v with v^T * a = 0.
/// Plain transpose (not conjugate) — all alignment conditions in this library
/// are stated with [.]^T and must use this convention uniformly.
Matrix left_null_space_basis(const Matrix& a, const TolerancePolicy& tol = {});

/// Largest singular value; 0 for an empty matrix.
double spectral_norm(const Matrix& a);

/// Concatenate blocks left-to-right. Throws std::invalid_argument naming the
/// offending block on a row-count mismatch or an empty block list.
Matrix hstack(const std::vector<Matrix>& blocks);

/// Concatenate blocks top-to-bottom.
Matrix vstack(const std::vector<Matrix>& blocks);

}  // namespace gsalign
