/**
 * @file dof_achievable.hpp
 * @brief Achievable-DoF geometry: corner points in the DoF plane, the
 *        single-sided trapezoid union, asymptotics and generic feasibility.
 */
#pragma once

#include <vector>

#include "gsalign/channel.hpp"

namespace gsalign {

/// Exact fraction. Kept alongside the double value so knot classification can
/// be done on rationals; `exact` is false when the construction overflowed
/// 64-bit arithmetic (very large K), in which case only `value` is usable.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool exact = true;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const {
    return exact && o.exact && num == o.num && den == o.den;
  }
};

Rational make_rational(long long num, long long den);          // normalized
Rational rational_add(const Rational& a, const Rational& b);   // overflow-aware

/// Corner point in the DoF plane: N/M ratio vs total DoF per M.
struct DofPlanePoint {
  Rational ratio;
  Rational dof_per_m;
  double ratio_d = 0.0;      // always valid
  double dof_per_m_d = 0.0;  // always valid
};

std::vector<DofPlanePoint> y_points(int K);         // K >= 4
std::vector<DofPlanePoint> pairwise_points(int K);  // K even, >= 4
std::vector<DofPlanePoint> x_points(int K);         // K even, >= 4
std::vector<DofPlanePoint> model_points(Pattern model, int K);

/// Union of single-sided trapezoids: max over points of d0*M (right of the
/// corner, relay-side antenna deactivation) or (d0/a0)*N (left of it,
/// source-side deactivation).
double achievable_dof(const std::vector<DofPlanePoint>& points, double M, double N);

/// Large-K limit of the per-M achievable DoF, common to all three models:
/// 2r on (0,2], 4 on (2,4], r on (4,inf).
double asymptotic_dof(double ratio);

/// Generic construction feasibility: M >= max_i d_i and N >= (K-2)M + max d.
bool theorem8_feasible(const DataSwitchMatrix& D, int M, int N);

/// Minimal N (real) for full DoF KM in the L-cluster K'-user multiway channel.
double lcluster_threshold(int K_prime, int L, int M);

/// n choose k as a double (exact for small arguments).
double binomial(int n, int k);
/// n choose k in 64-bit integers; returns -1 on overflow.
long long binomial_ll(int n, int k);

}  // namespace gsalign
