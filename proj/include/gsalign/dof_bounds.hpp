/**
 * @file dof_bounds.hpp
 * @brief Cut-set and genie-aided piecewise total-DoF upper bounds.
 *
 * M and N are accepted as positive reals so the evaluators can sample the
 * DoF plane densely; every bound depends on (M, N) only through the ratio
 * N/M and an overall scale.
 */
#pragma once

#include "gsalign/channel.hpp"

namespace gsalign {

/// min(K*M, 2*N).
double cutset_bound(int K, double M, double N);

/// Piecewise bound for the K-user Y channel (K >= 4).
double y_bound(int K, double M, double N);

/// Piecewise bound for the multi-pair two-way relay channel (K even, >= 4).
double pairwise_bound(int K, double M, double N);

/// Piecewise bound for the generalized two-way X relay channel (K even, >= 4).
double x_bound(int K, double M, double N);

/// Dispatch on the channel model. Pattern::LCluster is not a bound model.
double model_bound(Pattern model, int K, double M, double N);

}  // namespace gsalign
