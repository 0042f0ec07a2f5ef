/**
 * @file sim.hpp
 * @brief End-to-end two-phase simulation: uplink (multiple access to the
 *        relay), relay-side recovery of the pairwise symbol sums, downlink
 *        (broadcast) and per-user decoding.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsalign/channel.hpp"
#include "gsalign/gsa.hpp"
#include "gsalign/relay_bc.hpp"

namespace gsalign {

/// Result of one end-to-end run.
struct SimReport {
  int K = 0, M = 0, N = 0;          ///< physical antenna configuration.
  int extension = 1;                ///< symbol-extension factor (channel uses).
  std::uint64_t seed = 0;
  double noise_variance = 0.0;

  bool feasible = false;            ///< a construction was found and validated.
  std::string route;                ///< "generic", "beta" or "deactivation".
  int beta = 0, q = 0;              ///< set only on the beta route.
  std::string failure;              ///< diagnostic when feasible == false.

  int streams_requested = 0;        ///< directed streams asked for.
  int streams_served = 0;           ///< directed streams the design carries.
  int streams_delivered = 0;        ///< directed streams below the error bar.
  double dof_per_channel_use = 0.0; ///< delivered / extension.

  double alignment_residual_max = 0.0;  ///< worst pair residual of P H_i V.
  double b_condition = 0.0;             ///< condition number of B.
  double relay_error = 0.0;             ///< relative error of the symbol sums.
  double user_error_max = 0.0;          ///< worst per-stream relative error.
  bool bc_dual = false;                 ///< downlink used the dual route.
};

/// Aggregate over a batch of seeds.
struct BatchReport {
  std::vector<SimReport> runs;
  int failures = 0;
  int modal_delivered = 0;          ///< most common delivered-stream count.
  double median_relay_error = 0.0;
  double max_user_error = 0.0;
  double min_dof = 0.0, median_dof = 0.0, max_dof = 0.0;
};

/// Run one seeded end-to-end simulation. `D` is expressed for the extended
/// system when `extension` > 1 (antenna counts scale by the same factor).
/// Infeasible configurations are reported via `feasible`/`failure`, not by
/// throwing; argument errors still throw.
SimReport run_once(const SystemConfig& cfg, const DataSwitchMatrix& D, Pattern model,
                   std::uint64_t seed, double noise_variance = 0.0,
                   const TolerancePolicy& tol = {}, int extension = 1,
                   double delivery_tol = 1e-6);

/// Run `count` simulations with seeds mixed from `base_seed`.
BatchReport run_batch(const SystemConfig& cfg, const DataSwitchMatrix& D, Pattern model,
                      std::uint64_t base_seed, int count, double noise_variance = 0.0,
                      const TolerancePolicy& tol = {}, int extension = 1,
                      double delivery_tol = 1e-6);

}  // namespace gsalign
