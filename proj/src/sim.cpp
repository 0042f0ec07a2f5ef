#include "gsalign/sim.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <map>

namespace gsalign {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Vector noise_vector(int n, double variance, std::uint64_t seed, std::uint64_t tag) {
  if (variance <= 0.0) return Vector::Zero(n);
  return std::sqrt(variance) * Matrix(sample_complex_gaussian(n, 1, mix_seed(seed, tag))).col(0);
}

}  // namespace

SimReport run_once(const SystemConfig& cfg, const DataSwitchMatrix& D, Pattern model,
                   std::uint64_t seed, double noise_variance, const TolerancePolicy& tol,
                   int extension, double delivery_tol) {
  cfg.validate();
  D.validate();
  if (extension < 1) throw std::invalid_argument("run_once: extension must be >= 1");

  SimReport rep;
  rep.K = cfg.K;
  rep.M = cfg.M;
  rep.N = cfg.N;
  rep.extension = extension;
  rep.seed = seed;
  rep.noise_variance = noise_variance;
  rep.streams_requested = D.d_total();

  const ChannelRealization ch = symbol_extend(sample_channels(cfg, seed), extension);
  const int me = cfg.M * extension;
  const int ne = cfg.N * extension;

  GsaDesign design;
  BcScheme bc;
  try {
    design = design_for_target(ch, D, me, ne, model, tol);
    bc = build_bc(ch, design, model, tol);
  } catch (const GsaError& e) {
    rep.feasible = false;
    rep.failure = e.what();
    return rep;
  }
  rep.feasible = true;
  rep.route = design.route;
  rep.beta = design.beta;
  rep.q = design.q;
  rep.bc_dual = bc.dual;
  rep.streams_served = design.served.d_total();

  // Alignment residuals and conditioning of the effective matrix B.
  for (const auto& p : design.pair_order) {
    const Matrix lhs = design.P * ch.H[p.first - 1] * design.V.at({p.first, p.second});
    const Matrix rhs = design.P * ch.H[p.second - 1] * design.V.at({p.second, p.first});
    rep.alignment_residual_max =
        std::max(rep.alignment_residual_max, spectral_norm(lhs - rhs));
  }
  {
    Eigen::JacobiSVD<Matrix> svd(design.B);
    rep.b_condition = svd.singularValues()(0) /
                      svd.singularValues()(svd.singularValues().size() - 1);
  }

  // Draw unit-variance symbols per directed stream.
  std::map<PairId, Vector> s;  // keyed by (sender, receiver)
  std::uint64_t tag = 1000;
  for (const auto& [i, j] : design.pair_order) {
    const int d = design.served.at(i, j);
    s[{i, j}] = Matrix(sample_complex_gaussian(d, 1, mix_seed(seed, tag++))).col(0);
    s[{j, i}] = Matrix(sample_complex_gaussian(d, 1, mix_seed(seed, tag++))).col(0);
  }

  // Uplink: every user transmits the sum of its precoded streams.
  Vector y_r = noise_vector(ne, noise_variance, seed, 1);
  for (int k = 1; k <= cfg.K; ++k) {
    Vector x_k = Vector::Zero(me);
    for (const auto& p : pairs_of_user(design.served, k)) {
      const int partner = (p.first == k) ? p.second : p.first;
      x_k += design.V.at({k, partner}) * s.at({k, partner});
    }
    y_r += ch.H[k - 1] * x_k;
  }

  // Relay recovers the per-pair symbol sums through the compressed space.
  const int J = design.served.d_total() / 2;
  const Vector s_sum_hat = design.B.colPivHouseholderQr().solve(design.P * y_r);
  Vector s_sum(J);
  for (const auto& p : design.pair_order) {
    const int d = design.served.at(p.first, p.second);
    s_sum.segment(design.block_offset(p), d) =
        s.at({p.first, p.second}) + s.at({p.second, p.first});
  }
  rep.relay_error = (s_sum_hat - s_sum).norm() / s_sum.norm();

  // Downlink: broadcast the recovered sums, each user removes its own part.
  const Vector x_r = relay_transmit(bc, s_sum_hat);
  int delivered = 0;
  for (int k = 1; k <= cfg.K; ++k) {
    const auto my_pairs = pairs_of_user(design.served, k);
    if (my_pairs.empty()) continue;
    int total = 0;
    for (const auto& p : my_pairs) total += design.served.at(p.first, p.second);
    Vector own(total), want(total);
    int off = 0;
    for (const auto& p : my_pairs) {
      const int partner = (p.first == k) ? p.second : p.first;
      const int d = design.served.at(p.first, p.second);
      own.segment(off, d) = s.at({k, partner});
      want.segment(off, d) = s.at({partner, k});
      off += d;
    }
    const Vector y_k = ch.G[k - 1] * x_r +
                       noise_vector(me, noise_variance, seed, 100 + static_cast<std::uint64_t>(k));
    Vector got;
    try {
      got = user_decode(bc, ch, k, y_k, own, tol);
    } catch (const GsaError& e) {
      rep.failure = e.what();
      continue;
    }
    for (int i = 0; i < total; ++i) {
      const double rel = std::abs(got(i) - want(i)) / std::max(1e-300, std::abs(want(i)));
      rep.user_error_max = std::max(rep.user_error_max, rel);
      if (rel < delivery_tol) ++delivered;
    }
  }
  rep.streams_delivered = delivered;
  rep.dof_per_channel_use = static_cast<double>(delivered) / extension;
  return rep;
}

BatchReport run_batch(const SystemConfig& cfg, const DataSwitchMatrix& D, Pattern model,
                      std::uint64_t base_seed, int count, double noise_variance,
                      const TolerancePolicy& tol, int extension, double delivery_tol) {
  if (count < 1) throw std::invalid_argument("run_batch: count must be >= 1");
  BatchReport batch;
  std::vector<double> relay_errs, dofs;
  std::map<int, int> delivered_hist;
  for (int i = 0; i < count; ++i) {
    SimReport r = run_once(cfg, D, model, mix_seed(base_seed, 7000 + i), noise_variance,
                           tol, extension, delivery_tol);
    if (!r.feasible) {
      ++batch.failures;
    } else {
      relay_errs.push_back(r.relay_error);
      dofs.push_back(r.dof_per_channel_use);
      batch.max_user_error = std::max(batch.max_user_error, r.user_error_max);
      ++delivered_hist[r.streams_delivered];
    }
    batch.runs.push_back(std::move(r));
  }
  batch.median_relay_error = median(relay_errs);
  if (!dofs.empty()) {
    batch.min_dof = *std::min_element(dofs.begin(), dofs.end());
    batch.max_dof = *std::max_element(dofs.begin(), dofs.end());
    batch.median_dof = median(dofs);
  }
  int best = -1;
  for (const auto& [delivered, n] : delivered_hist) {
    if (n > best) { best = n; batch.modal_delivered = delivered; }
  }
  return batch;
}

}  // namespace gsalign
