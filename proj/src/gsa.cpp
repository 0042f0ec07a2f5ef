#include "gsalign/gsa.hpp"

#include <algorithm>

#include "gsalign/dof_achievable.hpp"

namespace gsalign {

int GsaDesign::block_offset(const PairId& pair) const {
  int off = 0;
  for (const auto& p : pair_order) {
    if (p == pair) return off;
    off += served.at(p.first, p.second);
  }
  throw GsaError("block_offset: pair not in pair_order", pair);
}

namespace {

/// Columns of all uplink channels except the listed nodes (1-indexed).
Matrix stack_excluding(const std::vector<Matrix>& H, int skip_a, int skip_b) {
  std::vector<Matrix> blocks;
  for (int k = 1; k <= static_cast<int>(H.size()); ++k) {
    if (k != skip_a && k != skip_b) blocks.push_back(H[k - 1]);
  }
  return hstack(blocks);
}

/// A seeded generic combination of `take` vectors from the span of `basis`.
/// Plain truncation of an SVD null basis can pick structured (for example
/// slot-localized) vectors on block-diagonal extended channels, which breaks
/// the generic rank arguments; a random full-support combination restores
/// them while staying inside the null space.
Matrix generic_null_rows(const Matrix& basis, int take, std::uint64_t seed) {
  const Matrix coeff = sample_complex_gaussian(basis.cols(), take, seed);
  return (basis * coeff).transpose();
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

}  // namespace

Matrix build_p_generic(const ChannelRealization& ch, const DataSwitchMatrix& D,
                       const TolerancePolicy& tol) {
  D.validate();
  std::vector<Matrix> rows;
  std::uint64_t tag = 0x6E0;
  for (const auto& [i, j] : D.pairs()) {
    const int d = D.at(i, j);
    const Matrix stack = stack_excluding(ch.H, i, j);
    const Matrix basis = left_null_space_basis(stack, tol);
    if (basis.cols() < d) {
      throw GsaError("build_p_generic: left null space of the complement stack for pair (" +
                         std::to_string(i) + "," + std::to_string(j) + ") has dimension " +
                         std::to_string(basis.cols()) + " < " + std::to_string(d),
                     {i, j});
    }
    rows.push_back(generic_null_rows(basis, d, mix_seed(ch.seed, tag++)));
  }
  if (rows.empty()) throw GsaError("build_p_generic: empty data switch matrix");
  return vstack(rows);
}

std::vector<std::vector<int>> combining_sets(Pattern model, int K, int beta) {
  if (beta < 2 || beta > K) throw std::invalid_argument("combining_sets: bad beta");
  switch (model) {
    case Pattern::Y:
      return subsets_of_size(K, beta);
    case Pattern::Pairwise: {
      if (K % 2 != 0 || beta % 2 != 0) {
        throw std::invalid_argument("combining_sets: pairwise needs even K and beta");
      }
      std::vector<std::vector<int>> out;
      for (const auto& pair_idx : subsets_of_size(K / 2, beta / 2)) {
        std::vector<int> s;
        for (int i : pair_idx) { s.push_back(i); s.push_back(K + 1 - i); }
        std::sort(s.begin(), s.end());
        out.push_back(s);
      }
      return out;
    }
    case Pattern::X: {
      if (K % 2 != 0 || beta % 2 != 0) {
        throw std::invalid_argument("combining_sets: x needs even K and beta");
      }
      std::vector<std::vector<int>> out;
      for (const auto& a : subsets_of_size(K / 2, beta / 2)) {
        for (const auto& b : subsets_of_size(K / 2, beta / 2)) {
          std::vector<int> s = a;
          for (int i : b) s.push_back(K / 2 + i);
          out.push_back(s);
        }
      }
      return out;
    }
    default:
      throw std::invalid_argument("combining_sets: unsupported model");
  }
}

long long sets_containing_pair(Pattern model, int K, int beta) {
  switch (model) {
    case Pattern::Y: return binomial_ll(K - 2, beta - 2);
    case Pattern::Pairwise: return binomial_ll(K / 2 - 1, beta / 2 - 1);
    case Pattern::X: {
      const long long c = binomial_ll(K / 2 - 1, beta / 2 - 1);
      return c * c;
    }
    default: throw std::invalid_argument("sets_containing_pair: unsupported model");
  }
}

Matrix build_p_beta(const ChannelRealization& ch, const DataSwitchMatrix& D,
                    Pattern model, int beta, int q, const TolerancePolicy& tol) {
  D.validate();
  const int K = D.K;
  const int M = static_cast<int>(ch.H.at(0).cols());
  const int N = static_cast<int>(ch.H.at(0).rows());
  if (beta * M > N) throw GsaError("build_p_beta: beta*M exceeds N");
  if (q < 1 || q > N - beta * M) {
    throw GsaError("build_p_beta: q must lie in [1, N - beta*M]");
  }
  const auto sets = combining_sets(model, K, beta);
  const int rows_needed = D.d_total() / 2;
  if (static_cast<long long>(sets.size()) * q != rows_needed) {
    throw GsaError("build_p_beta: q * #combining-sets = " +
                   std::to_string(sets.size() * q) + " != d_total/2 = " +
                   std::to_string(rows_needed));
  }
  std::vector<Matrix> rows;
  std::uint64_t tag = 0xBE7A;
  for (const auto& s : sets) {
    std::vector<Matrix> blocks;
    for (int k : s) blocks.push_back(ch.H[k - 1]);
    const Matrix basis = left_null_space_basis(hstack(blocks), tol);
    if (basis.cols() < q) {
      throw GsaError("build_p_beta: combining stack has left null dimension " +
                     std::to_string(basis.cols()) + " < q = " + std::to_string(q));
    }
    rows.push_back(generic_null_rows(basis, q, mix_seed(ch.seed, tag++)));
  }
  return vstack(rows);
}

AlignmentReport check_theorem4(const Matrix& P, const ChannelRealization& ch,
                               const DataSwitchMatrix& D,
                               const TolerancePolicy& tol) {
  D.validate();
  const int M = static_cast<int>(ch.H.at(0).cols());
  if (P.cols() != ch.H.at(0).rows()) {
    throw GsaError("check_theorem4: P column count does not match relay antennas");
  }
  AlignmentReport rep;
  rep.feasible = true;
  for (const auto& [i, j] : D.pairs()) {
    PairCheck c;
    c.pair = {i, j};
    const Matrix prod = hstack({P * ch.H[i - 1], -(P * ch.H[j - 1])});
    c.rank = static_cast<int>(numerical_rank(prod, tol));
    c.required_max = 2 * M - D.at(i, j);
    c.null_dim = 2 * M - c.rank;
    c.satisfied = c.rank <= c.required_max;
    rep.feasible = rep.feasible && c.satisfied;
    rep.pairs.push_back(c);
  }
  return rep;
}

GsaDesign build_precoders(const Matrix& P, const ChannelRealization& ch,
                          const DataSwitchMatrix& D, const TolerancePolicy& tol) {
  D.validate();
  const int M = static_cast<int>(ch.H.at(0).cols());
  const int J = D.d_total() / 2;
  if (P.rows() != J) {
    throw GsaError("build_precoders: P must have d_total/2 = " + std::to_string(J) + " rows");
  }
  if (numerical_rank(P, tol) != J) {
    throw GsaError("build_precoders: compression matrix is rank deficient");
  }

  GsaDesign de;
  de.P = P;
  de.pair_order = D.pairs();
  de.served = D;
  de.B = Matrix::Zero(J, J);

  const double p_norm = spectral_norm(P);
  int col = 0;
  for (const auto& [i, j] : de.pair_order) {
    const int d = D.at(i, j);
    const Matrix phi = P * ch.H[i - 1];
    const Matrix phj = P * ch.H[j - 1];
    const Matrix ns = null_space_basis(hstack({phi, -phj}), tol);
    if (ns.cols() < d) {
      throw GsaError("build_precoders: alignment null space for pair (" +
                         std::to_string(i) + "," + std::to_string(j) +
                         ") has dimension " + std::to_string(ns.cols()) + " < " +
                         std::to_string(d),
                     {i, j});
    }
    Matrix vij = ns.topRows(M).leftCols(d);
    Matrix vji = ns.bottomRows(M).leftCols(d);
    for (int c = 0; c < d; ++c) {  // unit-norm columns (power constraint up to scale)
      const double ni = vij.col(c).norm();
      const double nj = vji.col(c).norm();
      if (ni <= 0.0 || nj <= 0.0) {
        throw GsaError("build_precoders: degenerate precoder column", {i, j});
      }
      // Keep the pair's relative scale: rescale both sides by the same factor
      // so P H_i v_ij == P H_j v_ji still holds, then cap columns at unit norm.
      const double s = 1.0 / std::max(ni, nj);
      vij.col(c) *= s;
      vji.col(c) *= s;
    }
    const double resid = spectral_norm(phi * vij - phj * vji);
    const double scale = p_norm * std::max(spectral_norm(ch.H[i - 1]),
                                           spectral_norm(ch.H[j - 1]));
    if (resid > tol.residual_tol * scale) {
      throw GsaError("build_precoders: alignment residual " + std::to_string(resid) +
                         " exceeds tolerance for pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")",
                     {i, j});
    }
    de.V[{i, j}] = vij;
    de.V[{j, i}] = vji;
    de.B.middleCols(col, d) = phi * vij;
    col += d;
  }

  // Stacked per-node precoders must have full column rank.
  for (int i = 1; i <= D.K; ++i) {
    std::vector<Matrix> blocks;
    for (int j = 1; j <= D.K; ++j) {
      if (D.at(i, j) > 0) blocks.push_back(de.V.at({i, j}));
    }
    if (blocks.empty()) continue;
    const Matrix vi = hstack(blocks);
    if (vi.cols() > M || numerical_rank(vi, tol) != vi.cols()) {
      throw GsaError("build_precoders: stacked precoder of node " + std::to_string(i) +
                     " is column-rank deficient");
    }
  }
  if (numerical_rank(de.B, tol) != J) {
    throw GsaError("build_precoders: effective matrix B is rank deficient");
  }
  return de;
}

ChannelRealization symbol_extend(const ChannelRealization& ch, int t) {
  if (t < 1) throw std::invalid_argument("symbol_extend: t must be >= 1");
  if (t == 1) return ch;
  ChannelRealization out;
  out.seed = ch.seed;
  auto extend = [t](const Matrix& m) {
    Matrix e = Matrix::Zero(m.rows() * t, m.cols() * t);
    for (int s = 0; s < t; ++s) {
      e.block(s * m.rows(), s * m.cols(), m.rows(), m.cols()) = m;
    }
    return e;
  };
  for (const auto& h : ch.H) out.H.push_back(extend(h));
  for (const auto& g : ch.G) out.G.push_back(extend(g));
  return out;
}

ChannelRealization deactivate_antennas(const ChannelRealization& ch, int M_used,
                                       int N_used) {
  const int M = static_cast<int>(ch.H.at(0).cols());
  const int N = static_cast<int>(ch.H.at(0).rows());
  if (M_used < 1 || M_used > M || N_used < 1 || N_used > N) {
    throw std::invalid_argument("deactivate_antennas: bounds violation");
  }
  if (M_used == M && N_used == N) return ch;
  ChannelRealization out;
  out.seed = ch.seed;
  for (const auto& h : ch.H) out.H.push_back(h.topLeftCorner(N_used, M_used));
  for (const auto& g : ch.G) out.G.push_back(g.topLeftCorner(M_used, N_used));
  return out;
}

namespace {

bool beta_route_feasible(const DataSwitchMatrix& D, Pattern model, int beta,
                         int M, int N, int* q_out) {
  if (model != Pattern::Y && model != Pattern::Pairwise && model != Pattern::X) {
    return false;
  }
  if ((model == Pattern::Pairwise || model == Pattern::X) &&
      (beta % 2 != 0 || D.K % 2 != 0)) {
    return false;
  }
  if (beta < 2 || beta > D.K - 2 || beta * M > N) return false;
  long long nsets;
  try {
    nsets = static_cast<long long>(combining_sets(model, D.K, beta).size());
  } catch (const std::invalid_argument&) {
    return false;
  }
  const int J = D.d_total() / 2;
  if (nsets <= 0 || J % nsets != 0) return false;
  const long long q = J / nsets;
  if (q < 1 || q > N - static_cast<long long>(beta) * M) return false;
  const long long per_pair = sets_containing_pair(model, D.K, beta);
  for (const auto& [i, j] : D.pairs()) {
    if (per_pair * q < J - 2 * M + D.at(i, j)) return false;
  }
  for (int i = 1; i <= D.K; ++i) {
    if (D.node_total(i) > M) return false;
  }
  *q_out = static_cast<int>(q);
  return true;
}

}  // namespace

GsaDesign design_for_target(const ChannelRealization& ch, const DataSwitchMatrix& D,
                            int M, int N, Pattern model, const TolerancePolicy& tol) {
  D.validate();
  const ChannelRealization use = deactivate_antennas(ch, M, N);

  // Route 1: generic construction.
  if (theorem8_feasible(D, M, N)) {
    GsaDesign de = build_precoders(build_p_generic(use, D, tol), use, D, tol);
    de.route = "generic";
    return de;
  }

  // Route 2: beta-combining. beta = floor(N/M), stepped down on parity or
  // counting-identity failure.
  const int step = (model == Pattern::Y) ? 1 : 2;
  int beta0 = std::min(N / M, D.K - 2);
  if (step == 2 && beta0 % 2 != 0) --beta0;
  for (int beta = beta0; beta >= 2; beta -= step) {
    int q = 0;
    if (!beta_route_feasible(D, model, beta, M, N, &q)) continue;
    GsaDesign de = build_precoders(build_p_beta(use, D, model, beta, q, tol), use, D, tol);
    de.route = "beta";
    de.beta = beta;
    de.q = q;
    return de;
  }

  // Route 3: reduce the served streams until a conventional-alignment corner
  // is reached (d_total/2 <= N rows, enough null space per pair, per-node
  // stream counts within M), then use a generic full-rank compression.
  DataSwitchMatrix served = D;
  while (true) {
    const int J = served.d_total() / 2;
    if (J == 0) {
      throw GsaError("design_for_target: no feasible route (tightest constraint: N = " +
                     std::to_string(N) + " < (K-2)M + max d = " +
                     std::to_string((D.K - 2) * M + D.max_entry()) +
                     " and no alignment corner reachable)");
    }
    bool ok = J <= N && J + served.max_entry() <= 2 * M;
    for (int i = 1; ok && i <= served.K; ++i) ok = served.node_total(i) <= M;
    if (ok) break;
    // Drop one stream from the largest remaining pair (last in order on ties).
    PairId victim{0, 0};
    int best = 0;
    for (const auto& [i, j] : served.pairs()) {
      if (served.at(i, j) >= best) { best = served.at(i, j); victim = {i, j}; }
    }
    served.at(victim.first, victim.second) -= 1;
    served.at(victim.second, victim.first) -= 1;
  }
  const int J = served.d_total() / 2;
  const Matrix P = sample_complex_gaussian(J, N, mix_seed(ch.seed, 0x5AFEC0DEULL));
  GsaDesign de = build_precoders(P, use, served, tol);
  de.route = "deactivation";
  return de;
}

}  // namespace gsalign
