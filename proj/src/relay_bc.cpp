#include "gsalign/relay_bc.hpp"

#include <Eigen/QR>

namespace gsalign {

namespace {

Matrix stack_g_excluding(const std::vector<Matrix>& G, int skip_a, int skip_b) {
  std::vector<Matrix> blocks;
  for (int k = 1; k <= static_cast<int>(G.size()); ++k) {
    if (k != skip_a && k != skip_b) blocks.push_back(G[k - 1]);
  }
  return vstack(blocks);
}

}  // namespace

std::vector<PairId> pairs_of_user(const DataSwitchMatrix& D, int k) {
  std::vector<PairId> out;
  for (const auto& p : D.pairs()) {
    if (p.first == k || p.second == k) out.push_back(p);
  }
  return out;
}

Matrix build_u_nulling(const ChannelRealization& ch, const DataSwitchMatrix& D,
                       const TolerancePolicy& tol) {
  D.validate();
  const int M = static_cast<int>(ch.G.at(0).rows());
  const int N = static_cast<int>(ch.G.at(0).cols());
  const int avail = N - (D.K - 2) * M;
  if (avail < D.max_entry()) {
    throw GsaError("build_u_nulling: null space budget N - (K-2)M = " +
                   std::to_string(avail) + " is below the largest stream count " +
                   std::to_string(D.max_entry()));
  }
  std::vector<Matrix> blocks;
  std::uint64_t tag = 0xDC;
  for (const auto& [i, j] : D.pairs()) {
    const int d = D.at(i, j);
    const Matrix basis = null_space_basis(stack_g_excluding(ch.G, i, j), tol);
    if (basis.cols() < d) {
      throw GsaError("build_u_nulling: right null space for pair (" + std::to_string(i) +
                         "," + std::to_string(j) + ") has dimension " +
                         std::to_string(basis.cols()) + " < " + std::to_string(d),
                     {i, j});
    }
    // Seeded generic combination instead of plain basis truncation; see the
    // corresponding note in the uplink construction.
    const Matrix coeff = sample_complex_gaussian(basis.cols(), d, mix_seed(ch.seed, tag++));
    blocks.push_back(basis * coeff);
  }
  return hstack(blocks);
}

BcScheme build_bc(const ChannelRealization& ch, const GsaDesign& mac, Pattern model,
                  const TolerancePolicy& tol) {
  const DataSwitchMatrix& D = mac.served;
  const int M = static_cast<int>(ch.G.at(0).rows());
  const int N = static_cast<int>(ch.G.at(0).cols());

  BcScheme bc;
  bc.pair_order = mac.pair_order;
  bc.served = D;

  if (N - (D.K - 2) * M >= D.max_entry()) {
    bc.U = build_u_nulling(ch, D, tol);
    bc.dual = false;
    return bc;
  }

  // Dual route: run the uplink construction on the transposed downlink
  // channels, then map its compression matrix back to a relay precoder.
  ChannelRealization dual_ch;
  dual_ch.seed = ch.seed;
  for (const auto& g : ch.G) dual_ch.H.push_back(g.transpose());
  for (const auto& h : ch.H) dual_ch.G.push_back(h.transpose());
  const GsaDesign dual = design_for_target(dual_ch, D, M, N, model, tol);
  if (dual.served.d_total() != D.d_total()) {
    throw GsaError("build_bc: dual construction cannot carry all served streams");
  }

  // U = P^T (B^T)^{-1} of the dual design, computed as (B^{-1} P)^T.
  bc.U = dual.B.colPivHouseholderQr().solve(dual.P).transpose();
  bc.dual = true;
  for (const auto& [i, j] : D.pairs()) {
    bc.filter[{i, j}] = dual.V.at({i, j}).transpose();
    bc.filter[{j, i}] = dual.V.at({j, i}).transpose();
  }
  return bc;
}

double relay_scale(const BcScheme& bc) {
  const double f = bc.U.norm();
  if (!(f > 0.0)) throw GsaError("relay_scale: zero relay precoder");
  return f / std::sqrt(static_cast<double>(bc.U.cols()));
}

Vector relay_transmit(const BcScheme& bc, const Vector& s) {
  if (s.size() != bc.U.cols()) {
    throw std::invalid_argument("relay_transmit: symbol count mismatch");
  }
  return bc.U * s / relay_scale(bc);
}

Vector user_decode(const BcScheme& bc, const ChannelRealization& ch, int k,
                   const Vector& y_k, const Vector& own_symbols,
                   const TolerancePolicy& tol) {
  const auto my_pairs = pairs_of_user(bc.served, k);
  int total = 0;
  for (const auto& p : my_pairs) total += bc.served.at(p.first, p.second);
  if (own_symbols.size() != total) {
    throw std::invalid_argument("user_decode: own symbol count mismatch");
  }
  const double c = relay_scale(bc);

  Vector coded(total);
  if (bc.dual) {
    int off = 0;
    for (const auto& p : my_pairs) {
      const int j = (p.first == k) ? p.second : p.first;
      const int d = bc.served.at(p.first, p.second);
      coded.segment(off, d) = c * (bc.filter.at({k, j}) * y_k);
      off += d;
    }
  } else {
    // Blocks of U for pairs not containing k are nulled at user k, so the
    // least-squares system only involves this user's own blocks.
    std::vector<Matrix> cols;
    int uoff = 0;
    std::map<PairId, int> offsets;
    for (const auto& p : bc.pair_order) {
      offsets[p] = uoff;
      uoff += bc.served.at(p.first, p.second);
    }
    for (const auto& p : my_pairs) {
      const int d = bc.served.at(p.first, p.second);
      cols.push_back(ch.G[k - 1] * bc.U.middleCols(offsets.at(p), d));
    }
    const Matrix a = hstack(cols);
    if (numerical_rank(a, tol) != a.cols()) {
      throw GsaError("user_decode: effective downlink matrix of user " +
                     std::to_string(k) + " is rank deficient");
    }
    coded = c * a.colPivHouseholderQr().solve(y_k);
  }
  return coded - own_symbols;
}

}  // namespace gsalign
