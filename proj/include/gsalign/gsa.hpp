/**
 * @file gsa.hpp
 * @brief Generalized signal alignment: relay compression matrix P (generic
 *        and beta-combining variants), source precoders V, effective matrix B,
 *        alignment verification and symbol extension.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsalign/channel.hpp"
#include "gsalign/linalg.hpp"

namespace gsalign {

/// Structured construction failure; carries the offending pair when relevant.
struct GsaError : std::runtime_error {
  PairId pair{0, 0};
  explicit GsaError(const std::string& what, PairId p = {0, 0})
      : std::runtime_error(what), pair(p) {}
};

/// A complete MAC-phase alignment design.
struct GsaDesign {
  Matrix P;  // d_total/2 x N compression matrix, full row rank
  Matrix B;  // d_total/2 square effective matrix, full rank
  std::vector<PairId> pair_order;          // unordered pairs, lexicographic
  std::map<PairId, Matrix> V;              // directed (i,j) -> M x d_{i,j}
  DataSwitchMatrix served;                 // streams actually carried
  std::string route;                       // "generic", "beta", "deactivation"
  int beta = 0;                            // beta-combining parameters, if used
  int q = 0;

  int rows() const { return static_cast<int>(P.rows()); }
  /// Column offset of a pair's block inside B / s_plus.
  int block_offset(const PairId& pair) const;
};

struct PairCheck {
  PairId pair;
  int rank = 0;          // rank of P [H_i  -H_j]
  int required_max = 0;  // 2M - d_{i,j}
  int null_dim = 0;      // 2M - rank
  bool satisfied = false;
};

struct AlignmentReport {
  std::vector<PairCheck> pairs;
  bool feasible = false;
};

/// P per the generic construction: block P_{i,j} holds the first d_{i,j}
/// left-null basis vectors of the stack of all channels except i and j.
/// Requires N >= (K-2)M + max d (throws GsaError naming the first pair that
/// runs out of null space otherwise).
Matrix build_p_generic(const ChannelRealization& ch, const DataSwitchMatrix& D,
                       const TolerancePolicy& tol = {});

/// All admissible beta-combining node sets for a model (1-indexed node ids).
/// Y: every beta-subset; pairwise: unions of beta/2 node pairs; X: beta/2
/// nodes from each group.
std::vector<std::vector<int>> combining_sets(Pattern model, int K, int beta);

/// Number of combining sets that contain a given exchanging pair.
long long sets_containing_pair(Pattern model, int K, int beta);

/// P from the beta-combining construction: the first q left-null basis
/// vectors of each admissible N x (beta M) combining stack.
Matrix build_p_beta(const ChannelRealization& ch, const DataSwitchMatrix& D,
                    Pattern model, int beta, int q,
                    const TolerancePolicy& tol = {});

/// Per-pair rank condition rank(P [H_i  -H_j]) <= 2M - d_{i,j}.
AlignmentReport check_theorem4(const Matrix& P, const ChannelRealization& ch,
                               const DataSwitchMatrix& D,
                               const TolerancePolicy& tol = {});

/// Source precoders from the null space of [P H_i  -P H_j], effective matrix
/// B, and validation of all design invariants.
GsaDesign build_precoders(const Matrix& P, const ChannelRealization& ch,
                          const DataSwitchMatrix& D,
                          const TolerancePolicy& tol = {});

/// t-fold block-diagonal extension with identical per-slot channels.
ChannelRealization symbol_extend(const ChannelRealization& ch, int t);

/// Truncate to the first M_used source / N_used relay antennas.
ChannelRealization deactivate_antennas(const ChannelRealization& ch,
                                       int M_used, int N_used);

/// Route dispatcher: generic construction when the antenna threshold holds,
/// else beta-combining, else stream reduction (Lemma-2 style deactivation of
/// demand down to a conventional-alignment corner). The returned design's
/// `served` matrix reports the streams actually carried.
GsaDesign design_for_target(const ChannelRealization& ch,
                            const DataSwitchMatrix& D, int M, int N,
                            Pattern model, const TolerancePolicy& tol = {});

}  // namespace gsalign
