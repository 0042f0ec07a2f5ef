/**
 * @file channel.hpp
 * @brief System configuration, exchange patterns (data switch matrix) and
 *        random channel realizations for the two-way relay network.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gsalign/linalg.hpp"

namespace gsalign {

/// K source nodes with M antennas each; one relay with N antennas.
struct SystemConfig {
  int K = 0;
  int M = 0;
  int N = 0;
  void validate() const;  // K >= 2, M >= 1, N >= 1
};

enum class Pattern { Y, Pairwise, X, LCluster };

/// Directed pair of node ids, 1-indexed.
using PairId = std::pair<int, int>;

/// K x K nonnegative stream-count matrix. Symmetric with zero diagonal;
/// asymmetric input is rejected, not symmetrized.
struct DataSwitchMatrix {
  int K = 0;
  std::vector<int> d;  // row-major K*K

  int at(int i, int j) const { return d[(i - 1) * K + (j - 1)]; }   // 1-indexed
  int& at(int i, int j) { return d[(i - 1) * K + (j - 1)]; }

  void validate() const;
  int d_total() const;            // sum of all entries
  int node_total(int i) const;    // d_i = sum_j d[i][j]
  int max_entry() const;
  /// Unordered pairs (i < j) with d[i][j] > 0, lexicographic. This order
  /// fixes the block layout of P, B, U and s_plus everywhere.
  std::vector<PairId> pairs() const;
};

/// Build the data switch matrix for one of the special exchange patterns.
/// L is only used for Pattern::LCluster (K must be divisible by L).
DataSwitchMatrix make_pattern(Pattern pattern, int K, int per_pair_streams,
                              int L = 0);

/// One draw of uplink (N x M) and downlink (M x N) channels.
struct ChannelRealization {
  std::vector<Matrix> H;  // K uplink matrices, N x M
  std::vector<Matrix> G;  // K downlink matrices, M x N
  std::uint64_t seed = 0;
};

ChannelRealization sample_channels(const SystemConfig& cfg, std::uint64_t seed);

}  // namespace gsalign
