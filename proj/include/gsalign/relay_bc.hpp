/**
 * @file relay_bc.hpp
 * @brief Downlink (broadcast) side of the relaying scheme: relay precoding
 *        of the network-coded symbols and per-user recovery filters.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsalign/channel.hpp"
#include "gsalign/gsa.hpp"
#include "gsalign/linalg.hpp"

namespace gsalign {

/// Relay-side downlink design. Either `U` places each pair's block in the
/// null space of all other users' downlink channels ("nulling"), or the
/// uplink construction is replayed on the transposed downlink channels and
/// users apply compression-style receive filters ("dual").
struct BcScheme {
  Matrix U;                           ///< N x J relay precoder (J = streams).
  std::vector<PairId> pair_order;     ///< column-block order of U.
  DataSwitchMatrix served;            ///< streams actually carried.
  bool dual = false;                  ///< true if the dual route is used.
  /// Receive filters, keyed by (user, partner); each is d x M. Only used on
  /// the dual route; on the nulling route users solve a small least-squares
  /// system against G_k * U instead.
  std::map<PairId, Matrix> filter;

  int streams() const { return static_cast<int>(U.cols()); }
};

/// Zero-forcing relay precoder: block U_{(i,j)} spans the right null space of
/// the stacked downlink channels of all other users. Requires
/// N - (K-2)*M >= max d; throws GsaError naming the deficit otherwise.
Matrix build_u_nulling(const ChannelRealization& ch, const DataSwitchMatrix& D,
                       const TolerancePolicy& tol = {});

/// Build the downlink scheme for the streams served by `mac`. Tries the
/// nulling precoder first and falls back to the dual construction (uplink
/// design applied to transposed downlink channels).
BcScheme build_bc(const ChannelRealization& ch, const GsaDesign& mac,
                  Pattern model, const TolerancePolicy& tol = {});

/// Relay transmit signal for network-coded symbols `s` (length J). The fixed
/// scaling keeps average transmit power bounded and is undone by the decoder.
Vector relay_transmit(const BcScheme& bc, const Vector& s);

/// Power normalization constant applied inside relay_transmit.
double relay_scale(const BcScheme& bc);

/// Recover the network-coded symbols destined to user `k` from its received
/// downlink signal `y_k` (length M), then subtract the user's own transmitted
/// symbols to obtain its partners' symbols. Returns the partner symbols in
/// pair_order restricted to pairs containing k.
Vector user_decode(const BcScheme& bc, const ChannelRealization& ch, int k,
                   const Vector& y_k, const Vector& own_symbols,
                   const TolerancePolicy& tol = {});

/// Network-coded symbols seen by user k, ordered by its pairs; helper shared
/// by user_decode and the simulator.
std::vector<PairId> pairs_of_user(const DataSwitchMatrix& D, int k);

}  // namespace gsalign
