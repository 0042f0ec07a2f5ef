#include "gsalign/channel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gsalign {

void SystemConfig::validate() const {
  if (K < 2) throw std::invalid_argument("SystemConfig: K must be >= 2");
  if (M < 1 || N < 1) throw std::invalid_argument("SystemConfig: M, N must be >= 1");
}

void DataSwitchMatrix::validate() const {
  if (K < 2 || static_cast<int>(d.size()) != K * K) {
    throw std::invalid_argument("DataSwitchMatrix: bad dimensions");
  }
  for (int i = 1; i <= K; ++i) {
    if (at(i, i) != 0) {
      throw std::invalid_argument("DataSwitchMatrix: diagonal entry (" +
                                  std::to_string(i) + "," + std::to_string(i) +
                                  ") must be zero");
    }
    for (int j = 1; j <= K; ++j) {
      if (at(i, j) < 0) {
        throw std::invalid_argument("DataSwitchMatrix: negative entry");
      }
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument("DataSwitchMatrix: not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

int DataSwitchMatrix::d_total() const {
  int s = 0;
  for (int v : d) s += v;
  return s;
}

int DataSwitchMatrix::node_total(int i) const {
  int s = 0;
  for (int j = 1; j <= K; ++j) s += at(i, j);
  return s;
}

int DataSwitchMatrix::max_entry() const {
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<PairId> DataSwitchMatrix::pairs() const {
  std::vector<PairId> out;
  for (int i = 1; i <= K; ++i)
    for (int j = i + 1; j <= K; ++j)
      if (at(i, j) > 0) out.emplace_back(i, j);
  return out;
}

DataSwitchMatrix make_pattern(Pattern pattern, int K, int per_pair_streams, int L) {
  if (K < 2) throw std::invalid_argument("make_pattern: K must be >= 2");
  if (per_pair_streams < 1) {
    throw std::invalid_argument("make_pattern: per_pair_streams must be >= 1");
  }
  DataSwitchMatrix D;
  D.K = K;
  D.d.assign(static_cast<std::size_t>(K) * K, 0);
  const int x = per_pair_streams;
  switch (pattern) {
    case Pattern::Y:
      for (int i = 1; i <= K; ++i)
        for (int j = 1; j <= K; ++j)
          if (i != j) D.at(i, j) = x;
      break;
    case Pattern::Pairwise:
      if (K % 2 != 0) throw std::invalid_argument("make_pattern: pairwise needs even K");
      for (int i = 1; i <= K; ++i) D.at(i, K + 1 - i) = x;
      break;
    case Pattern::X:
      if (K % 2 != 0) throw std::invalid_argument("make_pattern: x needs even K");
      for (int i = 1; i <= K / 2; ++i)
        for (int j = K / 2 + 1; j <= K; ++j) {
          D.at(i, j) = x;
          D.at(j, i) = x;
        }
      break;
    case Pattern::LCluster: {
      if (L < 1 || K % L != 0) {
        throw std::invalid_argument("make_pattern: K must be divisible by L");
      }
      const int Kp = K / L;
      if (Kp < 2) throw std::invalid_argument("make_pattern: cluster size must be >= 2");
      for (int c = 0; c < L; ++c)
        for (int i = c * Kp + 1; i <= (c + 1) * Kp; ++i)
          for (int j = c * Kp + 1; j <= (c + 1) * Kp; ++j)
            if (i != j) D.at(i, j) = x;
      break;
    }
  }
  D.validate();
  return D;
}

ChannelRealization sample_channels(const SystemConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  ChannelRealization ch;
  ch.seed = seed;
  ch.H.reserve(cfg.K);
  ch.G.reserve(cfg.K);
  for (int i = 0; i < cfg.K; ++i) {
    ch.H.push_back(sample_complex_gaussian(cfg.N, cfg.M, mix_seed(seed, 2 * i)));
    ch.G.push_back(sample_complex_gaussian(cfg.M, cfg.N, mix_seed(seed, 2 * i + 1)));
  }
  return ch;
}

}  // namespace gsalign
