#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsalign/channel.hpp"

using namespace gsalign;

TEST_CASE("system config validation") {
  CHECK_NOTHROW((SystemConfig{2, 1, 1}).validate());
  CHECK_THROWS_AS((SystemConfig{1, 1, 1}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((SystemConfig{4, 0, 3}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((SystemConfig{4, 2, 0}).validate(), std::invalid_argument);
}

TEST_CASE("full-exchange pattern") {
  const DataSwitchMatrix d = make_pattern(Pattern::Y, 4, 2);
  CHECK(d.K == 4);
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) CHECK(d.at(i, j) == (i == j ? 0 : 2));
  }
  CHECK(d.d_total() == 2 * 12);
  CHECK(d.node_total(1) == 6);
  CHECK(d.pairs().size() == 6);
  CHECK(d.pairs().front() == PairId{1, 2});
  CHECK(d.pairs().back() == PairId{3, 4});
}

TEST_CASE("disjoint-pairs pattern couples i with K+1-i") {
  const DataSwitchMatrix d = make_pattern(Pattern::Pairwise, 6, 3);
  CHECK(d.at(1, 6) == 3);
  CHECK(d.at(2, 5) == 3);
  CHECK(d.at(3, 4) == 3);
  CHECK(d.at(1, 2) == 0);
  CHECK(d.d_total() == 2 * 9);
  CHECK(d.pairs() == std::vector<PairId>{{1, 6}, {2, 5}, {3, 4}});
  CHECK_THROWS_AS(make_pattern(Pattern::Pairwise, 5, 1), std::invalid_argument);
}

TEST_CASE("cross-group pattern exchanges only across the two halves") {
  const DataSwitchMatrix d = make_pattern(Pattern::X, 4, 1);
  CHECK(d.at(1, 3) == 1);
  CHECK(d.at(1, 4) == 1);
  CHECK(d.at(2, 3) == 1);
  CHECK(d.at(2, 4) == 1);
  CHECK(d.at(1, 2) == 0);
  CHECK(d.at(3, 4) == 0);
  CHECK(d.d_total() == 8);
}

TEST_CASE("clustered pattern exchanges fully within each cluster") {
  const DataSwitchMatrix d = make_pattern(Pattern::LCluster, 6, 1, 2);
  CHECK(d.at(1, 2) == 1);
  CHECK(d.at(1, 3) == 1);
  CHECK(d.at(4, 5) == 1);
  CHECK(d.at(1, 4) == 0);
  CHECK(d.at(3, 6) == 0);
  CHECK(d.d_total() == 2 * 6);
  CHECK_THROWS_AS(make_pattern(Pattern::LCluster, 6, 1, 4), std::invalid_argument);
}

TEST_CASE("stream matrix validation rejects asymmetric input") {
  DataSwitchMatrix d = make_pattern(Pattern::Y, 4, 1);
  d.at(1, 2) = 3;  // leaves d.at(2,1) == 1
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
  d.at(2, 1) = 3;
  CHECK_NOTHROW(d.validate());
  d.at(3, 3) = 1;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("channel sampling: shapes, determinism, node independence") {
  const SystemConfig cfg{4, 3, 7};
  const ChannelRealization ch = sample_channels(cfg, 99);
  REQUIRE(ch.H.size() == 4);
  REQUIRE(ch.G.size() == 4);
  CHECK(ch.H[0].rows() == 7);
  CHECK(ch.H[0].cols() == 3);
  CHECK(ch.G[0].rows() == 3);
  CHECK(ch.G[0].cols() == 7);
  CHECK(ch.seed == 99);

  const ChannelRealization again = sample_channels(cfg, 99);
  CHECK(ch.H[2] == again.H[2]);
  CHECK(ch.G[1] == again.G[1]);
  CHECK(ch.H[0] != ch.H[1]);
  CHECK(ch.H[0] != sample_channels(cfg, 100).H[0]);
}
