#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsalign/relay_bc.hpp"

using namespace gsalign;

namespace {

struct Setup {
  ChannelRealization ch;
  DataSwitchMatrix D;
  GsaDesign mac;
  BcScheme bc;
};

Setup make_setup(const SystemConfig& cfg, Pattern model, int streams,
                 std::uint64_t seed) {
  Setup s{sample_channels(cfg, seed), make_pattern(model, cfg.K, streams), {}, {}};
  s.mac = design_for_target(s.ch, s.D, cfg.M, cfg.N, model);
  s.bc = build_bc(s.ch, s.mac, model);
  return s;
}

Vector coded_symbols(const Setup& s, std::uint64_t seed) {
  Vector v(s.mac.served.d_total() / 2);
  int off = 0;
  for (const auto& p : s.mac.pair_order) {
    const int d = s.mac.served.at(p.first, p.second);
    v.segment(off, d) = sample_complex_gaussian(d, 1, seed + off).col(0);
    off += d;
  }
  return v;
}

}  // namespace

TEST_CASE("nulling precoder: each block invisible to non-participating users") {
  const Setup s = make_setup({4, 3, 7}, Pattern::Y, 1, 11);
  REQUIRE_FALSE(s.bc.dual);
  REQUIRE(s.bc.U.rows() == 7);
  REQUIRE(s.bc.U.cols() == 6);
  int off = 0;
  for (const auto& [i, j] : s.bc.pair_order) {
    const int d = s.bc.served.at(i, j);
    const Matrix block = s.bc.U.middleCols(off, d);
    for (int k = 1; k <= 4; ++k) {
      if (k == i || k == j) continue;
      CHECK(spectral_norm(s.ch.G[k - 1] * block) <
            1e-9 * spectral_norm(s.ch.G[k - 1]) * spectral_norm(block));
    }
    off += d;
  }
}

TEST_CASE("nulling precoder reports the antenna deficit") {
  const ChannelRealization ch = sample_channels(SystemConfig{6, 3, 8}, 12);
  const DataSwitchMatrix D = make_pattern(Pattern::Pairwise, 6, 2);
  CHECK_THROWS_WITH_AS(build_u_nulling(ch, D),
                       doctest::Contains("null space budget"), GsaError);
}

TEST_CASE("relay transmit scaling is deterministic and invertible") {
  const Setup s = make_setup({4, 3, 7}, Pattern::Y, 1, 13);
  const Vector sym = coded_symbols(s, 500);
  const Vector x = relay_transmit(s.bc, sym);
  CHECK(x.size() == 7);
  CHECK((x * relay_scale(s.bc) - s.bc.U * sym).norm() < 1e-12 * sym.norm());
  CHECK_THROWS_AS(relay_transmit(s.bc, Vector::Zero(5)), std::invalid_argument);
}

TEST_CASE("noiseless decode round trip on the nulling route") {
  const Setup s = make_setup({4, 3, 7}, Pattern::Y, 1, 14);
  const Vector coded = coded_symbols(s, 900);
  const Vector x_r = relay_transmit(s.bc, coded);
  for (int k = 1; k <= 4; ++k) {
    const auto my_pairs = pairs_of_user(s.D, k);
    int total = 0;
    for (const auto& p : my_pairs) total += s.D.at(p.first, p.second);
    const Vector own = Vector::Zero(total);  // recover the sums themselves
    const Vector got = user_decode(s.bc, s.ch, k, s.ch.G[k - 1] * x_r, own);
    int off = 0;
    for (const auto& p : my_pairs) {
      const int d = s.D.at(p.first, p.second);
      const Vector want = coded.segment(s.mac.block_offset(p), d);
      CHECK((got.segment(off, d) - want).norm() < 1e-8 * want.norm());
      off += d;
    }
  }
}

TEST_CASE("dual route engages when nulling has no antenna budget") {
  // K=6, M=3, N=8: N - (K-2)M < 0, so the transposed-downlink construction
  // must carry the broadcast phase.
  const Setup s = make_setup({6, 3, 8}, Pattern::Pairwise, 2, 15);
  REQUIRE(s.bc.dual);
  REQUIRE(s.bc.U.rows() == 8);
  REQUIRE(s.bc.U.cols() == 6);

  const Vector coded = coded_symbols(s, 901);
  const Vector x_r = relay_transmit(s.bc, coded);
  for (int k = 1; k <= 6; ++k) {
    const auto my_pairs = pairs_of_user(s.D, k);
    REQUIRE(my_pairs.size() == 1);
    const int d = s.D.at(my_pairs[0].first, my_pairs[0].second);
    const Vector got =
        user_decode(s.bc, s.ch, k, s.ch.G[k - 1] * x_r, Vector::Zero(d));
    const Vector want = coded.segment(s.mac.block_offset(my_pairs[0]), d);
    CHECK((got - want).norm() < 1e-8 * want.norm());
  }
}

TEST_CASE("own-symbol subtraction") {
  const Setup s = make_setup({4, 3, 7}, Pattern::Y, 1, 16);
  const Vector coded = coded_symbols(s, 902);
  const Vector x_r = relay_transmit(s.bc, coded);
  const int k = 2;
  const auto my_pairs = pairs_of_user(s.D, k);
  Vector own = sample_complex_gaussian(static_cast<int>(my_pairs.size()), 1, 77).col(0);
  const Vector with_own = user_decode(s.bc, s.ch, k, s.ch.G[k - 1] * x_r, own);
  const Vector without = user_decode(s.bc, s.ch, k, s.ch.G[k - 1] * x_r,
                                     Vector::Zero(own.size()));
  CHECK((with_own + own - without).norm() < 1e-10);
}

TEST_CASE("user list helper") {
  const DataSwitchMatrix D = make_pattern(Pattern::Pairwise, 6, 1);
  CHECK(pairs_of_user(D, 1) == std::vector<PairId>{{1, 6}});
  CHECK(pairs_of_user(D, 4) == std::vector<PairId>{{3, 4}});
  const DataSwitchMatrix y = make_pattern(Pattern::Y, 4, 1);
  CHECK(pairs_of_user(y, 3).size() == 3);
}
