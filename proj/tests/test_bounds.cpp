#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsalign/dof_bounds.hpp"

using namespace gsalign;

TEST_CASE("cutset bound") {
  CHECK(cutset_bound(4, 3, 7) == 12.0);
  CHECK(cutset_bound(4, 3, 5) == 10.0);
  CHECK_THROWS_AS(cutset_bound(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(cutset_bound(4, 0.0, 1), std::invalid_argument);
}

TEST_CASE("full-exchange bound, K=4: all four branch values") {
  // 2N branch up to ratio 12/7, flat 24/7 on (12/7, 2], slope 12N/7 on
  // (2, 7/3], then KM.
  CHECK(y_bound(4, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(y_bound(4, 1.0, 12.0 / 7.0) == doctest::Approx(24.0 / 7.0));
  CHECK(y_bound(4, 1.0, 1.9) == doctest::Approx(24.0 / 7.0));
  CHECK(y_bound(4, 1.0, 2.0) == doctest::Approx(24.0 / 7.0));
  CHECK(y_bound(4, 1.0, 2.2) == doctest::Approx(12.0 * 2.2 / 7.0));
  CHECK(y_bound(4, 1.0, 7.0 / 3.0) == doctest::Approx(4.0));
  CHECK(y_bound(4, 1.0, 3.0) == doctest::Approx(4.0));
  CHECK(y_bound(4, 1.0, 100.0) == doctest::Approx(4.0));
}

TEST_CASE("disjoint-pairs bound, K=6: both beta pieces") {
  CHECK(pairwise_bound(6, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(pairwise_bound(6, 1.0, 1.5) == doctest::Approx(3.0));   // 2N knot
  CHECK(pairwise_bound(6, 1.0, 2.0) == doctest::Approx(3.0));   // beta=2 flat
  CHECK(pairwise_bound(6, 1.0, 3.0) == doctest::Approx(4.5));   // beta=2 slope
  CHECK(pairwise_bound(6, 1.0, 3.2) == doctest::Approx(4.8));   // beta=4 flat knot
  CHECK(pairwise_bound(6, 1.0, 4.0) == doctest::Approx(4.8));
  CHECK(pairwise_bound(6, 1.0, 4.5) == doctest::Approx(5.4));   // beta=4 slope
  CHECK(pairwise_bound(6, 1.0, 5.0) == doctest::Approx(6.0));   // KM knot, K-1
  CHECK(pairwise_bound(6, 1.0, 9.0) == doctest::Approx(6.0));
  CHECK_THROWS_AS(pairwise_bound(5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("cross-group bound, K=4") {
  CHECK(x_bound(4, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(x_bound(4, 1.0, 1.6) == doctest::Approx(3.2));    // 2N knot, 2K^2/(K^2+4)
  CHECK(x_bound(4, 1.0, 2.0) == doctest::Approx(3.2));    // beta=2 flat
  CHECK(x_bound(4, 1.0, 2.25) == doctest::Approx(3.6));   // beta=2 slope
  CHECK(x_bound(4, 1.0, 2.5) == doctest::Approx(4.0));    // KM knot
  CHECK(x_bound(4, 1.0, 4.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(x_bound(3, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("bounds are homogeneous of degree 1 in (M, N)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ratio(0.05, 10.0);
  std::uniform_real_distribution<double> scale(0.1, 20.0);
  for (int trial = 0; trial < 300; ++trial) {
    const double m = scale(rng), n = m * ratio(rng), s = scale(rng);
    for (int K : {5, 6, 8}) {
      CHECK(y_bound(K, s * m, s * n) == doctest::Approx(s * y_bound(K, m, n)));
      CHECK(pairwise_bound(K + (K % 2), s * m, s * n) ==
            doctest::Approx(s * pairwise_bound(K + (K % 2), m, n)));
      CHECK(x_bound(K + (K % 2), s * m, s * n) ==
            doctest::Approx(s * x_bound(K + (K % 2), m, n)));
    }
  }
}

TEST_CASE("bounds never exceed the cut-set bound") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> ratio(0.05, 12.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double n = ratio(rng);
    for (int K : {4, 6, 8, 10}) {
      const double cut = cutset_bound(K, 1.0, n) + 1e-12;
      CHECK(y_bound(K, 1.0, n) <= cut);
      CHECK(pairwise_bound(K, 1.0, n) <= cut);
      CHECK(x_bound(K, 1.0, n) <= cut);
    }
  }
}

TEST_CASE("bounds are continuous at every branch knot") {
  const double eps = 1e-12;
  auto continuous_at = [&](auto f, int K, double r) {
    if (r <= eps) return;
    CHECK(f(K, 1.0, r - eps) == doctest::Approx(f(K, 1.0, r + eps)).epsilon(1e-9));
  };
  for (int K = 4; K <= 9; ++K) {
    const double c = static_cast<double>(K) * (K - 1);
    continuous_at(y_bound, K, 2.0 * c / (c + 2.0));
    continuous_at(y_bound, K, (K * K - 3.0 * K + 3.0) / (K - 1.0));
    for (int b = 2; b <= K - 2; ++b) {
      const double denom = c + b * (b - 1.0);
      continuous_at(y_bound, K, b * (c + (b - 1.0) * (b - 2.0)) / denom);
      continuous_at(y_bound, K, static_cast<double>(b));
      continuous_at(y_bound, K, (b + 1.0) * denom / (c + (b + 1.0) * b));
    }
    if (K % 2 != 0) continue;
    continuous_at(pairwise_bound, K, 2.0 * K / (K + 2.0));
    continuous_at(pairwise_bound, K, K - 1.0);
    const double K2 = static_cast<double>(K) * K;
    continuous_at(x_bound, K, 2.0 * K2 / (K2 + 4.0));
    continuous_at(x_bound, K, (K2 - 2.0 * K + 2.0) / K);
    for (int b = 2; b <= K - 2; b += 2) {
      continuous_at(pairwise_bound, K, b * (K + b - 2.0) / (K + b));
      continuous_at(pairwise_bound, K, static_cast<double>(b));
      continuous_at(pairwise_bound, K, (b + 2.0) * (K + b) / (K + b + 2.0));
      const double denom = K2 + b * static_cast<double>(b);
      continuous_at(x_bound, K, (K2 + (b - 2.0) * (b - 2.0)) * b / denom);
      continuous_at(x_bound, K, static_cast<double>(b));
      continuous_at(x_bound, K, denom * (b + 2.0) / (K2 + (b + 2.0) * (b + 2.0)));
    }
  }
}

TEST_CASE("bounds are nondecreasing in N") {
  for (int K : {4, 6, 8}) {
    double prev_y = 0, prev_p = 0, prev_x = 0;
    for (int i = 1; i <= 1000; ++i) {
      const double n = 0.01 * i;
      const double y = y_bound(K, 1.0, n);
      const double p = pairwise_bound(K, 1.0, n);
      const double x = x_bound(K, 1.0, n);
      CHECK(y >= prev_y - 1e-12);
      CHECK(p >= prev_p - 1e-12);
      CHECK(x >= prev_x - 1e-12);
      prev_y = y; prev_p = p; prev_x = x;
    }
  }
}
