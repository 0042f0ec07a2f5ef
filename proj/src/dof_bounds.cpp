#include "gsalign/dof_bounds.hpp"

#include <stdexcept>

namespace gsalign {

namespace {
void check_mn(double M, double N) {
  if (M <= 0.0 || N <= 0.0) throw std::invalid_argument("bound: M, N must be > 0");
}
}  // namespace

double cutset_bound(int K, double M, double N) {
  if (K < 2) throw std::invalid_argument("cutset_bound: K must be >= 2");
  check_mn(M, N);
  return std::min(K * M, 2.0 * N);
}

double y_bound(int K, double M, double N) {
  if (K < 4) throw std::invalid_argument("y_bound: piecewise form needs K >= 4");
  check_mn(M, N);
  const double r = N / M;
  const double c = static_cast<double>(K) * (K - 1);  // K(K-1)
  if (r <= (2.0 * c) / (c + 2.0)) return 2.0 * N;
  if (r > (K * K - 3.0 * K + 3.0) / (K - 1.0)) return K * M;
  for (int beta = 2; beta <= K - 2; ++beta) {
    const double denom = c + beta * (beta - 1.0);
    const double flat_lo = beta * (c + (beta - 1.0) * (beta - 2.0)) / denom;
    const double slope_hi = (beta + 1.0) * denom / (c + (beta + 1.0) * beta);
    if (r > flat_lo && r <= beta) return 2.0 * beta * c * M / denom;
    if (r > beta && r <= slope_hi) return 2.0 * c * N / denom;
  }
  throw std::logic_error("y_bound: ratio fell through the branch intervals");
}

double pairwise_bound(int K, double M, double N) {
  if (K < 4 || K % 2 != 0) {
    throw std::invalid_argument("pairwise_bound: K must be even and >= 4");
  }
  check_mn(M, N);
  const double r = N / M;
  if (r <= 2.0 * K / (K + 2.0)) return 2.0 * N;
  if (r > K - 1.0) return K * M;
  for (int beta = 2; beta <= K - 2; beta += 2) {
    const double flat_lo = beta * (K + beta - 2.0) / (K + beta);
    const double slope_hi = (beta + 2.0) * (K + beta) / (K + beta + 2.0);
    if (r > flat_lo && r <= beta) return 2.0 * beta * K * M / (K + beta);
    if (r > beta && r <= slope_hi) return 2.0 * K * N / (K + beta);
  }
  throw std::logic_error("pairwise_bound: ratio fell through the branch intervals");
}

double x_bound(int K, double M, double N) {
  if (K < 4 || K % 2 != 0) {
    throw std::invalid_argument("x_bound: K must be even and >= 4");
  }
  check_mn(M, N);
  const double r = N / M;
  const double K2 = static_cast<double>(K) * K;
  if (r <= 2.0 * K2 / (K2 + 4.0)) return 2.0 * N;
  if (r > (K2 - 2.0 * K + 2.0) / K) return K * M;
  for (int beta = 2; beta <= K - 2; beta += 2) {
    const double denom = K2 + beta * static_cast<double>(beta);
    const double flat_lo = (K2 + (beta - 2.0) * (beta - 2.0)) * beta / denom;
    const double slope_hi = denom * (beta + 2.0) / (K2 + (beta + 2.0) * (beta + 2.0));
    if (r > flat_lo && r <= beta) return 2.0 * K2 * beta * M / denom;
    if (r > beta && r <= slope_hi) return 2.0 * K2 * N / denom;
  }
  throw std::logic_error("x_bound: ratio fell through the branch intervals");
}

double model_bound(Pattern model, int K, double M, double N) {
  switch (model) {
    case Pattern::Y: return y_bound(K, M, N);
    case Pattern::Pairwise: return pairwise_bound(K, M, N);
    case Pattern::X: return x_bound(K, M, N);
    default: throw std::invalid_argument("model_bound: no piecewise bound for this model");
  }
}

}  // namespace gsalign
