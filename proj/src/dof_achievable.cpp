#include "gsalign/dof_achievable.hpp"

#include <numeric>
#include <stdexcept>

namespace gsalign {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(__LONG_LONG_MAX__)) return -1;
  }
  return static_cast<long long>(r);
}

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  if (den < 0) { num = -num; den = -den; }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return Rational{num, den, true};
}

Rational rational_add(const Rational& a, const Rational& b) {
  if (!a.exact || !b.exact) return Rational{0, 1, false};
  const __int128 num = static_cast<__int128>(a.num) * b.den +
                       static_cast<__int128>(b.num) * a.den;
  const __int128 den = static_cast<__int128>(a.den) * b.den;
  const __int128 lim = __LONG_LONG_MAX__;
  if (num > lim || num < -lim || den > lim) return Rational{0, 1, false};
  return make_rational(static_cast<long long>(num), static_cast<long long>(den));
}

namespace {

DofPlanePoint from_rationals(const Rational& ratio, const Rational& dof,
                             double ratio_d, double dof_d) {
  DofPlanePoint p;
  p.ratio = ratio;
  p.dof_per_m = dof;
  p.ratio_d = ratio_d;
  p.dof_per_m_d = dof_d;
  return p;
}

/// Q_beta with ratio = beta + extra_num / (t * combos) and dof = dof_num / t.
DofPlanePoint beta_point(int beta, long long extra_num, long long t,
                         long long combos_ll, double combos_d,
                         long long dof_num) {
  Rational ratio{0, 1, false};
  if (combos_ll > 0) {
    const __int128 den = static_cast<__int128>(t) * combos_ll;
    if (den <= __LONG_LONG_MAX__) {
      ratio = rational_add(make_rational(beta, 1),
                           make_rational(extra_num, static_cast<long long>(den)));
    }
  }
  const Rational dof = make_rational(dof_num, t);
  const double ratio_d = beta + static_cast<double>(extra_num) / (t * combos_d);
  return from_rationals(ratio, dof, ratio_d, dof.value());
}

}  // namespace

std::vector<DofPlanePoint> y_points(int K) {
  if (K < 4) throw std::invalid_argument("y_points: K must be >= 4");
  std::vector<DofPlanePoint> pts;
  const long long c = static_cast<long long>(K) * (K - 1);  // K(K-1)
  const Rational q1r = make_rational(2 * c, c + 2);
  const Rational q1d = make_rational(4 * c, c + 2);
  pts.push_back(from_rationals(q1r, q1d, q1r.value(), q1d.value()));
  for (int beta = 2; beta <= K - 2; ++beta) {
    const long long t = 2 + c - static_cast<long long>(beta) * (beta - 1);
    pts.push_back(beta_point(beta, 2 * c, t, binomial_ll(K, beta),
                             binomial(K, beta), 4 * c));
  }
  return pts;
}

std::vector<DofPlanePoint> pairwise_points(int K) {
  if (K < 4 || K % 2 != 0) {
    throw std::invalid_argument("pairwise_points: K must be even and >= 4");
  }
  std::vector<DofPlanePoint> pts;
  const Rational q1r = make_rational(2 * K, K + 2);
  const Rational q1d = make_rational(4 * K, K + 2);
  pts.push_back(from_rationals(q1r, q1d, q1r.value(), q1d.value()));
  for (int beta = 2; beta <= K - 2; beta += 2) {
    const long long t = 2 + K - beta;
    pts.push_back(beta_point(beta, 2 * K, t, binomial_ll(K / 2, beta / 2),
                             binomial(K / 2, beta / 2), 4 * K));
  }
  return pts;
}

std::vector<DofPlanePoint> x_points(int K) {
  if (K < 4 || K % 2 != 0) {
    throw std::invalid_argument("x_points: K must be even and >= 4");
  }
  std::vector<DofPlanePoint> pts;
  const long long K2 = static_cast<long long>(K) * K;
  const Rational q1r = make_rational(2 * K2, K2 + 4);
  const Rational q1d = make_rational(4 * K2, K2 + 4);
  pts.push_back(from_rationals(q1r, q1d, q1r.value(), q1d.value()));
  for (int beta = 2; beta <= K - 2; beta += 2) {
    const long long t = 4 + K2 - static_cast<long long>(beta) * beta;
    const long long c = binomial_ll(K / 2, beta / 2);
    const long long c2 = (c > 0 && c <= 3037000499LL) ? c * c : -1;
    const double cd = binomial(K / 2, beta / 2);
    pts.push_back(beta_point(beta, 2 * K2, t, c2, cd * cd, 4 * K2));
  }
  return pts;
}

std::vector<DofPlanePoint> model_points(Pattern model, int K) {
  switch (model) {
    case Pattern::Y: return y_points(K);
    case Pattern::Pairwise: return pairwise_points(K);
    case Pattern::X: return x_points(K);
    default: throw std::invalid_argument("model_points: no point family for this model");
  }
}

double achievable_dof(const std::vector<DofPlanePoint>& points, double M, double N) {
  if (points.empty()) throw std::invalid_argument("achievable_dof: no points");
  if (M <= 0.0 || N <= 0.0) throw std::invalid_argument("achievable_dof: M, N must be > 0");
  double best = 0.0;
  for (const auto& p : points) {
    const double v = (N >= p.ratio_d * M) ? p.dof_per_m_d * M
                                          : (p.dof_per_m_d / p.ratio_d) * N;
    best = std::max(best, v);
  }
  return best;
}

double asymptotic_dof(double ratio) {
  if (ratio <= 0.0) throw std::invalid_argument("asymptotic_dof: ratio must be > 0");
  if (ratio <= 2.0) return 2.0 * ratio;
  if (ratio <= 4.0) return 4.0;
  return ratio;
}

bool theorem8_feasible(const DataSwitchMatrix& D, int M, int N) {
  D.validate();
  int max_node = 0;
  for (int i = 1; i <= D.K; ++i) max_node = std::max(max_node, D.node_total(i));
  return M >= max_node && N >= (D.K - 2) * M + D.max_entry();
}

double lcluster_threshold(int K_prime, int L, int M) {
  if (K_prime < 2 || L < 1 || M < 1) {
    throw std::invalid_argument("lcluster_threshold: bad arguments");
  }
  const int K = L * K_prime;
  return static_cast<double>(M) *
         ((K_prime - 1.0) * (K - 2.0) + 1.0) / (K_prime - 1.0);
}

}  // namespace gsalign
