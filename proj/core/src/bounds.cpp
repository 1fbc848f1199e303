#include "drcskit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace drcskit {

namespace {

constexpr double kPi = std::numbers::pi;

void check_positive(long v, const char* what) {
  if (v < 1) {
    throw ParamError("BadParameter",
                     std::string(what) + " must be >= 1, got " +
                         std::to_string(v));
  }
}

void check_weights(const WeightVector& w) {
  double sum = 0.0;
  for (double x : w.w) {
    if (x < -1e-12) {
      throw ParamError("BadWeights", "negative weight " + std::to_string(x));
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ParamError("BadWeights",
                     "weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

// min(|t-s|, 2N-1-|t-s|); the circulant kernel of the quadratic form.
double tau_kernel(long s, long t, long n_len) {
  const long d = std::labs(t - s);
  return static_cast<double>(std::min(d, 2 * n_len - 1 - d));
}

// Clamp a theta^2 value: negative analytic results become 0 and are flagged
// vacuous so parameter sweeps never abort.
void finish(BoundReport& r, double theta_sq) {
  if (theta_sq < 0.0) {
    r.vacuous = true;
    theta_sq = 0.0;
  }
  r.theta_sq = theta_sq;
  r.theta = std::sqrt(theta_sq);
}

double gamma_of(long K, long M, long N, long Zy) {
  const double x = 1.0 - static_cast<double>(K) * Zy /
                             (static_cast<double>(M) * N * N);
  return std::acos(x);
}

}  // namespace

double WeightVector::sum() const {
  double s = 0.0;
  for (double x : w) s += x;
  return s;
}

double WeightVector::sum_sq() const {
  double s = 0.0;
  for (double x : w) s += x * x;
  return s;
}

double CombinedBound::lhs(double theta_a, double theta_c) const {
  return coeff_a * theta_a * theta_a + coeff_c * theta_c * theta_c;
}

bool CombinedBound::holds(double theta_a, double theta_c,
                          double rel_tol) const {
  return lhs(theta_a, theta_c) >= rhs - rel_tol * std::abs(rhs);
}

WeightVector weights_uniform_full(long n_len) {
  check_positive(n_len, "N");
  const long d = 2 * n_len - 1;
  return {std::vector<double>(static_cast<size_t>(d),
                              1.0 / static_cast<double>(d))};
}

WeightVector weights_uniform_truncated(long m, long d) {
  check_positive(d, "D");
  if (m < 1 || m > d) {
    throw ParamError("BadM", "m = " + std::to_string(m) +
                                 " outside [1, " + std::to_string(d) + "]");
  }
  WeightVector w{std::vector<double>(static_cast<size_t>(d), 0.0)};
  for (long r = 0; r < m; ++r) {
    w.w[static_cast<size_t>(r)] = 1.0 / static_cast<double>(m);
  }
  return w;
}

WeightVector weights_chebyshev(long k_sets, long m_seqs, long n_len, long zy,
                               long m, long d) {
  check_positive(k_sets, "K");
  check_positive(m_seqs, "M");
  check_positive(n_len, "N");
  check_positive(zy, "Zy");
  check_positive(d, "D");
  if (static_cast<double>(k_sets) * zy >
      static_cast<double>(m_seqs) * n_len * n_len) {
    throw ParamError("GammaDomain", "requires K Zy <= M N^2");
  }
  const double gamma = gamma_of(k_sets, m_seqs, n_len, zy);
  if (m < 2 || m % 2 != 0) {
    throw ParamError("BadM",
                     "m = " + std::to_string(m) + " must be even and >= 2");
  }
  if (m > d) {
    throw ParamError("BadM", "m = " + std::to_string(m) + " exceeds D = " +
                                 std::to_string(d));
  }
  if (static_cast<double>(m) * gamma > kPi + gamma + 1e-12) {
    throw ParamError("BadM", "m gamma exceeds pi + gamma");
  }
  const double gamma0 = (kPi - m * gamma + gamma) / 2.0;
  const double scale = std::sin(gamma / 2.0) / std::sin(m * gamma / 2.0);
  WeightVector w{std::vector<double>(static_cast<size_t>(d), 0.0)};
  for (long r = 0; r < m; ++r) {
    w.w[static_cast<size_t>(r)] = scale * std::sin(gamma0 + r * gamma);
  }
  return w;
}

double quadratic_form(const WeightVector& w, double a, long n_len) {
  check_positive(n_len, "N");
  const long d = static_cast<long>(w.w.size());
  if (d > 2 * n_len - 1) {
    throw ParamError("WeightLength",
                     "weight vector longer than 2N-1 = " +
                         std::to_string(2 * n_len - 1));
  }
  double diag = 0.0;
  double off = 0.0;
  for (long s = 0; s < d; ++s) {
    const double ws = w.w[static_cast<size_t>(s)];
    diag += ws * ws;
    if (ws == 0.0) continue;
    for (long t = s + 1; t < d; ++t) {
      off += tau_kernel(s, t, n_len) * ws * w.w[static_cast<size_t>(t)];
    }
  }
  return a * diag + 2.0 * off;
}

BoundReport bound_shen(long K, long M, long N, long Zx, long Zy) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  if (Zx < 1 || Zx > N || Zy < 1 || Zy > N) {
    throw ParamError("BadZone", "requires 1 <= Zx, Zy <= N");
  }
  BoundReport r;
  r.name = "shen";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = Zx;
  r.Zy = Zy;
  const double num = static_cast<double>(K) * Zx * Zy /
                         (static_cast<double>(M) * (N + Zx - 1)) -
                     1.0;
  const double den = static_cast<double>(K) * Zx - 1.0;
  if (den <= 0.0 || num < 0.0) {
    r.vacuous = true;
    return r;
  }
  const double theta =
      static_cast<double>(M) * N / std::sqrt(static_cast<double>(Zy)) *
      std::sqrt(num / den);
  r.theta = theta;
  r.theta_sq = theta * theta;
  return r;
}

namespace {

// Shared engine behind the thm2 and thm3 bounds; they differ only in the
// declared zone and the weight-support check done by the caller.
BoundReport weighted_bound(const char* name, long K, long M, long N, long Zx,
                           long Zy, const WeightVector& w, bool with_weak) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zy, "Zy");
  if (Zy > N) throw ParamError("BadZone", "requires Zy <= N");
  check_weights(w);

  BoundReport r;
  r.name = name;
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = Zx;
  r.Zy = Zy;

  const double sw2 = w.sum_sq();
  const double tq = quadratic_form(w, 0.0, N);  // kernel part only
  const double a_strong = static_cast<double>(N) * (static_cast<double>(M) * N - Zy) /
                          (static_cast<double>(K) * Zy);

  r.combined = CombinedBound{
      1.0 - sw2, static_cast<double>(K - 1),
      static_cast<double>(K) * M * (N - tq) -
          static_cast<double>(M) * M * N * N / Zy * sw2};

  const double denom = 1.0 - sw2 / static_cast<double>(K);
  if (denom <= 0.0) {
    r.vacuous = true;
    if (with_weak) r.theta_sq_weak = 0.0;
    return r;
  }
  finish(r, static_cast<double>(M) *
                (N - (a_strong * sw2 + tq) / denom));
  if (with_weak) {
    const double a_weak = static_cast<double>(M) * N * N /
                          (static_cast<double>(K) * Zy);
    r.theta_sq_weak =
        std::max(0.0, static_cast<double>(M) * (N - (a_weak * sw2 + tq)));
  }
  return r;
}

}  // namespace

BoundReport bound_thm2(long K, long M, long N, long Zy,
                       const WeightVector& w) {
  if (static_cast<long>(w.w.size()) > 2 * N - 1) {
    throw ParamError("WeightLength",
                     "weight vector longer than 2N-1 = " +
                         std::to_string(2 * N - 1));
  }
  return weighted_bound("thm2", K, M, N, N, Zy, w, false);
}

BoundReport bound_thm3(long K, long M, long N, long Zx, long Zy,
                       const WeightVector& w) {
  if (Zx < 1 || Zx > N) throw ParamError("BadZone", "requires 1 <= Zx <= N");
  for (size_t rdx = static_cast<size_t>(Zx); rdx < w.w.size(); ++rdx) {
    if (w.w[rdx] != 0.0) {
      throw ParamError("WeightSupport",
                       "nonzero weight at delay " + std::to_string(rdx) +
                           " >= Zx = " + std::to_string(Zx));
    }
  }
  return weighted_bound("thm3", K, M, N, Zx, Zy, w, true);
}

BoundReport bound_uniform_full(long K, long M, long N, long Zy) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zy, "Zy");
  if (Zy > N) throw ParamError("BadZone", "requires Zy <= N");
  BoundReport r;
  r.name = "uniform";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = N;
  r.Zy = Zy;
  const double mn = static_cast<double>(M) * N;
  const double ratio = static_cast<double>(K) * Zy / M - 1.0;
  r.combined = CombinedBound{
      static_cast<double>(2 * N - 2) / (2 * N - 1),
      static_cast<double>(K - 1),
      mn * mn * ratio / (static_cast<double>(2 * N - 1) * Zy)};
  finish(r, mn * mn * ratio /
                (static_cast<double>(K * (2 * N - 1) - 1) * Zy));
  return r;
}

BoundReport bound_truncated(long K, long M, long N, long Zy, long m) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zy, "Zy");
  if (Zy > N) throw ParamError("BadZone", "requires Zy <= N");
  if (m < 1 || m > N) {
    throw ParamError("BadM", "m = " + std::to_string(m) +
                                 " outside [1, N = " + std::to_string(N) +
                                 "]");
  }
  BoundReport r;
  r.name = "trunc";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = m;
  r.Zy = Zy;
  r.m = m;
  const double km = static_cast<double>(K) * M;
  const double mn = static_cast<double>(M) * N;
  const double value =
      (3.0 * m * km * N * Zy - km * (static_cast<double>(m) * m - 1.0) * Zy -
       3.0 * mn * mn) /
      (3.0 * (static_cast<double>(m) * K - 1.0) * Zy);
  finish(r, value);
  return r;
}

BoundReport bound_lev(long K, long M, long N, long Zy) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zy, "Zy");
  BoundReport r;
  r.name = "lev";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = N;
  r.Zy = Zy;
  if (static_cast<double>(K) * Zy <= 3.0 * M) {
    r.applicable = false;
    r.vacuous = true;
    return r;
  }
  const double root = std::sqrt(static_cast<double>(M) /
                                (3.0 * static_cast<double>(K) * Zy));
  r.combined = CombinedBound{
      1.0 - static_cast<double>(K) * Zy /
                (3.0 * static_cast<double>(M) * N * N),
      static_cast<double>(K - 1),
      static_cast<double>(K) * M * (N - 2.0 * N * root)};
  finish(r, static_cast<double>(M) * N * (1.0 - 2.0 * root));
  return r;
}

BoundReport bound_sin(long K, long M, long N, long Zx, long Zy, long m) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zx, "Zx");
  check_positive(Zy, "Zy");
  if (static_cast<double>(K) * Zy >
      static_cast<double>(M) * N * N) {
    throw ParamError("GammaDomain", "requires K Zy <= M N^2");
  }
  const double gamma = gamma_of(K, M, N, Zy);
  const double m_cap = std::min(static_cast<double>(Zx) + 1.0,
                                kPi / gamma + 1.0);
  if (m < 1 || static_cast<double>(m) >= m_cap) {
    throw ParamError("BadM", "m = " + std::to_string(m) +
                                 " outside [1, min(Zx+1, pi/gamma+1))");
  }
  BoundReport r;
  r.name = "sin";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = Zx;
  r.Zy = Zy;
  r.m = m;
  r.gamma = gamma;
  r.gamma0 = (kPi - m * gamma + gamma) / 2.0;
  const double s_m = std::sin(m * gamma / 2.0);
  const double s_m2 = std::sin((m - 2) * gamma / 2.0);
  const double value = static_cast<double>(N) * M -
                       (static_cast<double>(m) - 1.0) / 2.0 -
                       (s_m - s_m2) / (2.0 * (1.0 - std::cos(gamma)) * s_m);
  r.combined =
      CombinedBound{1.0 / static_cast<double>(K),
                    static_cast<double>(K - 1) / static_cast<double>(K),
                    std::max(value, 0.0)};
  finish(r, value);
  return r;
}

BoundReport bound_c5(long K, long M, long N, long Zx, long Zy) {
  check_positive(K, "K");
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zx, "Zx");
  check_positive(Zy, "Zy");
  BoundReport r;
  r.name = "c5";
  r.K = K;
  r.M = M;
  r.N = N;
  r.Zx = Zx;
  r.Zy = Zy;
  const double kzy = static_cast<double>(K) * Zy;
  if (kzy < 5.0 * M || kzy > static_cast<double>(M) * N * N) {
    r.applicable = false;
    r.vacuous = true;
    return r;
  }
  const double gamma = gamma_of(K, M, N, Zy);
  r.gamma = gamma;
  if (static_cast<double>(Zx) <= kPi / gamma) {
    r.applicable = false;
    r.vacuous = true;
    return r;
  }
  const double ceil_term =
      std::ceil(kPi * N / std::sqrt(8.0 * kzy / M));
  const double value = static_cast<double>(M) * (N - ceil_term);
  r.combined =
      CombinedBound{1.0 / static_cast<double>(K),
                    static_cast<double>(K - 1) / static_cast<double>(K),
                    std::max(value, 0.0)};
  finish(r, value);
  return r;
}

long eig_kmax(long M, long N, long Zy) {
  check_positive(M, "M");
  check_positive(N, "N");
  check_positive(Zy, "Zy");
  if (Zy > M * N) throw ParamError("BadZone", "requires Zy <= M N");
  const double s = std::sin(kPi / (2.0 * (2 * N - 1)));
  return static_cast<long>(std::floor(
      4.0 * (static_cast<double>(M) * N - Zy) * N / Zy * s * s));
}

long eig_kmax_limit(long M, long Zy) {
  check_positive(M, "M");
  check_positive(Zy, "Zy");
  return static_cast<long>(std::floor(kPi * kPi * M / (4.0 * Zy)));
}

std::vector<double> q_eigenvalues(double a, long n_len) {
  if (n_len < 2) throw ParamError("BadParameter", "requires N >= 2");
  const long d = 2 * n_len - 1;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(d));
  out.push_back(a + static_cast<double>(n_len - 1) * n_len);
  for (long k = 1; k <= d - 1; ++k) {
    const double theta = kPi * k / d;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double s = std::sin(theta);
    out.push_back(a - (1.0 - sign * std::cos(theta)) / (2.0 * s * s));
  }
  return out;
}

double rho(double theta_max, const BoundReport& bound) {
  if (!bound.applicable) {
    throw ParamError("VacuousBound",
                     "bound '" + bound.name + "' is not applicable here");
  }
  if (bound.vacuous || bound.theta <= 0.0) {
    throw ParamError("VacuousBound",
                     "bound '" + bound.name + "' is vacuous (theta = 0)");
  }
  return theta_max / bound.theta;
}

}  // namespace drcskit
