#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drcskit/errors.hpp"

namespace drcskit {

// Nonnegative delay weights summing to 1 (within 1e-12). The Doppler weight
// vector is fixed internally at the optimal uniform 1/Zy choice and never
// surfaces in the API.
struct WeightVector {
  std::vector<double> w;

  double sum() const;
  double sum_sq() const;
};

// w_r = 1/(2N-1) over the full delay range, length 2N-1.
WeightVector weights_uniform_full(long n_len);

// First m entries 1/m, the remaining d - m entries zero. Throws BadM unless
// 1 <= m <= d.
WeightVector weights_uniform_truncated(long m, long d);

// Sine-progression weights tied to Chebyshev polynomials of the second kind:
// w_r = (sin(g/2)/sin(mg/2)) sin(g0 + r g) for r < m with
// g = arccos(1 - K Zy / (M N^2)) and g0 = (pi - m g + g)/2. Requires
// K Zy <= M N^2 (GammaDomain), m even with m g <= pi + g and m <= d (BadM).
WeightVector weights_chebyshev(long k_sets, long m_seqs, long n_len, long zy,
                               long m, long d);

// Q(w, a) = a * sum w_i^2 + sum_{s != t} tau_{s,t,N} w_s w_t with the
// circulant kernel tau_{s,t,N} = min(|t-s|, 2N-1-|t-s|). w may be shorter
// than 2N-1 (zero-padded).
double quadratic_form(const WeightVector& w, double a, long n_len);

// Combined (theta_a, theta_c) inequality: coeff_a*ta^2 + coeff_c*tc^2 >= rhs.
struct CombinedBound {
  double coeff_a = 0.0;
  double coeff_c = 0.0;
  double rhs = 0.0;

  double lhs(double theta_a, double theta_c) const;
  bool holds(double theta_a, double theta_c, double rel_tol = 1e-9) const;
};

// One evaluated lower bound. Analytic values whose square came out negative
// are clamped to 0 and flagged vacuous so parameter sweeps never abort;
// `applicable` records whether the bound's stated precondition held.
struct BoundReport {
  std::string name;
  long K = 0, M = 0, N = 0, Zx = 0, Zy = 0;
  long m = 0;                        // weight support, when meaningful
  double gamma = 0.0, gamma0 = 0.0;  // Chebyshev parameters, when meaningful
  double theta_sq = 0.0;             // clamped lower bound on theta_max^2
  double theta = 0.0;                // sqrt(theta_sq)
  bool vacuous = false;
  bool applicable = true;
  std::optional<CombinedBound> combined;
  std::optional<double> theta_sq_weak;  // second (weaker) inequality, if any
};

// theta_max >= (MN/sqrt(Zy)) sqrt((K Zx Zy / (M(N+Zx-1)) - 1) / (K Zx - 1)).
BoundReport bound_shen(long K, long M, long N, long Zx, long Zy);

// Weighted bound over the full delay range (Zx = N):
// theta_max^2 >= M(N - Q_{2N-1}(w, N(MN-Zy)/(K Zy)) / (1 - (1/K) sum w^2)),
// plus the combined (theta_a, theta_c) inequality as an evaluator.
BoundReport bound_thm2(long K, long M, long N, long Zy,
                       const WeightVector& w);

// Truncated-zone variant: w must vanish at delays >= Zx (WeightSupport).
// Also carries the weaker form theta_max^2 >= M(N - Q_{Zx}(w, MN^2/(K Zy))).
BoundReport bound_thm3(long K, long M, long N, long Zx, long Zy,
                       const WeightVector& w);

// Closed form of the uniform full-range weights:
// theta_max^2 >= M^2 N^2 (K Zy / M - 1) / ([K(2N-1) - 1] Zy).
BoundReport bound_uniform_full(long K, long M, long N, long Zy);

// Closed form of the truncated uniform weights:
// theta_max^2 >= [3mKMN Zy - KM(m^2-1) Zy - 3 M^2 N^2] / [3(mK-1) Zy].
BoundReport bound_truncated(long K, long M, long N, long Zy, long m);

// theta_max^2 >= MN(1 - 2 sqrt(M/(3 K Zy))), applicable for K > 3M/Zy.
BoundReport bound_lev(long K, long M, long N, long Zy);

// Sine-weight bound: theta_max^2 >= NM - (m-1)/2
//   - [sin(mg/2) - sin((m-2)g/2)] / [2(1-cos g) sin(mg/2)],
// for 1 <= m < min(Zx + 1, pi/g + 1) and K Zy <= M N^2.
BoundReport bound_sin(long K, long M, long N, long Zx, long Zy, long m);

// m = floor(pi/g) + 1 specialization:
// theta_max^2 >= M(N - ceil(pi N / sqrt(8 K Zy / M))), applicable for
// Zx > pi/g and 5M <= K Zy <= M N^2.
BoundReport bound_c5(long K, long M, long N, long Zx, long Zy);

// Largest K for which the uniform-weight bound cannot be improved:
// K <= floor(4 (MN - Zy) N / Zy * sin^2(pi / (2(2N-1)))).
long eig_kmax(long M, long N, long Zy);
// Its N -> infinity limit, floor(pi^2 M / (4 Zy)).
long eig_kmax_limit(long M, long Zy);

// Analytic eigenvalues of the (2N-1) x (2N-1) kernel matrix with diagonal a:
// lambda_0 = a + N(N-1) first, then lambda_k for k = 1 .. 2N-2.
std::vector<double> q_eigenvalues(double a, long n_len);

// Optimality factor theta_max / theta_opti; throws VacuousBound when the
// bound is vacuous or inapplicable.
double rho(double theta_max, const BoundReport& bound);

}  // namespace drcskit
