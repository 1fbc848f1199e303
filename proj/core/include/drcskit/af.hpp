#pragma once

#include <complex>
#include <span>
#include <vector>

#include "drcskit/drcs.hpp"
#include "drcskit/errors.hpp"

namespace drcskit {

using cplx = std::complex<double>;

// Cached roots of unity; at(e) = omega_order^{e mod order}. Exponent
// arithmetic stays in integers so identities like Doppler periodicity hold
// exactly, not just to rounding.
class RootTable {
 public:
  explicit RootTable(int order);
  int order() const noexcept { return static_cast<int>(roots_.size()); }
  cplx at(long long e) const noexcept {
    long long m = e % order();
    if (m < 0) m += order();
    return roots_[static_cast<size_t>(m)];
  }

 private:
  std::vector<cplx> roots_;
};

// Delay-Doppler box (-zx, zx) x (-zy, zy): integer delays |tau| <= zx - 1 and
// Dopplers |v| <= zy - 1.
struct Zone {
  int zx = 1;
  int zy = 1;
};

// Aperiodic cross ambiguity function of equal-length sequences at integer
// delay tau and Doppler v. The Doppler phasor base is the actual sequence
// length L: AF(tau, v) = sum_t a(t) conj(b(t+tau)) omega_L^{v t} over the
// overlap window; zero for |tau| >= L. Throws LengthMismatch.
cplx af_cross(std::span<const cplx> a, std::span<const cplx> b, int tau,
              int v);
cplx af_cross(std::span<const cplx> a, std::span<const cplx> b, int tau,
              int v, const RootTable& doppler);

// Sequence (k, m) of a set as complex values.
std::vector<cplx> to_complex(const DrcsSet& s, int k, int m);

// AF sum over the M elementary sequences of sets k1 and k2.
cplx af_set_cross(const DrcsSet& s, int k1, int k2, int tau, int v);
cplx af_set_cross(const DrcsSet& s1, int k1, const DrcsSet& s2, int k2,
                  int tau, int v);

// Complete AF-sum grid for an ordered pair of sets over a zone.
struct AFGrid {
  int k1 = 0, k2 = 0;
  Zone zone;
  std::vector<cplx> vals;  // (2zx-1) delay rows x (2zy-1) Doppler columns

  cplx at(int tau, int v) const {
    return vals[static_cast<size_t>(tau + zone.zx - 1) * (2 * zone.zy - 1) +
                (v + zone.zy - 1)];
  }
};

// Transform-accelerated grid: for each delay the Doppler axis is filled from
// the L-point transform of the summed elementwise product sequence. Agrees
// with the naive per-cell path to within 1e-9 * M * L per cell.
AFGrid af_grid(const DrcsSet& s, int k1, int k2, Zone zone);

// Per-cell triple-loop evaluation; the independent oracle for af_grid.
AFGrid af_grid_naive(const DrcsSet& s, int k1, int k2, Zone zone);

struct PeakCell {
  int k1 = -1, k2 = -1, tau = 0, v = 0;
  double mag = 0.0;
};

// theta_a: max |auto AF sum| over all sets and (tau, v) != (0, 0) in the
// zone. theta_c: max |cross AF sum| over ordered pairs k1 != k2 and all
// (tau, v) in the zone, origin included. theta_max = max of the two.
struct ZoneMetrics {
  double theta_a = 0.0;
  double theta_c = 0.0;
  double theta_max = 0.0;
  PeakCell argmax_a;
  PeakCell argmax_c;
};

ZoneMetrics zone_metrics(const DrcsSet& s, Zone zone);

// A cell counts as zero when its magnitude is below this classification
// threshold; theta values themselves are reported unrounded.
inline double zero_cell_tolerance(const DrcsSet& s) {
  return 1e-6 * static_cast<double>(s.num_seqs) * s.length;
}

}  // namespace drcskit
