#include "drcskit/af.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "drcskit/parallel.hpp"

namespace drcskit {

namespace {

void check_zone(const DrcsSet& s, Zone zone) {
  if (zone.zx < 1 || zone.zy < 1 || zone.zx > s.length ||
      zone.zy > s.length) {
    throw ParamError("BadZone",
                     "zone (" + std::to_string(zone.zx) + "," +
                         std::to_string(zone.zy) + ") outside [1, L=" +
                         std::to_string(s.length) + "]");
  }
}

void check_set_index(const DrcsSet& s, int k) {
  if (k < 0 || k >= s.num_sets) {
    throw ParamError("IndexOutOfRange",
                     "set " + std::to_string(k) + " of " +
                         std::to_string(s.num_sets));
  }
}

// Overlap window [t0, t1] of the delayed product; empty when |tau| >= L.
bool overlap(int len, int tau, int& t0, int& t1) {
  if (tau >= len || tau <= -len) return false;
  t0 = std::max(0, -tau);
  t1 = len - 1 - std::max(0, tau);
  return t0 <= t1;
}

AFGrid grid_transform(const DrcsSet& s, int k1, int k2, Zone zone,
                      bool threaded) {
  check_set_index(s, k1);
  check_set_index(s, k2);
  check_zone(s, zone);
  const int len = s.length;
  const int nv = 2 * zone.zy - 1;
  const int ntau = 2 * zone.zx - 1;
  AFGrid g;
  g.k1 = k1;
  g.k2 = k2;
  g.zone = zone;
  g.vals.assign(static_cast<size_t>(ntau) * nv, cplx{});

  const RootTable entry_roots(s.root);
  const RootTable doppler(len);

  auto run = [&](std::size_t lo, std::size_t hi) {
    std::vector<cplx> prod(static_cast<size_t>(len));
    std::vector<cplx> line(static_cast<size_t>(len));
    std::vector<char> have(static_cast<size_t>(len));
    for (std::size_t ti = lo; ti < hi; ++ti) {
      const int tau = static_cast<int>(ti) - (zone.zx - 1);
      int t0 = 0, t1 = -1;
      cplx* row = g.vals.data() + ti * nv;
      if (!overlap(len, tau, t0, t1)) continue;

      // Summed elementwise product sequence for this delay.
      std::fill(prod.begin() + t0, prod.begin() + t1 + 1, cplx{});
      for (int m = 0; m < s.num_seqs; ++m) {
        const int* e1 = s.seq(k1, m).data();
        const int* e2 = s.seq(k2, m).data();
        for (int t = t0; t <= t1; ++t) {
          prod[static_cast<size_t>(t)] += entry_roots.at(e1[t] - e2[t + tau]);
        }
      }

      // len-point transform, evaluated only at the Dopplers the grid needs.
      std::fill(have.begin(), have.end(), 0);
      for (int v = -(zone.zy - 1); v <= zone.zy - 1; ++v) {
        const int u = ((v % len) + len) % len;
        if (!have[static_cast<size_t>(u)]) {
          cplx acc{};
          for (int t = t0; t <= t1; ++t) {
            acc += prod[static_cast<size_t>(t)] *
                   doppler.at(static_cast<long long>(u) * t);
          }
          line[static_cast<size_t>(u)] = acc;
          have[static_cast<size_t>(u)] = 1;
        }
        row[v + zone.zy - 1] = line[static_cast<size_t>(u)];
      }
    }
  };

  if (threaded) {
    parallel_for_chunks(static_cast<std::size_t>(ntau), run);
  } else {
    run(0, static_cast<std::size_t>(ntau));
  }
  return g;
}

inline bool improves(double mag, int k1, int k2, int tau, int v,
                     const PeakCell& best) {
  if (mag != best.mag) return mag > best.mag;
  // Exact tie: keep the canonical-first cell for determinism.
  const auto key = std::tuple(k1, k2, tau, v);
  const auto bkey = std::tuple(best.k1, best.k2, best.tau, best.v);
  return best.k1 < 0 || key < bkey;
}

}  // namespace

RootTable::RootTable(int order) {
  if (order < 1) throw ParamError("BadOrder", "root order must be >= 1");
  roots_.resize(static_cast<size_t>(order));
  for (int e = 0; e < order; ++e) {
    roots_[static_cast<size_t>(e)] =
        std::polar(1.0, 2.0 * std::numbers::pi * e / order);
  }
}

cplx af_cross(std::span<const cplx> a, std::span<const cplx> b, int tau,
              int v, const RootTable& doppler) {
  if (a.size() != b.size()) {
    throw ParamError("LengthMismatch",
                     std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  const int len = static_cast<int>(a.size());
  int t0 = 0, t1 = -1;
  if (!overlap(len, tau, t0, t1)) return {};
  cplx acc{};
  for (int t = t0; t <= t1; ++t) {
    acc += a[static_cast<size_t>(t)] *
           std::conj(b[static_cast<size_t>(t + tau)]) *
           doppler.at(static_cast<long long>(v) * t);
  }
  return acc;
}

cplx af_cross(std::span<const cplx> a, std::span<const cplx> b, int tau,
              int v) {
  if (a.size() != b.size()) {
    throw ParamError("LengthMismatch",
                     std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  if (a.empty()) return {};
  const RootTable doppler(static_cast<int>(a.size()));
  return af_cross(a, b, tau, v, doppler);
}

std::vector<cplx> to_complex(const DrcsSet& s, int k, int m) {
  check_set_index(s, k);
  if (m < 0 || m >= s.num_seqs) {
    throw ParamError("IndexOutOfRange",
                     "sequence " + std::to_string(m) + " of " +
                         std::to_string(s.num_seqs));
  }
  const RootTable roots(s.root);
  auto exps = s.seq(k, m);
  std::vector<cplx> out(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) out[i] = roots.at(exps[i]);
  return out;
}

cplx af_set_cross(const DrcsSet& s1, int k1, const DrcsSet& s2, int k2,
                  int tau, int v) {
  check_set_index(s1, k1);
  check_set_index(s2, k2);
  if (s1.num_seqs != s2.num_seqs || s1.length != s2.length) {
    throw ParamError("ShapeMismatch",
                     "sets must share M and L: (" +
                         std::to_string(s1.num_seqs) + "," +
                         std::to_string(s1.length) + ") vs (" +
                         std::to_string(s2.num_seqs) + "," +
                         std::to_string(s2.length) + ")");
  }
  if (s1.length == 0) return {};
  const RootTable r1(s1.root);
  const RootTable r2(s2.root);
  const RootTable doppler(s1.length);
  const int len = s1.length;
  int t0 = 0, t1 = -1;
  if (!overlap(len, tau, t0, t1)) return {};
  cplx acc{};
  for (int m = 0; m < s1.num_seqs; ++m) {
    auto e1 = s1.seq(k1, m);
    auto e2 = s2.seq(k2, m);
    for (int t = t0; t <= t1; ++t) {
      acc += r1.at(e1[static_cast<size_t>(t)]) *
             std::conj(r2.at(e2[static_cast<size_t>(t + tau)])) *
             doppler.at(static_cast<long long>(v) * t);
    }
  }
  return acc;
}

cplx af_set_cross(const DrcsSet& s, int k1, int k2, int tau, int v) {
  return af_set_cross(s, k1, s, k2, tau, v);
}

AFGrid af_grid(const DrcsSet& s, int k1, int k2, Zone zone) {
  return grid_transform(s, k1, k2, zone, true);
}

AFGrid af_grid_naive(const DrcsSet& s, int k1, int k2, Zone zone) {
  check_set_index(s, k1);
  check_set_index(s, k2);
  check_zone(s, zone);
  const int len = s.length;
  const int nv = 2 * zone.zy - 1;
  AFGrid g;
  g.k1 = k1;
  g.k2 = k2;
  g.zone = zone;
  g.vals.assign(static_cast<size_t>(2 * zone.zx - 1) * nv, cplx{});

  // Phasors straight from libm so this path shares nothing with the
  // transform path beyond the sequence exponents.
  const double twopi = 2.0 * std::numbers::pi;
  std::vector<std::vector<cplx>> a(static_cast<size_t>(s.num_seqs));
  std::vector<std::vector<cplx>> b(static_cast<size_t>(s.num_seqs));
  for (int m = 0; m < s.num_seqs; ++m) {
    a[static_cast<size_t>(m)].resize(static_cast<size_t>(len));
    b[static_cast<size_t>(m)].resize(static_cast<size_t>(len));
    for (int t = 0; t < len; ++t) {
      a[static_cast<size_t>(m)][static_cast<size_t>(t)] =
          std::polar(1.0, twopi * s.at(k1, m, t) / s.root);
      b[static_cast<size_t>(m)][static_cast<size_t>(t)] =
          std::polar(1.0, twopi * s.at(k2, m, t) / s.root);
    }
  }
  for (int tau = -(zone.zx - 1); tau <= zone.zx - 1; ++tau) {
    int t0 = 0, t1 = -1;
    if (!overlap(len, tau, t0, t1)) continue;
    for (int v = -(zone.zy - 1); v <= zone.zy - 1; ++v) {
      cplx acc{};
      for (int m = 0; m < s.num_seqs; ++m) {
        for (int t = t0; t <= t1; ++t) {
          const long long e = ((static_cast<long long>(v) * t) % len + len) %
                              len;
          acc += a[static_cast<size_t>(m)][static_cast<size_t>(t)] *
                 std::conj(
                     b[static_cast<size_t>(m)][static_cast<size_t>(t + tau)]) *
                 std::polar(1.0, twopi * static_cast<double>(e) / len);
        }
      }
      g.vals[static_cast<size_t>(tau + zone.zx - 1) * nv +
             (v + zone.zy - 1)] = acc;
    }
  }
  return g;
}

ZoneMetrics zone_metrics(const DrcsSet& s, Zone zone) {
  check_zone(s, zone);
  const int num = s.num_sets;
  const std::size_t pairs = static_cast<std::size_t>(num) * num;
  std::vector<PeakCell> best(pairs);

  parallel_for_chunks(pairs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t pk = lo; pk < hi; ++pk) {
      const int k1 = static_cast<int>(pk) / num;
      const int k2 = static_cast<int>(pk) % num;
      const AFGrid g = grid_transform(s, k1, k2, zone, false);
      PeakCell cell;
      for (int tau = -(zone.zx - 1); tau <= zone.zx - 1; ++tau) {
        for (int v = -(zone.zy - 1); v <= zone.zy - 1; ++v) {
          if (k1 == k2 && tau == 0 && v == 0) continue;
          const double mag = std::abs(g.at(tau, v));
          if (improves(mag, k1, k2, tau, v, cell)) {
            cell = {k1, k2, tau, v, mag};
          }
        }
      }
      best[pk] = cell;
    }
  });

  ZoneMetrics zm;
  for (std::size_t pk = 0; pk < pairs; ++pk) {
    const PeakCell& cell = best[pk];
    if (cell.k1 < 0) continue;
    if (cell.k1 == cell.k2) {
      if (improves(cell.mag, cell.k1, cell.k2, cell.tau, cell.v,
                   zm.argmax_a)) {
        zm.argmax_a = cell;
      }
    } else if (improves(cell.mag, cell.k1, cell.k2, cell.tau, cell.v,
                        zm.argmax_c)) {
      zm.argmax_c = cell;
    }
  }
  zm.theta_a = zm.argmax_a.k1 >= 0 ? zm.argmax_a.mag : 0.0;
  zm.theta_c = zm.argmax_c.k1 >= 0 ? zm.argmax_c.mag : 0.0;
  zm.theta_max = std::max(zm.theta_a, zm.theta_c);
  return zm;
}

}  // namespace drcskit
