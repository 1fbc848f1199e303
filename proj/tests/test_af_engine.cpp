#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "drcskit/af.hpp"
#include "drcskit/registry.hpp"

using namespace drcskit;

namespace {

DrcsSet example1_set() {
  FieldCtx ctx(registry::example1_p(), registry::example1_n(),
               registry::example1_poly());
  Rectangle rect = extend_quasi_florentine(build_quasi_florentine(ctx), 9);
  return construct_drcs(rect, registry::example1_bh());
}

DrcsSet example2_set() {
  return construct_drcs(build_florentine_circulant(registry::example2_q()),
                        bh_walsh(registry::example2_walsh_m()));
}

std::vector<cplx> random_unimodular(std::mt19937& rng, int len) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> out(static_cast<size_t>(len));
  for (auto& v : out) v = std::polar(1.0, phase(rng));
  return out;
}

DrcsSet random_set(std::mt19937& rng, int num_sets, int num_seqs, int len,
                   int root) {
  DrcsSet s;
  s.num_sets = num_sets;
  s.num_seqs = num_seqs;
  s.length = len;
  s.root = root;
  s.exps.resize(static_cast<size_t>(num_sets) * num_seqs * len);
  std::uniform_int_distribution<int> e(0, root - 1);
  for (int& x : s.exps) x = e(rng);
  return s;
}

double grid_diff(const AFGrid& a, const AFGrid& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.vals.size(); ++i) {
    worst = std::max(worst, std::abs(a.vals[i] - b.vals[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("af_cross basics") {
  std::mt19937 rng(7);
  const auto a = random_unimodular(rng, 11);
  CHECK(std::abs(af_cross(a, a, 0, 0) - cplx(11.0, 0.0)) < 1e-12 * 11);
  // Zero-Doppler column.
  for (int v = 1; v < 11; ++v) {
    CHECK(std::abs(af_cross(a, a, 0, v)) < 1e-12 * 11);
    CHECK(std::abs(af_cross(a, a, 0, -v)) < 1e-12 * 11);
  }
  // Vanishes at and beyond full misalignment.
  CHECK(af_cross(a, a, 11, 3) == cplx{});
  CHECK(af_cross(a, a, -15, 2) == cplx{});
  const auto b = random_unimodular(rng, 12);
  CHECK_THROWS_AS(af_cross(a, b, 0, 0), ParamError);
}

TEST_CASE("af_cross delay branches against hand-computed values") {
  // a = (1, i, -1), b = (i, 1, -i), omega = exp(2 pi i / 3).
  const std::vector<cplx> a = {{1, 0}, {0, 1}, {-1, 0}};
  const std::vector<cplx> b = {{0, 1}, {1, 0}, {0, -1}};
  const double s3 = std::sqrt(3.0);
  // tau = +1, v = 1: a0 b1* + a1 b2* w = 1 - w = 3/2 - i sqrt(3)/2.
  CHECK(std::abs(af_cross(a, b, 1, 1) - cplx(1.5, -s3 / 2)) < 1e-12);
  // tau = -1, v = 1: a1 b0* w + a2 b1* w^2 = w - w^2 = i sqrt(3).
  CHECK(std::abs(af_cross(a, b, -1, 1) - cplx(0.0, s3)) < 1e-12);
  // tau = -2, v = 2: a2 b0* w^4 = i w = -sqrt(3)/2 - i/2.
  CHECK(std::abs(af_cross(a, b, -2, 2) - cplx(-s3 / 2, -0.5)) < 1e-12);
}

TEST_CASE("af_cross conjugate-reflection symmetry and Doppler periodicity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int len = 2 + static_cast<int>(rng() % 15);  // L <= 16
    const auto a = random_unimodular(rng, len);
    const auto b = random_unimodular(rng, len);
    const RootTable doppler(len);
    for (int tau = -len; tau <= len; ++tau) {
      for (int v = -len + 1; v < len; ++v) {
        const cplx fwd = af_cross(a, b, tau, v, doppler);
        const cplx rev = af_cross(b, a, -tau, -v, doppler);
        CHECK(std::abs(std::abs(fwd) - std::abs(rev)) < 1e-9 * len);
        // Integer-exponent phasors make periodicity exact.
        CHECK(af_cross(a, b, tau, v + len, doppler) == fwd);
      }
    }
  }
}

TEST_CASE("af_set_cross on the gf9 set") {
  DrcsSet s = example1_set();
  const double ml = 90.0;
  CHECK(std::abs(af_set_cross(s, 0, 0, 0, 0) - cplx(ml, 0.0)) < 1e-12 * ml);

  // The set-level sum equals the per-sequence sum over materialized
  // sequences.
  cplx by_parts{};
  for (int m = 0; m < s.num_seqs; ++m) {
    const auto seq = to_complex(s, 0, m);
    CHECK(std::abs(std::abs(seq[3]) - 1.0) < 1e-15);
    by_parts += af_cross(seq, to_complex(s, 1, m), 2, 3);
  }
  CHECK(std::abs(by_parts - af_set_cross(s, 0, 1, 2, 3)) < 1e-12 * ml);
  // Auto AF sums vanish everywhere else in the zone.
  for (int tau = -8; tau <= 8; ++tau) {
    for (int v = -8; v <= 8; ++v) {
      if (tau == 0 && v == 0) continue;
      CHECK(std::abs(af_set_cross(s, 2, 2, tau, v)) < 1e-9 * ml);
    }
  }
  // Cross AF sums take magnitudes in {0, N}.
  for (int tau = -8; tau <= 8; ++tau) {
    for (int v = -8; v <= 8; ++v) {
      const double mag = std::abs(af_set_cross(s, 0, 1, tau, v));
      CHECK((mag < 1e-9 * ml || std::abs(mag - 10.0) < 1e-9 * ml));
    }
  }
  CHECK_THROWS_AS(af_set_cross(s, 0, example2_set(), 0, 0, 0), ParamError);
}

TEST_CASE("af_grid examples") {
  DrcsSet ex2 = example2_set();
  AFGrid g = af_grid(ex2, 0, 0, Zone{16, 16});
  int nonzero = 0;
  for (int tau = -15; tau <= 15; ++tau) {
    for (int v = -15; v <= 15; ++v) {
      if (std::abs(g.at(tau, v)) > zero_cell_tolerance(ex2)) ++nonzero;
    }
  }
  CHECK(nonzero == 1);
  CHECK(std::abs(g.at(0, 0) - cplx(256.0, 0.0)) < 1e-9 * 256);

  DrcsSet ex1 = example1_set();
  AFGrid cross = af_grid(ex1, 0, 1, Zone{9, 9});
  for (const cplx& c : cross.vals) {
    const double mag = std::abs(c);
    CHECK((mag < 1e-6 * 90 || std::abs(mag - 10.0) < 1e-6 * 90));
  }

  AFGrid tiny = af_grid(ex1, 0, 0, Zone{1, 1});
  CHECK(tiny.vals.size() == 1);

  CHECK_THROWS_AS(af_grid(ex1, 9, 0, Zone{9, 9}), ParamError);
  CHECK_THROWS_AS(af_grid(ex1, 0, 0, Zone{10, 9}), ParamError);
}

TEST_CASE("accelerated grid equals the naive triple loop") {
  std::mt19937 rng(20240601);
  DrcsSet ex1 = example1_set();
  CHECK(grid_diff(af_grid(ex1, 0, 1, Zone{9, 9}),
                  af_grid_naive(ex1, 0, 1, Zone{9, 9})) < 1e-9 * 90);
  for (int trial = 0; trial < 10; ++trial) {
    const int sets = 1 + static_cast<int>(rng() % 4);
    const int seqs = 1 + static_cast<int>(rng() % 12);
    const int len = 2 + static_cast<int>(rng() % 11);
    const int root = 2 + static_cast<int>(rng() % 7);
    DrcsSet s = random_set(rng, sets, seqs, len, root);
    const Zone zone{1 + static_cast<int>(rng() % len),
                    1 + static_cast<int>(rng() % len)};
    const int k1 = static_cast<int>(rng() % sets);
    const int k2 = static_cast<int>(rng() % sets);
    CHECK(grid_diff(af_grid(s, k1, k2, zone),
                    af_grid_naive(s, k1, k2, zone)) < 1e-9 * seqs * len);
  }
}

TEST_CASE("zone metrics of the published sets") {
  DrcsSet ex1 = example1_set();
  ZoneMetrics m1 = zone_metrics(ex1, Zone{9, 9});
  CHECK(m1.theta_a < 1e-6 * 90);
  CHECK(m1.theta_c == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(m1.theta_max == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(m1.theta_max == std::max(m1.theta_a, m1.theta_c));
  CHECK(m1.argmax_c.k1 != m1.argmax_c.k2);

  DrcsSet ex2 = example2_set();
  ZoneMetrics m2 = zone_metrics(ex2, Zone{16, 16});
  CHECK(m2.theta_a < 1e-6 * 256);
  CHECK(m2.theta_max == doctest::Approx(16.0).epsilon(1e-9));
}

TEST_CASE("single all-ones sequence has a triangular delay profile") {
  DrcsSet s;
  s.num_sets = 1;
  s.num_seqs = 1;
  s.length = 4;
  s.root = 1;
  s.exps = {0, 0, 0, 0};
  ZoneMetrics m = zone_metrics(s, Zone{4, 1});
  CHECK(m.theta_a == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(m.theta_c == 0.0);  // no pairs with a single set
  CHECK(m.theta_max == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(m.argmax_a.tau) == 1);
}

TEST_CASE("metrics are deterministic across thread budgets") {
  DrcsSet ex1 = example1_set();
  setenv("DRCS_THREADS", "1", 1);
  ZoneMetrics serial = zone_metrics(ex1, Zone{9, 9});
  setenv("DRCS_THREADS", "4", 1);
  ZoneMetrics parallel = zone_metrics(ex1, Zone{9, 9});
  unsetenv("DRCS_THREADS");
  CHECK(serial.theta_a == parallel.theta_a);
  CHECK(serial.theta_c == parallel.theta_c);
  CHECK(serial.argmax_c.k1 == parallel.argmax_c.k1);
  CHECK(serial.argmax_c.k2 == parallel.argmax_c.k2);
  CHECK(serial.argmax_c.tau == parallel.argmax_c.tau);
  CHECK(serial.argmax_c.v == parallel.argmax_c.v);
}
