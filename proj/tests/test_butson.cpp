#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "drcskit/butson.hpp"
#include "drcskit/registry.hpp"

using namespace drcskit;

namespace {

// Direct Gram check against libm phasors, independent of bh_validate's root
// table and loop structure.
double worst_offdiag(const ButsonMatrix& b) {
  double worst = 0.0;
  for (int i = 0; i < b.order; ++i) {
    for (int j = 0; j < b.order; ++j) {
      if (i == j) continue;
      std::complex<double> inner = 0.0;
      for (int m = 0; m < b.order; ++m) {
        const double phase = 2.0 * std::numbers::pi *
                             (b.at(i, m) - b.at(j, m)) / b.root;
        inner += std::complex<double>(std::cos(phase), std::sin(phase));
      }
      worst = std::max(worst, std::abs(inner));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("dft exponent tables") {
  CHECK(bh_dft(1).exps == std::vector<int>{0});
  CHECK(bh_validate(bh_dft(1)).ok);
  CHECK(bh_dft(3).exps == std::vector<int>{0, 0, 0, 0, 1, 2, 0, 2, 1});
  CHECK(bh_validate(bh_dft(9)).ok);
  CHECK(worst_offdiag(bh_dft(9)) < 1e-9 * 9);
}

TEST_CASE("walsh matrices") {
  CHECK(bh_walsh(1).exps == std::vector<int>{0, 0, 0, 1});
  ButsonMatrix w4 = bh_walsh(4);
  CHECK(w4.order == 16);
  CHECK(w4.root == 2);
  std::vector<int> row1(w4.exps.begin() + 16, w4.exps.begin() + 32);
  CHECK(row1 == std::vector<int>{0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0,
                                 1});
  CHECK(bh_validate(w4).ok);
}

TEST_CASE("kronecker products") {
  ButsonMatrix w1 = bh_walsh(1);
  CHECK(bh_kronecker(w1, w1) == bh_walsh(2));

  ButsonMatrix k63 = bh_kronecker(bh_dft(3), bh_dft(2));
  CHECK(k63.order == 6);
  CHECK(k63.root == 6);
  CHECK(bh_validate(k63).ok);

  ButsonMatrix k2010 = bh_kronecker(bh_seed("BH(10,5)-example1"), w1);
  CHECK(k2010.order == 20);
  CHECK(k2010.root == 10);
  CHECK(bh_validate(k2010).ok);
}

TEST_CASE("kronecker order and root rule over a pool of factors") {
  std::vector<ButsonMatrix> pool;
  for (int n = 2; n <= 6; ++n) pool.push_back(bh_dft(n));
  for (int m = 1; m <= 3; ++m) pool.push_back(bh_walsh(m));
  pool.push_back(bh_seed("BH(10,5)-example1"));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      ButsonMatrix k = bh_kronecker(a, b);
      CHECK(k.order == a.order * b.order);
      CHECK(k.root == std::lcm(a.root, b.root));
      CHECK(bh_validate(k).ok);
    }
  }
}

TEST_CASE("embedded seed") {
  ButsonMatrix b = bh_seed("BH(10,5)-example1");
  CHECK(b.order == 10);
  CHECK(b.root == 5);
  std::vector<int> row1(b.exps.begin() + 10, b.exps.begin() + 20);
  CHECK(row1 == std::vector<int>{0, 1, 2, 3, 4, 4, 0, 1, 2, 3});
  CHECK(bh_validate(b).ok);
  CHECK(worst_offdiag(b) < 1e-9 * 10);
  CHECK(b == registry::example1_bh());

  CHECK_THROWS_AS(bh_seed("BH(99,13)"), ParamError);
  CHECK(bh_seed_names() == std::vector<std::string>{"BH(10,5)-example1"});
}

TEST_CASE("validation flags a single perturbed exponent") {
  ButsonMatrix b = bh_dft(8);
  b.exps[3 * 8 + 5] = (b.exps[3 * 8 + 5] + 1) % 8;
  auto report = bh_validate(b);
  CHECK_FALSE(report.ok);
  CHECK(report.worst > 1e-9 * 8);

  CHECK(bh_validate(ButsonMatrix{1, 1, {0}}).ok);
}

TEST_CASE("butson text round trip and parse errors") {
  ButsonMatrix b = bh_seed("BH(10,5)-example1");
  CHECK(bh_from_text(bh_to_text(b)) == b);

  CHECK_THROWS_AS(bh_from_text("2 2\n0 0\n"), ParseError);       // truncated
  CHECK_THROWS_AS(bh_from_text("2 2\n0 0\n0 5\n"), ParseError);  // e >= r
  try {
    bh_from_text("2 2\n0 0\n0 5\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
