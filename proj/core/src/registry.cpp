#include "drcskit/registry.hpp"

#include <array>

#include "drcskit/errors.hpp"
#include "drcskit/finite_field.hpp"

namespace drcskit::registry {

int example1_p() { return 3; }
int example1_n() { return 2; }
std::vector<int> example1_poly() { return {2, 2, 1}; }  // x^2 + 2x + 2
const char* example1_bh_name() { return "BH(10,5)-example1"; }

ButsonMatrix example1_bh() {
  // The BH(10,5) printed alongside Example 1, rows as published.
  static constexpr int exps[10][10] = {
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 1, 2, 3, 4, 4, 0, 1, 2, 3},
      {0, 2, 4, 1, 3, 1, 3, 0, 2, 4},
      {0, 3, 1, 4, 2, 1, 4, 2, 0, 3},
      {0, 4, 3, 2, 1, 4, 3, 2, 1, 0},
      {0, 3, 2, 2, 3, 0, 1, 4, 4, 1},
      {0, 2, 0, 4, 4, 3, 2, 3, 1, 1},
      {0, 1, 3, 1, 0, 2, 4, 3, 4, 2},
      {0, 0, 1, 3, 1, 2, 2, 4, 3, 4},
      {0, 4, 4, 0, 2, 3, 1, 1, 3, 2},
  };
  ButsonMatrix b;
  b.order = 10;
  b.root = 5;
  b.exps.reserve(100);
  for (const auto& row : exps) {
    b.exps.insert(b.exps.end(), row, row + 10);
  }
  return b;
}

int example2_q() { return 17; }
int example2_walsh_m() { return 4; }

std::span<const SmallAlphabetRow> small_alphabet_rows() {
  // Every row of the published table, in print order (9 alphabets x 2).
  static constexpr std::array<SmallAlphabetRow, 18> rows = {{
      {2, 16, 16, 16, 16, 16, 16, "BH(16,2)",
       "Florentine rectangle for K=16"},
      {2, 127, 128, 127, 128, 127, 127, "BH(128,2)",
       "quasi-Florentine rectangle for K=128"},
      {3, 71, 72, 71, 72, 71, 71, "BH(72,3)",
       "quasi-Florentine rectangle for K=72"},
      {3, 126, 126, 126, 126, 126, 126, "BH(126,3)",
       "Florentine rectangle for K=126"},
      {4, 28, 28, 28, 28, 28, 28, "BH(28,4)",
       "Florentine rectangle for K=28"},
      {4, 139, 140, 139, 140, 139, 139, "BH(140,4)",
       "quasi-Florentine rectangle for K=140"},
      {5, 49, 50, 49, 50, 49, 49, "BH(50,5)",
       "quasi-Florentine rectangle for K=50"},
      {5, 100, 100, 100, 100, 100, 100, "BH(100,5)",
       "Florentine rectangle for K=100"},
      {6, 89, 90, 89, 90, 89, 89, "BH(90,6)",
       "quasi-Florentine rectangle for K=90"},
      {6, 42, 42, 42, 42, 42, 42, "BH(42,6)",
       "Florentine rectangle for K=42"},
      {7, 97, 98, 97, 98, 97, 97, "BH(98,7)",
       "quasi-Florentine rectangle for K=98"},
      {7, 196, 196, 196, 196, 196, 196, "BH(196,7)",
       "Florentine rectangle for K=196"},
      {8, 127, 128, 127, 128, 127, 127, "BH(128,8)",
       "quasi-Florentine rectangle for K=128"},
      {8, 112, 112, 112, 112, 112, 112, "BH(112,8)",
       "Florentine rectangle for K=112"},
      {9, 53, 54, 53, 54, 53, 53, "BH(54,9)",
       "quasi-Florentine rectangle for K=54"},
      {9, 108, 108, 108, 108, 108, 108, "BH(108,9)",
       "Florentine rectangle for K=108"},
      {10, 71, 72, 71, 72, 71, 71, "BH(72,10)",
       "quasi-Florentine rectangle for K=72"},
      {10, 70, 70, 70, 70, 70, 70, "BH(70,10)",
       "Florentine rectangle for K=70"},
  }};
  return {rows.data(), rows.size()};
}

P2FamilyRow p2_family_row(long p) {
  if (!is_prime(p)) {
    throw ParamError("NotPrime", "p = " + std::to_string(p));
  }
  P2FamilyRow row;
  row.p = p;
  row.K = p * p;
  row.M = p * p;
  row.N = p * p - 1;
  row.Zx = p * p - 1;
  row.Zy = p * p - 1;
  row.theta = p * p;
  return row;
}

std::vector<long> primes_in_range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

}  // namespace drcskit::registry
