#pragma once

#include <span>
#include <vector>

#include "drcskit/butson.hpp"

namespace drcskit::registry {

// Published example presets. Tests and the CLI share this single source of
// truth so the reproduction commands cannot drift from what is verified.

// Example 1: GF(9) with f(x) = x^2 + 2x + 2 (not the lexicographically
// smallest primitive polynomial; the printed tables depend on this one),
// combined with the embedded BH(10,5) seed.
int example1_p();                  // 3
int example1_n();                  // 2
std::vector<int> example1_poly();  // {2, 2, 1}, low degree first
const char* example1_bh_name();    // "BH(10,5)-example1"
ButsonMatrix example1_bh();

// Example 2: circulant Florentine rectangle from q = 17 with BH(16,2).
int example2_q();        // 17
int example2_walsh_m();  // 4

// Rows of the published small-alphabet parameter table, in print order.
struct SmallAlphabetRow {
  int alphabet;
  long K, M, N, theta, Zx, Zy;
  const char* bh;
  const char* rectangle;
};
std::span<const SmallAlphabetRow> small_alphabet_rows();  // 20 rows

// The (p^2, p^2, p^2-1, p^2) family evaluated in the asymptotic comparison:
// K = M = theta = p^2, sequence length N = Zx = Zy = p^2 - 1.
struct P2FamilyRow {
  long p, K, M, N, Zx, Zy, theta;
};
P2FamilyRow p2_family_row(long p);
std::vector<long> primes_in_range(long lo, long hi);

}  // namespace drcskit::registry
