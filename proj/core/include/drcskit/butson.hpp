#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "drcskit/errors.hpp"

namespace drcskit {

// Butson-type Hadamard matrix BH(N, r) kept in exact exponent form: entry
// (i, j) represents omega_r^{exps[i*N + j]}. Complex values are materialized
// only inside the validator and the AF engine, so downstream sequence
// assembly stays exact.
struct ButsonMatrix {
  int order = 0;  // N
  int root = 0;   // r
  std::vector<int> exps;

  int at(int i, int j) const {
    return exps[static_cast<size_t>(i) * order + j];
  }
  bool operator==(const ButsonMatrix&) const = default;
};

// DFT exponent table b_{i,j} = i*j mod N, i.e. BH(N, N).
ButsonMatrix bh_dft(int n);

// Walsh-Hadamard BH(2^m, 2): b_{i,j} = popcount(i & j) mod 2.
ButsonMatrix bh_walsh(int m);

// Kronecker product: order N1*N2, root lcm(r1, r2), exponents blended as
// (r/r1)*b1 + (r/r2)*b2 mod r.
ButsonMatrix bh_kronecker(const ButsonMatrix& a, const ButsonMatrix& b);

// Embedded seed registry. Only matrices printed in full in the source
// material are embedded; further seeds are supplied by file. Throws
// UnknownSeed for unknown names.
ButsonMatrix bh_seed(std::string_view name);
std::vector<std::string> bh_seed_names();

// Numeric check of B B^H = N I: pass iff every off-diagonal row inner
// product has magnitude <= 1e-9 * N. `worst` reports the largest one seen.
ValidationReport bh_validate(const ButsonMatrix& b);

// Text format: line 1 "N r", then N lines of N exponents.
std::string bh_to_text(const ButsonMatrix& b);
ButsonMatrix bh_from_text(const std::string& text);
void bh_save(const ButsonMatrix& b, const std::filesystem::path& path);
ButsonMatrix bh_load(const std::filesystem::path& path);

}  // namespace drcskit
