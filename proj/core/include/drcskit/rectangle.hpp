#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "drcskit/errors.hpp"
#include "drcskit/finite_field.hpp"

namespace drcskit {

// K x W array over Z_S. Rows act as the (partial) permutations pi_k that
// drive the sequence-set construction. Symbols are 0-based throughout, the
// same convention the published matrices use.
struct Rectangle {
  int rows = 0;      // K
  int width = 0;     // W
  int alphabet = 0;  // S
  std::vector<int> entries;  // row-major, rows * width

  int at(int k, int j) const {
    return entries[static_cast<size_t>(k) * width + j];
  }
  std::span<const int> row(int k) const {
    return {entries.data() + static_cast<size_t>(k) * width,
            static_cast<size_t>(width)};
  }
  bool operator==(const Rectangle&) const = default;
};

enum class ExtendSide { left, right };

// Quasi-Florentine rectangle of size p^n x (p^n - 1) over Z_{p^n}:
// row 0 entry j is psi(alpha^j), row i > 0 entry j is psi(alpha^j + alpha^{i-1}).
// The result is validated (C1 and C2) before being returned.
Rectangle build_quasi_florentine(const FieldCtx& ctx);

// Appends a constant column `new_symbol` (must equal S), yielding a
// K x (W+1) rectangle over Z_{S+1}. The published 9x9 example carries the
// constant column on the right, which is the default here; `side` selects
// the left-column textual variant. Both are validated.
Rectangle extend_quasi_florentine(const Rectangle& r, int new_symbol,
                                  ExtendSide side = ExtendSide::right);

// Circulant Florentine rectangle of size (q-1) x (q-1) over Z_{q-1} for a
// prime q >= 3: entry (k, j) = ((k+1)(j+1) mod q) - 1. Validated.
Rectangle build_florentine_circulant(int q);

// C1: every row consists of pairwise-distinct symbols (each within [0, S)).
ValidationReport validate_c1(const Rectangle& r);

// C2: for every ordered pair of distinct symbols (a, b) and every gap
// m in [1, W-1], at most one row has b exactly m positions right of a.
ValidationReport validate_c2(const Rectangle& r);

// Row k as the sequence pi_k(0..W-1). Requires 0 <= k < K and an injective
// row (C1); throws IndexOutOfRange / ValidationError otherwise.
std::vector<int> row_permutation(const Rectangle& r, int k);

// Text format: line 1 "K W S", then K lines of W space-separated integers.
std::string rect_to_text(const Rectangle& r);
Rectangle rect_from_text(const std::string& text);
void rect_save(const Rectangle& r, const std::filesystem::path& path);
Rectangle rect_load(const std::filesystem::path& path);

}  // namespace drcskit
