#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "drcskit/butson.hpp"
#include "drcskit/rectangle.hpp"

namespace drcskit {

// K sets of M unimodular sequences of length L, entries stored as exponents
// of omega_r. Layout is (k, m, n) with positions n contiguous, which is the
// order the AF engine walks.
struct DrcsSet {
  int num_sets = 0;  // K
  int num_seqs = 0;  // M
  int length = 0;    // L
  int root = 0;      // r
  std::vector<int> exps;

  int at(int k, int m, int n) const {
    return exps[(static_cast<size_t>(k) * num_seqs + m) * length + n];
  }
  std::span<const int> seq(int k, int m) const {
    return {exps.data() + (static_cast<size_t>(k) * num_seqs + m) * length,
            static_cast<size_t>(length)};
  }
  bool operator==(const DrcsSet&) const = default;
};

// Sequence set from a rectangle and a Butson matrix: the exponent of
// sequence m, position n, set k is b_{pi_k(n), m}. Requires the rectangle
// alphabet S to equal the Butson order N (symbols index Butson rows);
// throws DimensionMismatch otherwise. K = rect.rows, M = N, L = rect.width.
DrcsSet construct_drcs(const Rectangle& rect, const ButsonMatrix& b);

// File format: header "K M L r", then K blocks of M lines of L exponents.
std::string drcs_to_text(const DrcsSet& s);
DrcsSet drcs_from_text(const std::string& text);
void drcs_save(const DrcsSet& s, const std::filesystem::path& path);
DrcsSet drcs_load(const std::filesystem::path& path);

// Orientation of a printed per-set table. The published Example-1 tables put
// one row per position n (so printed row n is Butson row pi_k(n)); the
// Example-2 tables put one row per sequence m. Both orientations are needed
// to reproduce the printed artifacts byte-for-byte.
enum class PaperLayout { position_rows, sequence_rows };

// The table for set k as text lines, in the requested orientation.
std::string paper_layout_text(const DrcsSet& s, int k, PaperLayout layout);

}  // namespace drcskit
