#include "drcskit/rectangle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "drcskit/manifest.hpp"

namespace drcskit {

namespace {

void validate_or_throw(const Rectangle& r, const char* builder) {
  if (auto c1 = validate_c1(r); !c1) {
    throw ValidationError("C1Failed",
                          std::string(builder) + ": " + c1.detail);
  }
  if (auto c2 = validate_c2(r); !c2) {
    throw ValidationError("C2Failed",
                          std::string(builder) + ": " + c2.detail);
  }
}

}  // namespace

Rectangle build_quasi_florentine(const FieldCtx& ctx) {
  const long q = ctx.order();
  Rectangle r;
  r.rows = static_cast<int>(q);
  r.width = static_cast<int>(q - 1);
  r.alphabet = static_cast<int>(q);
  r.entries.resize(static_cast<size_t>(r.rows) * r.width);
  for (long j = 0; j < q - 1; ++j) {
    const FieldElem aj = ctx.alpha_pow(j);
    r.entries[static_cast<size_t>(j)] = static_cast<int>(ctx.psi(aj));
    for (long i = 1; i < q; ++i) {
      const FieldElem sum = ctx.add(aj, ctx.alpha_pow(i - 1));
      r.entries[static_cast<size_t>(i) * r.width + j] =
          static_cast<int>(ctx.psi(sum));
    }
  }
  validate_or_throw(r, "build_quasi_florentine");
  return r;
}

Rectangle extend_quasi_florentine(const Rectangle& r, int new_symbol,
                                  ExtendSide side) {
  if (new_symbol != r.alphabet) {
    throw ParamError("AlphabetMismatch",
                     "new symbol " + std::to_string(new_symbol) +
                         " must equal the alphabet size " +
                         std::to_string(r.alphabet));
  }
  if (r.width != r.alphabet - 1) {
    throw ParamError("BadShape", "expected a K x (S-1) rectangle, got K x " +
                                     std::to_string(r.width) + " over Z_" +
                                     std::to_string(r.alphabet));
  }
  Rectangle out;
  out.rows = r.rows;
  out.width = r.width + 1;
  out.alphabet = r.alphabet + 1;
  out.entries.resize(static_cast<size_t>(out.rows) * out.width);
  for (int k = 0; k < r.rows; ++k) {
    auto src = r.row(k);
    int* dst = out.entries.data() + static_cast<size_t>(k) * out.width;
    if (side == ExtendSide::right) {
      std::copy(src.begin(), src.end(), dst);
      dst[r.width] = new_symbol;
    } else {
      dst[0] = new_symbol;
      std::copy(src.begin(), src.end(), dst + 1);
    }
  }
  validate_or_throw(out, "extend_quasi_florentine");
  return out;
}

Rectangle build_florentine_circulant(int q) {
  if (!is_prime(q) || q < 3) {
    throw ParamError("NotPrime", "q = " + std::to_string(q) +
                                     " must be a prime >= 3");
  }
  Rectangle r;
  r.rows = q - 1;
  r.width = q - 1;
  r.alphabet = q - 1;
  r.entries.resize(static_cast<size_t>(r.rows) * r.width);
  for (int k = 0; k < r.rows; ++k) {
    for (int j = 0; j < r.width; ++j) {
      r.entries[static_cast<size_t>(k) * r.width + j] =
          static_cast<int>((static_cast<long>(k + 1) * (j + 1)) % q) - 1;
    }
  }
  validate_or_throw(r, "build_florentine_circulant");
  return r;
}

ValidationReport validate_c1(const Rectangle& r) {
  std::vector<int> seen(static_cast<size_t>(r.alphabet), -1);
  for (int k = 0; k < r.rows; ++k) {
    for (int j = 0; j < r.width; ++j) {
      const int sym = r.at(k, j);
      if (sym < 0 || sym >= r.alphabet) {
        return {false,
                "row " + std::to_string(k) + ": symbol " +
                    std::to_string(sym) + " outside alphabet Z_" +
                    std::to_string(r.alphabet)};
      }
      if (seen[static_cast<size_t>(sym)] == k) {
        return {false, "row " + std::to_string(k) + ": symbol " +
                           std::to_string(sym) + " repeated"};
      }
      seen[static_cast<size_t>(sym)] = k;
    }
  }
  return {};
}

ValidationReport validate_c2(const Rectangle& r) {
  if (r.alphabet <= 0) return {};
  const size_t cells = static_cast<size_t>(r.alphabet) * r.alphabet;
  std::vector<int> owner(cells);
  // A (a, b, m) pattern may appear in at most one row; a second occurrence in
  // the same row only violates C1, which is not this check's job.
  for (int m = 1; m < r.width; ++m) {
    std::fill(owner.begin(), owner.end(), -1);
    for (int k = 0; k < r.rows; ++k) {
      for (int i = 0; i + m < r.width; ++i) {
        const int a = r.at(k, i);
        const int b = r.at(k, i + m);
        if (a < 0 || a >= r.alphabet || b < 0 || b >= r.alphabet) {
          return {false, "row " + std::to_string(k) +
                             ": symbol outside alphabet Z_" +
                             std::to_string(r.alphabet)};
        }
        const size_t idx = static_cast<size_t>(a) * r.alphabet + b;
        if (owner[idx] >= 0 && owner[idx] != k) {
          return {false, "pair (" + std::to_string(a) + "," +
                             std::to_string(b) + ") at gap " +
                             std::to_string(m) + " appears in rows " +
                             std::to_string(owner[idx]) + " and " +
                             std::to_string(k)};
        }
        owner[idx] = k;
      }
    }
  }
  return {};
}

std::vector<int> row_permutation(const Rectangle& r, int k) {
  if (k < 0 || k >= r.rows) {
    throw ParamError("IndexOutOfRange",
                     "row " + std::to_string(k) + " of " +
                         std::to_string(r.rows));
  }
  auto row = r.row(k);
  std::vector<int> seen(static_cast<size_t>(r.alphabet), 0);
  for (int sym : row) {
    if (sym < 0 || sym >= r.alphabet || seen[static_cast<size_t>(sym)]++) {
      throw ValidationError("C1Failed", "row " + std::to_string(k) +
                                            " is not injective");
    }
  }
  return {row.begin(), row.end()};
}

std::string rect_to_text(const Rectangle& r) {
  std::ostringstream out;
  out << r.rows << ' ' << r.width << ' ' << r.alphabet << '\n';
  for (int k = 0; k < r.rows; ++k) {
    for (int j = 0; j < r.width; ++j) {
      if (j) out << ' ';
      out << r.at(k, j);
    }
    out << '\n';
  }
  return out.str();
}

Rectangle rect_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("ParseError", "empty rectangle file", 1);
  }
  Rectangle r;
  {
    std::istringstream header(line);
    if (!(header >> r.rows >> r.width >> r.alphabet) || r.rows < 0 ||
        r.width < 0 || r.alphabet < 0) {
      throw ParseError("ParseError", "expected header 'K W S'", 1);
    }
  }
  r.entries.reserve(static_cast<size_t>(r.rows) * r.width);
  for (int k = 0; k < r.rows; ++k) {
    if (!std::getline(in, line)) {
      throw ParseError("ParseError", "unexpected end of file, expected row " +
                                         std::to_string(k),
                       k + 2);
    }
    std::istringstream row(line);
    for (int j = 0; j < r.width; ++j) {
      int v;
      if (!(row >> v)) {
        throw ParseError("ParseError",
                         "row " + std::to_string(k) + " field " +
                             std::to_string(j) + ": expected integer",
                         k + 2);
      }
      if (v < 0 || v >= r.alphabet) {
        throw ParseError("ParseError",
                         "row " + std::to_string(k) + " field " +
                             std::to_string(j) + ": symbol " +
                             std::to_string(v) + " outside Z_" +
                             std::to_string(r.alphabet),
                         k + 2);
      }
      r.entries.push_back(v);
    }
    int extra;
    if (row >> extra) {
      throw ParseError("ParseError",
                       "row " + std::to_string(k) + ": trailing data", k + 2);
    }
  }
  return r;
}

void rect_save(const Rectangle& r, const std::filesystem::path& path) {
  atomic_write(path, rect_to_text(r));
}

Rectangle rect_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("ParseError", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return rect_from_text(buf.str());
}

}  // namespace drcskit
