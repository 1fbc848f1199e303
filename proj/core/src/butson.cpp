#include "drcskit/butson.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "drcskit/manifest.hpp"
#include "drcskit/registry.hpp"

namespace drcskit {

ButsonMatrix bh_dft(int n) {
  if (n < 1) throw ParamError("BadOrder", "order must be >= 1");
  ButsonMatrix b;
  b.order = n;
  b.root = n;
  b.exps.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.exps[static_cast<size_t>(i) * n + j] =
          static_cast<int>((static_cast<long>(i) * j) % n);
    }
  }
  return b;
}

ButsonMatrix bh_walsh(int m) {
  if (m < 1) throw ParamError("BadOrder", "m must be >= 1");
  if (m > 15) throw ParamError("BadOrder", "2^m exceeds supported range");
  const int n = 1 << m;
  ButsonMatrix b;
  b.order = n;
  b.root = 2;
  b.exps.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b.exps[static_cast<size_t>(i) * n + j] =
          std::popcount(static_cast<unsigned>(i & j)) & 1;
    }
  }
  return b;
}

ButsonMatrix bh_kronecker(const ButsonMatrix& a, const ButsonMatrix& b) {
  if (a.order < 1 || a.root < 1 || b.order < 1 || b.root < 1) {
    throw ParamError("BadOrder", "kronecker factors must have order and "
                                 "root order >= 1");
  }
  const int r = static_cast<int>(std::lcm(a.root, b.root));
  const int fa = r / a.root;
  const int fb = r / b.root;
  ButsonMatrix out;
  out.order = a.order * b.order;
  out.root = r;
  out.exps.resize(static_cast<size_t>(out.order) * out.order);
  for (int i1 = 0; i1 < a.order; ++i1) {
    for (int i2 = 0; i2 < b.order; ++i2) {
      const int i = i1 * b.order + i2;
      for (int j1 = 0; j1 < a.order; ++j1) {
        for (int j2 = 0; j2 < b.order; ++j2) {
          const int j = j1 * b.order + j2;
          out.exps[static_cast<size_t>(i) * out.order + j] =
              (fa * a.at(i1, j1) + fb * b.at(i2, j2)) % r;
        }
      }
    }
  }
  return out;
}

ButsonMatrix bh_seed(std::string_view name) {
  if (name == registry::example1_bh_name()) {
    return registry::example1_bh();
  }
  throw ParamError("UnknownSeed", "no embedded seed named '" +
                                      std::string(name) + "'");
}

std::vector<std::string> bh_seed_names() {
  return {registry::example1_bh_name()};
}

ValidationReport bh_validate(const ButsonMatrix& b) {
  const int n = b.order;
  const int r = b.root;
  if (n < 1 || r < 1 ||
      b.exps.size() != static_cast<size_t>(n) * n) {
    return {false, "malformed matrix header"};
  }
  for (size_t i = 0; i < b.exps.size(); ++i) {
    if (b.exps[i] < 0 || b.exps[i] >= r) {
      return {false, "exponent " + std::to_string(b.exps[i]) +
                         " outside Z_" + std::to_string(r)};
    }
  }
  std::vector<std::complex<double>> roots(static_cast<size_t>(r));
  for (int e = 0; e < r; ++e) {
    roots[static_cast<size_t>(e)] =
        std::polar(1.0, 2.0 * std::numbers::pi * e / r);
  }
  const double tol = 1e-9 * n;
  ValidationReport report;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::complex<double> inner = 0.0;
      for (int m = 0; m < n; ++m) {
        int d = b.at(i, m) - b.at(j, m);
        if (d < 0) d += r;
        inner += roots[static_cast<size_t>(d)];
      }
      const double mag = std::abs(inner);
      if (mag > report.worst) report.worst = mag;
      if (mag > tol && report.ok) {
        report.ok = false;
        report.detail = "rows " + std::to_string(i) + " and " +
                        std::to_string(j) + ": |inner product| = " +
                        std::to_string(mag);
      }
    }
  }
  return report;
}

std::string bh_to_text(const ButsonMatrix& b) {
  std::ostringstream out;
  out << b.order << ' ' << b.root << '\n';
  for (int i = 0; i < b.order; ++i) {
    for (int j = 0; j < b.order; ++j) {
      if (j) out << ' ';
      out << b.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

ButsonMatrix bh_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("ParseError", "empty Butson file", 1);
  }
  ButsonMatrix b;
  {
    std::istringstream header(line);
    if (!(header >> b.order >> b.root) || b.order < 1 || b.root < 1) {
      throw ParseError("ParseError", "expected header 'N r'", 1);
    }
  }
  b.exps.reserve(static_cast<size_t>(b.order) * b.order);
  for (int i = 0; i < b.order; ++i) {
    if (!std::getline(in, line)) {
      throw ParseError("ParseError", "unexpected end of file, expected row " +
                                         std::to_string(i),
                       i + 2);
    }
    std::istringstream row(line);
    for (int j = 0; j < b.order; ++j) {
      int e;
      if (!(row >> e)) {
        throw ParseError("ParseError",
                         "row " + std::to_string(i) + " field " +
                             std::to_string(j) + ": expected integer",
                         i + 2);
      }
      if (e < 0 || e >= b.root) {
        throw ParseError("ParseError",
                         "row " + std::to_string(i) + " field " +
                             std::to_string(j) + ": exponent " +
                             std::to_string(e) + " outside Z_" +
                             std::to_string(b.root),
                         i + 2);
      }
      b.exps.push_back(e);
    }
  }
  return b;
}

void bh_save(const ButsonMatrix& b, const std::filesystem::path& path) {
  atomic_write(path, bh_to_text(b));
}

ButsonMatrix bh_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("ParseError", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return bh_from_text(buf.str());
}

}  // namespace drcskit
