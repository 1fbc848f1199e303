#include "drcskit/drcs.hpp"

#include <fstream>
#include <sstream>

#include "drcskit/manifest.hpp"

namespace drcskit {

DrcsSet construct_drcs(const Rectangle& rect, const ButsonMatrix& b) {
  if (rect.alphabet != b.order) {
    throw ParamError("DimensionMismatch",
                     "rectangle alphabet " + std::to_string(rect.alphabet) +
                         " must equal Butson order " +
                         std::to_string(b.order));
  }
  DrcsSet s;
  s.num_sets = rect.rows;
  s.num_seqs = b.order;
  s.length = rect.width;
  s.root = b.root;
  s.exps.resize(static_cast<size_t>(s.num_sets) * s.num_seqs * s.length);
  for (int k = 0; k < s.num_sets; ++k) {
    for (int m = 0; m < s.num_seqs; ++m) {
      int* dst = s.exps.data() +
                 (static_cast<size_t>(k) * s.num_seqs + m) * s.length;
      for (int n = 0; n < s.length; ++n) {
        dst[n] = b.at(rect.at(k, n), m);
      }
    }
  }
  return s;
}

std::string drcs_to_text(const DrcsSet& s) {
  std::ostringstream out;
  out << s.num_sets << ' ' << s.num_seqs << ' ' << s.length << ' ' << s.root
      << '\n';
  for (int k = 0; k < s.num_sets; ++k) {
    for (int m = 0; m < s.num_seqs; ++m) {
      auto seq = s.seq(k, m);
      for (int n = 0; n < s.length; ++n) {
        if (n) out << ' ';
        out << seq[static_cast<size_t>(n)];
      }
      out << '\n';
    }
  }
  return out.str();
}

DrcsSet drcs_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("ParseError", "empty sequence-set file", 1);
  }
  DrcsSet s;
  {
    std::istringstream header(line);
    if (!(header >> s.num_sets >> s.num_seqs >> s.length >> s.root) ||
        s.num_sets < 0 || s.num_seqs < 0 || s.length < 0 || s.root < 1) {
      throw ParseError("ParseError", "expected header 'K M L r'", 1);
    }
  }
  s.exps.reserve(static_cast<size_t>(s.num_sets) * s.num_seqs * s.length);
  long lineno = 1;
  for (int k = 0; k < s.num_sets; ++k) {
    for (int m = 0; m < s.num_seqs; ++m) {
      ++lineno;
      if (!std::getline(in, line)) {
        throw ParseError("ParseError",
                         "unexpected end of file in set " + std::to_string(k) +
                             " sequence " + std::to_string(m),
                         lineno);
      }
      std::istringstream row(line);
      for (int n = 0; n < s.length; ++n) {
        int e;
        if (!(row >> e)) {
          throw ParseError("ParseError",
                           "set " + std::to_string(k) + " sequence " +
                               std::to_string(m) + " position " +
                               std::to_string(n) + ": expected integer",
                           lineno);
        }
        if (e < 0 || e >= s.root) {
          throw ParseError("ParseError",
                           "set " + std::to_string(k) + " sequence " +
                               std::to_string(m) + " position " +
                               std::to_string(n) + ": exponent " +
                               std::to_string(e) + " outside Z_" +
                               std::to_string(s.root),
                           lineno);
        }
        s.exps.push_back(e);
      }
    }
  }
  return s;
}

void drcs_save(const DrcsSet& s, const std::filesystem::path& path) {
  atomic_write(path, drcs_to_text(s));
}

DrcsSet drcs_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("ParseError", "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return drcs_from_text(buf.str());
}

std::string paper_layout_text(const DrcsSet& s, int k, PaperLayout layout) {
  if (k < 0 || k >= s.num_sets) {
    throw ParamError("IndexOutOfRange",
                     "set " + std::to_string(k) + " of " +
                         std::to_string(s.num_sets));
  }
  std::ostringstream out;
  if (layout == PaperLayout::position_rows) {
    for (int n = 0; n < s.length; ++n) {
      for (int m = 0; m < s.num_seqs; ++m) {
        if (m) out << ' ';
        out << s.at(k, m, n);
      }
      out << '\n';
    }
  } else {
    for (int m = 0; m < s.num_seqs; ++m) {
      for (int n = 0; n < s.length; ++n) {
        if (n) out << ' ';
        out << s.at(k, m, n);
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace drcskit
