#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace drcskit {

// Exception hierarchy mirrored by the CLI exit codes:
//   ValidationError -> 2, ParseError -> 3, ParamError -> 4.
// `name` identifies the failed check (NotPrime, AlphabetMismatch, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string name, const std::string& detail, long line = -1)
      : Error(std::move(name),
              line >= 0 ? "line " + std::to_string(line) + ": " + detail
                        : detail),
        line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_ = -1;
};

class ParamError : public Error {
 public:
  using Error::Error;
};

// Verdict of a structural validator; `detail` names the first offence.
struct ValidationReport {
  bool ok = true;
  std::string detail;
  double worst = 0.0;  // bh_validate: largest off-diagonal |<row_i, row_j>|

  explicit operator bool() const noexcept { return ok; }
};

}  // namespace drcskit
