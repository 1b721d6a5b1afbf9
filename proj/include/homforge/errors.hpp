#pragma once

#include <stdexcept>
#include <string>

namespace homforge {

/// Base class for all homforge errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold (CLI exit 2).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A size cap or search budget was exceeded (CLI exit 3).
class CapError : public Error {
 public:
  explicit CapError(const std::string& what) : Error(what) {}
};

/// Malformed input file; carries a 1-based line number when known.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what, int line = 0)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

}  // namespace homforge
