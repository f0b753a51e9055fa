#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubrep {

// Rejected input: precondition failures the caller can fix.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A proven invariant failed at runtime. Always an implementation bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded randomized search gave up (e.g. Las Vegas redraw cap reached).
class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line 0: the error is not tied to a line (JSON field checks).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace cubrep
