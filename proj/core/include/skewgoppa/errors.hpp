#pragma once

#include <stdexcept>
#include <string>

namespace skewgoppa {

/// Raised when a construction hypothesis fails (non P-independent point set,
/// factor vanishing at an evaluation point, rank deficiency, ...).  The
/// message names the violated hypothesis.  Maps to CLI exit code 2.
class HypothesisError : public std::runtime_error {
  public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed config text.  Carries the 1-based line number of the
/// offending line (0 when the error is not tied to a single line).  Maps to
/// CLI exit code 3.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

} // namespace skewgoppa
