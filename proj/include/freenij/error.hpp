#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freenij {

/// Domain error: invalid basis index, inadmissible base for an operation,
/// malformed input, and similar caller-visible failures.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Syntax or letter/base-mismatch error in expression text, with the byte
/// offset at which it was detected.
class ParseError : public Error {
  public:
    ParseError(std::size_t position, const std::string &what)
        : Error("syntax error at position " + std::to_string(position) + ": " + what),
          position_(position)
    {
    }

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace freenij
