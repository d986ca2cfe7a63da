#pragma once

#include <stdexcept>
#include <string>

namespace rpla {

/// Error raised while reading PLA or netlist text. Carries the 1-based
/// source line; the message is already prefixed with it.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] int line() const { return line_; }

  private:
    int line_;
};

} // namespace rpla
