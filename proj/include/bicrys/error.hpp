#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicrys {

// Malformed text input: polynomial source, spec documents, CLI literals.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos
                               ? what
                               : what + " at position " + std::to_string(position)),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A documented precondition of an operation does not hold.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failure detected by a verification routine.
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bicrys
