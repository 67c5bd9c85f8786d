#ifndef BANDSPEC_ERRORS_HPP
#define BANDSPEC_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bandspec {

/// Syntax error in the expression grammar, with the byte offset it occurred at.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Expression evaluates but the requested result is not defined for it
/// (unknown degree, degree-0 Markov operator, ...).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Materialization would exceed the vertex cap; carries the size it needed.
class CapExceededError : public EvalError {
 public:
  CapExceededError(std::uint64_t required, std::uint64_t cap)
      : EvalError("materialization needs " + std::to_string(required) +
                  " vertices, above the cap of " + std::to_string(cap)),
        required_(required) {}
  std::uint64_t required_vertices() const { return required_; }

 private:
  std::uint64_t required_;
};

}  // namespace bandspec

#endif  // BANDSPEC_ERRORS_HPP
