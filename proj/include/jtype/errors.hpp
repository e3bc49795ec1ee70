#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jtype {

using Int = std::int64_t;

// Math-level inconsistency: bad ranges, divisibility failures, negative
// multiplicities.  The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input.  The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OverflowError : public ValidationError {
 public:
  OverflowError() : ValidationError("integer overflow") {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

}  // namespace jtype
