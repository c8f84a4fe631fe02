#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cycinv {

// Bad user input: weights, graph files, command options.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Objects from incompatible rings or of mismatched dimension were combined.
struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// A computation would exceed a configured size limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee was violated (e.g. a factorization that must exist
// was not found). Always a bug or a counterexample; never swallowed.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

}  // namespace cycinv
