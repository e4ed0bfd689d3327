/**
 * @file common.hpp
 * @brief Error types and overflow-checked 64-bit integer arithmetic.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aatoric {

using Int = std::int64_t;

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input sequence rejected by validation.
class validation_error : public error {
 public:
  enum class kind {
    too_short,
    not_positive,
    not_arithmetic,
    gcd_not_one,
    not_minimally_generated,
  };

  validation_error(kind k, const std::string& what) : error(what), kind_(k) {}
  kind which() const { return kind_; }

 private:
  kind kind_;
};

/// Checked integer arithmetic overflowed.
class overflow_error : public error {
 public:
  using error::error;
};

/// An identity the library relies on failed to hold; indicates a bug,
/// never valid-input behavior.
class internal_inconsistency : public error {
 public:
  using error::error;
};

class not_a_member : public error {
 public:
  using error::error;
};

class non_unique_representation : public error {
 public:
  using error::error;
};

class non_homogeneous_input : public error {
 public:
  using error::error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw overflow_error("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw overflow_error("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace aatoric
