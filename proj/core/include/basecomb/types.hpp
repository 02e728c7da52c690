#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace basecomb {

/// Arbitrary-precision integer. Counting values (binomials, factorials,
/// Stirling and Fibonacci numbers) are always non-negative.
using Nat = mpz_class;

/// Exact rational, kept in lowest terms with a positive denominator.
using Rat = mpq_class;

using Digit = std::uint32_t;

struct invalid_base : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_digit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct invalid_order : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an identity the library relies on internally turns out not
/// to hold (for instance a quotient that must be integral is not).
struct internal_inconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// Radix of a digit expansion. Constructing one validates b >= 2.
class Base {
 public:
  static constexpr std::int64_t kMax = std::int64_t{1} << 31;

  Base(std::int64_t value) : value_(static_cast<Digit>(value)) {  // NOLINT: implicit on purpose
    if (value < 2 || value > kMax) {
      throw invalid_base("base must satisfy 2 <= b <= 2^31, got " + std::to_string(value));
    }
  }

  [[nodiscard]] Digit value() const noexcept { return value_; }
  friend bool operator==(Base, Base) = default;

 private:
  Digit value_;
};

/// Throws numeric_error unless `value` is finite.
double require_finite(double value, const char* what);

/// Converts to std::uint64_t, throwing domain_error if negative or too large.
std::uint64_t to_u64(const Nat& value, const char* what);

}  // namespace basecomb
