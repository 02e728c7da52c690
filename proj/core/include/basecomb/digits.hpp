#pragma once

#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "basecomb/types.hpp"

namespace basecomb {

/// Little-endian base-b expansion: digit i is the coefficient of b^i.
///
/// Always canonical: zero is the single digit [0], otherwise the most
/// significant stored digit is nonzero. Reads past the stored length
/// return 0, which gives the zero-padding used for digitwise comparisons.
class DigitVec {
 public:
  /// Validates every digit against the base and strips high zero digits.
  DigitVec(Base base, std::vector<Digit> digits);

  [[nodiscard]] Base base() const noexcept { return base_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }
  [[nodiscard]] Digit operator[](std::size_t i) const noexcept {
    return i < digits_.size() ? digits_[i] : Digit{0};
  }

  [[nodiscard]] std::uint64_t digit_sum() const noexcept;

  friend bool operator==(const DigitVec&, const DigitVec&) = default;

 private:
  Base base_;
  std::vector<Digit> digits_;
};

DigitVec to_digits(const Nat& n, Base b);
Nat from_digits(const DigitVec& d);
/// Horner evaluation of raw digits; throws invalid_digit on d >= b.
Nat from_digits(std::span<const Digit> digits, Base b);

Nat digit_sum(const Nat& n, Base b);
/// Number of positions of the canonical expansion holding digit d.
Nat digit_count(const Nat& n, Base b, Digit d);

/// k <=_b n: every digit of k is at most the matching digit of n.
bool dominates(const Nat& n, const Nat& k, Base b);
bool dominates(const DigitVec& n, const DigitVec& k);

/// True iff adding n and m in base b produces no carry.
bool carry_free_add(const Nat& n, const Nat& m, Base b);

/// Ascending enumeration of { k : k <=_b n } by an odometer over the digit
/// ranges [0, n_i]. Yields prod(n_i + 1) values.
class DominatedRange {
 public:
  class iterator;
  struct sentinel {};

  DominatedRange(const Nat& n, Base b);
  explicit DominatedRange(DigitVec n);

  [[nodiscard]] iterator begin() const;
  [[nodiscard]] sentinel end() const noexcept { return {}; }

  [[nodiscard]] const DigitVec& bound() const noexcept { return bound_; }
  /// prod(n_i + 1)
  [[nodiscard]] Nat size() const;

 private:
  DigitVec bound_;
};

class DominatedRange::iterator {
 public:
  using value_type = Nat;
  using difference_type = std::ptrdiff_t;

  iterator() = default;

  const Nat& operator*() const noexcept { return value_; }
  /// Digits of the current k, padded to the bound's length.
  [[nodiscard]] std::span<const Digit> digits() const noexcept { return digits_; }

  iterator& operator++();
  void operator++(int) { ++*this; }

  friend bool operator==(const iterator& it, sentinel) noexcept { return it.done_; }

 private:
  friend class DominatedRange;
  explicit iterator(const DigitVec* bound);

  const DigitVec* bound_ = nullptr;
  std::vector<Digit> digits_;
  std::vector<Nat> powers_;
  Nat value_;
  bool done_ = true;
};

/// Calls f(k_digits) for every k <=_b n in ascending order, where k_digits
/// is padded to n's length. Cheaper than DominatedRange when the integer
/// value of k is not needed.
template <class F>
void for_each_dominated(const DigitVec& n, F&& f) {
  std::vector<Digit> k(n.size(), 0);
  for (;;) {
    f(std::span<const Digit>(k));
    std::size_t i = 0;
    while (i < k.size() && k[i] == n[i]) {
      k[i] = 0;
      ++i;
    }
    if (i == k.size()) return;
    ++k[i];
  }
}

/// Digitwise difference n - k for k <=_b n (no borrows occur).
DigitVec dominated_difference(const DigitVec& n, std::span<const Digit> k);

std::vector<Nat> dominated_list(const Nat& n, Base b);

}  // namespace basecomb
