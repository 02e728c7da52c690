#include "basecomb/digits.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace basecomb {

namespace {

void require_non_negative(const Nat& n, const char* what) {
  if (sgn(n) < 0) throw domain_error(std::string(what) + " must be non-negative");
}

}  // namespace

DigitVec::DigitVec(Base base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= base_.value()) {
      throw invalid_digit("digit " + std::to_string(digits_[i]) + " at position " + std::to_string(i) +
                          " is out of range for base " + std::to_string(base_.value()));
    }
  }
  while (digits_.size() > 1 && digits_.back() == 0) digits_.pop_back();
  if (digits_.empty()) digits_.push_back(0);
}

std::uint64_t DigitVec::digit_sum() const noexcept {
  std::uint64_t s = 0;
  for (Digit d : digits_) s += d;
  return s;
}

DigitVec to_digits(const Nat& n, Base b) {
  require_non_negative(n, "n");
  const Digit base = b.value();
  std::vector<Digit> out;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    unsigned long v = n.get_ui();
    do {
      out.push_back(static_cast<Digit>(v % base));
      v /= base;
    } while (v != 0);
  } else {
    Nat v = n;
    while (sgn(v) != 0) {
      out.push_back(static_cast<Digit>(mpz_tdiv_q_ui(v.get_mpz_t(), v.get_mpz_t(), base)));
    }
  }
  return DigitVec(b, std::move(out));
}

Nat from_digits(std::span<const Digit> digits, Base b) {
  Nat value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] >= b.value()) {
      throw invalid_digit("digit " + std::to_string(digits[i]) + " at position " + std::to_string(i) +
                          " is out of range for base " + std::to_string(b.value()));
    }
    value *= b.value();
    value += digits[i];
  }
  return value;
}

Nat from_digits(const DigitVec& d) { return from_digits(d.digits(), d.base()); }

Nat digit_sum(const Nat& n, Base b) {
  Nat s;
  mpz_set_ui(s.get_mpz_t(), to_digits(n, b).digit_sum());
  return s;
}

Nat digit_count(const Nat& n, Base b, Digit d) {
  if (d >= b.value()) {
    throw invalid_digit("digit " + std::to_string(d) + " is out of range for base " + std::to_string(b.value()));
  }
  const DigitVec digits = to_digits(n, b);
  return static_cast<unsigned long>(std::count(digits.digits().begin(), digits.digits().end(), d));
}

bool dominates(const DigitVec& n, const DigitVec& k) {
  if (!(n.base() == k.base())) throw invalid_base("digit expansions use different bases");
  const std::size_t len = std::max(n.size(), k.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (k[i] > n[i]) return false;
  }
  return true;
}

bool dominates(const Nat& n, const Nat& k, Base b) {
  if (b.value() == 2 && mpz_fits_ulong_p(n.get_mpz_t()) && mpz_fits_ulong_p(k.get_mpz_t())) {
    return (k.get_ui() & ~n.get_ui()) == 0;
  }
  return dominates(to_digits(n, b), to_digits(k, b));
}

bool carry_free_add(const Nat& n, const Nat& m, Base b) {
  const DigitVec dn = to_digits(n, b);
  const DigitVec dm = to_digits(m, b);
  const std::size_t len = std::max(dn.size(), dm.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (std::uint64_t{dn[i]} + dm[i] > b.value() - 1) return false;
  }
  return true;
}

DigitVec dominated_difference(const DigitVec& n, std::span<const Digit> k) {
  std::vector<Digit> out(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    const Digit ki = i < k.size() ? k[i] : 0;
    if (ki > n[i]) throw precondition_error("k is not digitally dominated by n");
    out[i] = n[i] - ki;
  }
  for (std::size_t i = n.size(); i < k.size(); ++i) {
    if (k[i] != 0) throw precondition_error("k is not digitally dominated by n");
  }
  return DigitVec(n.base(), std::move(out));
}

DominatedRange::DominatedRange(const Nat& n, Base b) : bound_(to_digits(n, b)) {}

DominatedRange::DominatedRange(DigitVec n) : bound_(std::move(n)) {}

DominatedRange::iterator DominatedRange::begin() const { return iterator(&bound_); }

Nat DominatedRange::size() const {
  Nat count = 1;
  for (Digit d : bound_.digits()) count *= static_cast<unsigned long>(d) + 1;
  return count;
}

DominatedRange::iterator::iterator(const DigitVec* bound)
    : bound_(bound), digits_(bound->size(), 0), value_(0), done_(false) {
  powers_.reserve(bound->size());
  Nat p = 1;
  for (std::size_t i = 0; i < bound->size(); ++i) {
    powers_.push_back(p);
    p *= bound->base().value();
  }
}

DominatedRange::iterator& DominatedRange::iterator::operator++() {
  std::size_t i = 0;
  while (i < digits_.size() && digits_[i] == (*bound_)[i]) {
    value_ -= powers_[i] * digits_[i];
    digits_[i] = 0;
    ++i;
  }
  if (i == digits_.size()) {
    done_ = true;
  } else {
    ++digits_[i];
    value_ += powers_[i];
  }
  return *this;
}

std::vector<Nat> dominated_list(const Nat& n, Base b) {
  std::vector<Nat> out;
  for (const Nat& k : DominatedRange(n, b)) out.push_back(k);
  return out;
}

}  // namespace basecomb
