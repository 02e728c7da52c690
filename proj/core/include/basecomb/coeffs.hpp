#pragma once

#include <cstdint>
#include <span>

#include "basecomb/digits.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb {

/// Classical C(n, k); zero for k > n.
Nat binom(const Nat& n, const Nat& k);

/// C(n, k) for small arguments, as used digit by digit.
Nat digit_binom(Digit n, Digit k);

/// Base-b binomial: prod_i C(n_i, k_i) over zero-padded expansions.
/// Zero exactly when k is not digitally dominated by n.
Nat binom_b(const Nat& n, const Nat& k, Base b);
Nat binom_b(const DigitVec& n, std::span<const Digit> k);

/// binom_b for machine-word arguments whose product of digit binomials
/// fits in 64 bits (always true for b = 2). Throws numeric_error otherwise.
std::uint64_t binom_b_small(std::uint64_t n, std::uint64_t k, Base b);

/// (n!)_b = prod_i n_i!
Nat factorial_b(const Nat& n, Base b);
Nat factorial_b(const DigitVec& n);

/// Rising factorial x (x+1) ... (x+k-1). Exact for every rational x,
/// including the non-positive integers where a Gamma-based formula breaks.
Rat pochhammer(const Rat& x, std::uint64_t k);

/// r-step binomial x (x+r) ... (x+(d-1)r) / d!
Rat step_binom(const Rat& x, const Rat& r, std::uint64_t d);

/// Checks binom_b(n+m, r) = sum_{k <=_b r} binom_b(n, k) binom_b(m, r-k).
/// Throws precondition_error naming the first carrying position when n + m
/// is not carry-free in base b.
VerifyResult verify_chu_vandermonde(const Nat& n, const Nat& m, const Nat& r, Base b);

/// The three binomial power sums
///   sum_k binom_b(n,k)          = 2^s
///   sum_k binom_b(n,k) s_b(k)   = s 2^(s-1)
///   sum_k binom_b(n,k) s_b(k)^2 = s (s+1) 2^(s-2)
/// with s = s_b(n), compared as exact rationals.
VerifyResult verify_power_sum_identities(const Nat& n, Base b);

}  // namespace basecomb
