#pragma once

#include <cstdint>
#include <vector>

#include "basecomb/digits.hpp"
#include "basecomb/series.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb {

// Fibonacci numbers here start F_0 = 1, F_1 = 1, so F_2 = 2, F_3 = 3, F_4 = 5.

/// Memoized F_0..F_max under the F_0 = F_1 = 1 convention.
class FibTable {
 public:
  explicit FibTable(std::uint64_t max);

  [[nodiscard]] std::uint64_t max() const noexcept { return values_.size() - 1; }
  [[nodiscard]] const Nat& operator[](std::uint64_t n) const;

 private:
  std::vector<Nat> values_;
};

Nat fib(std::uint64_t n);

/// prod_i F_{n_i}
Nat fib_b(const Nat& n, Base b);

/// sum_{k <=_b n} binom_b(n - k, k)
Nat fib_b_dominated(const Nat& n, Base b);

/// sum_{k=0}^{n} binom_b(n - k, k) in base 2, with no dominance restriction.
Nat fib_tilde2(const Nat& n);

/// Stern's diatomic sequence: a_0 = 0, a_1 = 1, a_{2n} = a_n,
/// a_{2n+1} = a_n + a_{n+1}.
Nat stern(const Nat& n);

/// sum_n fib_b(n) z^n truncated to the given order, built as the digitwise
/// product prod_i sum_{d<b} F_d z^{d b^i}.
Series<Rat> fib_b_genfun(Base b, std::size_t order);

/// Bundle of block identities at index n (parts keyed by sub-identity):
///   fib-block      F_{bn+p} = F_n^(b) F_p,                          0 <= p < b
///   fib-block-sum  sum_{k<b} F_{bn+k} = 2F_{bn+b-1} + F_{bn+b-2} - F_n   (b >= 3)
///   fib-range-sum  sum_{k=p}^{q} F_{bn+k} = F_{bn+q+2} - F_{bn+p+1},   0 <= p <= q <= b-3
///   fib-cassini    F_{bn+q}^2 - F_{bn+q+1} F_{bn+q-1} = (-1)^q F_n^2, 1 <= q <= b-2
///   fib-catalan    F_{bn+q}^2 - F_{bn+q+r} F_{bn+q-r} = (-1)^{q-r+1} F_{r-1}^2 F_n^2,
///                  1 <= r <= q <= b-1-r
/// All F above are base-b Fibonacci numbers except the bare digit factors.
VerifyResult verify_fib_identities(const Nat& n, Base b);

/// fib_b(n) == fib_b_dominated(n)
VerifyResult verify_fib_dominated(const Nat& n, Base b);

/// fib_b(n, 3) == 2^{number of 2 digits of n in base 3}
VerifyResult verify_ternary_count(const Nat& n);

/// fib_tilde2(n) == stern(n + 1)
VerifyResult verify_stern_equivalence(const Nat& n);

/// The generalized Cassini identity with sign (-1)^{n-r+1} in place of
/// (-1)^{q-r+1}, over the same (q, r) range as fib-catalan. Diagnostic only.
VerifyResult probe_catalan_alt_sign(const Nat& n, Base b);

}  // namespace basecomb
