#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "basecomb/digits.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb {

/// Memoized S(n, k), 0 <= k <= n <= n_max, filled by
/// S(n,k) = S(n-1,k-1) + k S(n-1,k). Immutable once built.
class StirlingTable {
 public:
  explicit StirlingTable(std::uint64_t n_max);

  [[nodiscard]] std::uint64_t n_max() const noexcept { return n_max_; }
  /// Zero for k > n. Throws domain_error when n > n_max.
  [[nodiscard]] const Nat& at(std::uint64_t n, std::uint64_t k) const;

 private:
  std::uint64_t n_max_;
  std::vector<std::vector<Nat>> rows_;
};

/// Stirling number of the second kind.
Nat stirling2(std::uint64_t n, std::uint64_t k);

/// prod_i S(n, k_i) over the canonical base-b digits of k; n is not expanded.
Nat stirling2_b(std::uint64_t n, const Nat& k, Base b);

/// (1/(k!)_b) sum_{j<=k} (-1)^{s_b(k)-s_b(j)} binom_b(k,j) (prod_i j_i)^n,
/// evaluated over Rat. Throws internal_inconsistency if the quotient is
/// not a non-negative integer.
Nat stirling2_b_explicit(std::uint64_t n, const Nat& k, Base b);

/// stirling2_b(n, k, b) == the explicit alternating sum, compared as
/// rationals so a non-integral sum shows up as a failure rather than a throw.
VerifyResult verify_stirling_explicit(std::uint64_t n, const Nat& k, Base b);

/// prod_i S(n, k_i) = prod_i (S(n-1, k_i-1) + k_i S(n-1, k_i)), n >= 1.
VerifyResult verify_stirling_recurrence(std::uint64_t n, const Nat& k, Base b);

/// prod_i S(n, ks_i)
Nat stirling_tuple(std::uint64_t n, std::span<const std::uint64_t> ks);

/// m (m-1) ... (m-k+1); zero for k > m.
Nat falling(std::uint64_t m, std::uint64_t k);

/// Applies both sides of theta_N^n = sum_k prod_i S(n,k_i) x_i^{k_i} D_i^{k_i}
/// to the monomial prod_i x_i^{m_i}:
///   (prod_i m_i)^n == sum_{k_i <= n} stirling_tuple(n, k) prod_i falling(m_i, k_i)
VerifyResult verify_theta_identity(std::uint64_t n, std::span<const std::uint64_t> m);

struct DiscrepancyReport {
  std::vector<Rat> params;
  Rat lhs;
  Rat rhs;
  bool equal = false;
  std::string note;
};

/// Compares the product definition of {n brace k}_b with the expression
/// ((-1)^{s_b(k)} / (k!)_b) * Delta^{s_b(k)} x^n |_{x=0}, where
/// Delta^m x^n |_0 = sum_j (-1)^{m-j} C(m,j) j^n. Reports, never asserts.
DiscrepancyReport probe_forward_difference(std::uint64_t n, const Nat& k, Base b);

}  // namespace basecomb
