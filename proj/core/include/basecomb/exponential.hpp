#pragma once

#include <cstddef>
#include <cstdint>

#include "basecomb/bivar_poly.hpp"
#include "basecomb/series.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb {

/// Power series in w whose coefficients are polynomials; for series built
/// from a single variable, that variable is stored as x.
struct DigitalSeries {
  Base base;
  Series<BivarPoly> coeffs;

  [[nodiscard]] std::size_t order() const noexcept { return coeffs.order(); }
};

/// e_b(x, w) = sum_k x^{s_b(k)} / (k!)_b w^k up to the given order.
DigitalSeries exp_b_symbolic(Base b, std::size_t order);

/// The series 1 + 0 w + 0 w^2 + ..., identity of star_convolve.
DigitalSeries unit_series(Base b, std::size_t order);

/// Expands prod_{i<depth} sum_{k<b} (x w^{b^i})^k / k! into a polynomial in w
/// of order b^depth with polynomial-in-x coefficients.
Series<BivarPoly> exp_b_product_expansion(Base b, std::size_t depth);

/// exp_b_product_expansion(b, depth) == exp_b_symbolic(b, b^depth), exactly.
VerifyResult verify_exp_coefficients(Base b, std::size_t depth);

/// Gamma(a, z) for integer a >= 1 and z >= 0 through the finite sum
/// (a-1)! e^{-z} sum_{k<a} z^k / k!. Throws domain_error for z < 0 or a = 0.
double upper_gamma_int(std::uint64_t a, double z);

/// Gamma(a, z) / Gamma(a), accurate also when it is close to 1.
double upper_gamma_ratio(std::uint64_t a, double z);

/// log(Gamma(a, z) / Gamma(a)) without cancellation for small z.
double log_upper_gamma_ratio(std::uint64_t a, double z);

/// prod_{i<depth} sum_{k<b} (x w^{b^i})^k / k!  for 0 <= w < 1, depth >= 1.
double exp_b_product(double x, double w, Base b, std::size_t depth);

/// sum_{k<terms} x^{s_b(k)} w^k / (k!)_b, summed in increasing k.
double exp_b_series_numeric(double x, double w, Base b, std::size_t terms);

struct ExpApprox {
  double geometric;  ///< exp(x sum_{i<depth} w^{b^i})
  double two_term;   ///< exp(x w + x w^b)
};

ExpApprox exp_b_approx(double x, double w, Base b, std::size_t depth);

/// Smallest K with w^{b^K} < 1e-300, capped at 16 (at least 1).
std::size_t default_depth(double w, Base b);

/// sum_{i<depth} log(Gamma(b, x w^{b^i}) / Gamma(b))
double log_gamma_sum(double x, double w, Base b, std::size_t depth);

/// (1/b) w^b / (1 - w)
double log_gamma_bound(double w, Base b);

/// Slack applied to log_gamma_bound, since the bound comes from a
/// first-order expansion of log Gamma(b, z).
inline constexpr double kLogGammaSlack = 2.0;

/// |log_gamma_sum| <= kLogGammaSlack * log_gamma_bound for 0 <= x < 1 and
/// 0 <= w < 1. lhs/rhs hold the exact rationals of the two doubles.
VerifyResult check_log_gamma_bound(double x, double w, Base b, std::size_t depth);

/// Coefficient n of the result is sum_{k <=_b n} A_k(x) B_{n-k}(y): A is read
/// in x and B with its variables swapped, so B's x becomes y.
/// Throws shape_error on base or order mismatch.
DigitalSeries star_convolve(const DigitalSeries& a, const DigitalSeries& b);

/// e_b(x,w) star e_b(y,w) == e_b(x+y,w) coefficientwise up to the order,
/// with the right side expanded as (x+y)^{s_b(n)} / (n!)_b.
VerifyResult verify_exp_convolution(Base b, std::size_t order);

}  // namespace basecomb
