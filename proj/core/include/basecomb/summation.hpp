#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "basecomb/bivar_poly.hpp"
#include "basecomb/digits.hpp"
#include "basecomb/series.hpp"
#include "basecomb/types.hpp"
#include "basecomb/verify.hpp"

namespace basecomb {

/// f(n_digit, k_digit, position). Must be total on 0 <= k_digit <= n_digit < b
/// and free of side effects; sweeps may call it from several threads.
using DigitKernel = std::function<Rat(Digit n_digit, Digit k_digit, std::size_t position)>;

/// prod_i S(n_i, i) with S(d, i) = sum_{j=0}^{d} f(d, j, i), over n's digits.
Rat product_form(const Nat& n, Base b, const DigitKernel& f);

/// sum_{k <=_b n} prod_i f(n_i, k_i, i)
Rat dominated_sum_form(const Nat& n, Base b, const DigitKernel& f);

/// Digitwise summation theorem: product_form == dominated_sum_form.
VerifyResult verify_theorem1(const Nat& n, Base b, const DigitKernel& f);

/// Number of digit positions K >= 1 needed so that b^K >= order.
std::size_t series_depth(Base b, std::size_t order);

/// Truncation of prod_{i<K} sum_{d<b} g(d, i) t^(d b^i) to the given order,
/// K = series_depth(b, order). Coefficient n equals prod_{i<K} g(n_i, i)
/// with n padded to K digits. Computed as a genuine series product.
template <class Ring, class G>
Series<Ring> digitwise_series_of(Base b, G&& g, std::size_t order) {
  if (order == 0) throw invalid_order("series order must be at least 1");
  const std::size_t depth = series_depth(b, order);
  Series<Ring> out = Series<Ring>::one(order);
  std::size_t stride = 1;  // b^i
  for (std::size_t i = 0; i < depth; ++i) {
    Series<Ring> factor(order);
    for (Digit d = 0; d < b.value() && d * stride < order; ++d) factor[d * stride] = g(d, i);
    out *= factor;
    stride *= b.value();
  }
  return out;
}

Series<Rat> digitwise_series(Base b, const std::function<Rat(Digit, std::size_t)>& g, std::size_t order);

/// (X+Y)^{s_b(n)} = sum_k binom_b(n,k) X^{s_b(k)} Y^{s_b(n-k)}, compared as
/// bivariate polynomials.
VerifyResult verify_digital_binomial(const Nat& n, Base b);

/// Kernel C(n,k) X^k Y^(n-k) with numeric X, Y.
DigitKernel binomial_power_kernel(const Rat& x, const Rat& y);

/// Kernel (X)_k/k! * (Y)_{n-k}/(n-k)!; digit sums are (X+Y)_n/n!.
DigitKernel pochhammer_kernel(const Rat& x, const Rat& y);

/// Kernel binom(x_i; r_i, k) binom(y_i; r_i, n-k) with per-position
/// parameters. Shorter lists repeat their last element.
DigitKernel step_binomial_kernel(std::vector<Rat> xs, std::vector<Rat> ys, std::vector<Rat> rs);

/// prod_i (X+Y)_{n_i}/n_i!  =  sum_{k <=_b n} prod_i (X)_{k_i}/k_i! (Y)_{n_i-k_i}/(n_i-k_i)!
VerifyResult verify_pochhammer_binomial(const Nat& n, Base b, const Rat& x, const Rat& y);

/// prod_i binom(x_i+y_i; r_i, n_i)  =  sum_{k <=_b n} prod_i binom(x_i; r_i, k_i) binom(y_i; r_i, n_i-k_i)
VerifyResult verify_step_binomial(const Nat& n, Base b, const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                  const std::vector<Rat>& rs);

}  // namespace basecomb
