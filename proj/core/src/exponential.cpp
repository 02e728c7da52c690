#include "basecomb/exponential.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "basecomb/coeffs.hpp"
#include "basecomb/digits.hpp"
#include "basecomb/summation.hpp"

namespace basecomb {

namespace {

Rat rat_u(unsigned long v) { return Rat(v); }

Rat inverse_factorial(Digit d) {
  Nat f;
  mpz_fac_ui(f.get_mpz_t(), d);
  return Rat(Nat(1), f);
}

void require_unit_interval(double w) {
  if (!(w >= 0.0 && w < 1.0)) throw domain_error("w must satisfy 0 <= w < 1, got " + std::to_string(w));
}

void require_depth(std::size_t depth) {
  if (depth == 0) throw domain_error("product depth must be at least 1");
}

std::size_t checked_power(Base b, std::size_t depth) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    if (__builtin_mul_overflow(out, b.value(), &out)) throw invalid_order("b^depth overflows");
  }
  return out;
}

// e^{-z} sum_{k >= a} z^k / k!, the regularized lower incomplete gamma.
double lower_gamma_ratio_series(std::uint64_t a, double z) {
  double term = std::exp(-z);
  for (std::uint64_t k = 1; k <= a; ++k) term *= z / static_cast<double>(k);
  double sum = 0.0;
  for (std::uint64_t k = a + 1; term != 0.0; ++k) {
    sum += term;
    if (term < sum * 1e-18) break;
    term *= z / static_cast<double>(k);
  }
  return sum;
}

// e^{-z} sum_{k < a} z^k / k!
double upper_gamma_ratio_sum(std::uint64_t a, double z) {
  double term = 1.0;
  double sum = 0.0;
  for (std::uint64_t k = 0; k < a; ++k) {
    sum += term;
    term *= z / static_cast<double>(k + 1);
  }
  return std::exp(-z) * sum;
}

void check_gamma_args(std::uint64_t a, double z) {
  if (a == 0) throw domain_error("incomplete gamma order must be at least 1");
  if (!(z >= 0.0)) throw domain_error("incomplete gamma argument must be non-negative");
  require_finite(z, "z");
}

}  // namespace

DigitalSeries exp_b_symbolic(Base b, std::size_t order) {
  Series<BivarPoly> coeffs(order);
  for (std::size_t k = 0; k < order; ++k) {
    const DigitVec dk = to_digits(Nat(static_cast<unsigned long>(k)), b);
    coeffs[k] = BivarPoly::monomial(static_cast<std::uint32_t>(dk.digit_sum()), 0, Rat(Nat(1), factorial_b(dk)));
  }
  return {b, std::move(coeffs)};
}

DigitalSeries unit_series(Base b, std::size_t order) { return {b, Series<BivarPoly>::one(order)}; }

Series<BivarPoly> exp_b_product_expansion(Base b, std::size_t depth) {
  require_depth(depth);
  const std::size_t order = checked_power(b, depth);
  return digitwise_series_of<BivarPoly>(
      b, [](Digit d, std::size_t) { return BivarPoly::monomial(d, 0, inverse_factorial(d)); }, order);
}

VerifyResult verify_exp_coefficients(Base b, std::size_t depth) {
  const Series<BivarPoly> product = exp_b_product_expansion(b, depth);
  const DigitalSeries symbolic = exp_b_symbolic(b, product.order());
  std::vector<VerifyResult> parts;
  parts.reserve(product.order());
  for (std::size_t n = 0; n < product.order(); ++n) {
    parts.push_back(make_result("exp-coefficient", {rat_u(b.value()), rat_u(depth), rat_u(n)}, product[n],
                                symbolic.coeffs[n]));
  }
  return combine("exp-coefficients", {rat_u(b.value()), rat_u(depth)}, std::move(parts));
}

double upper_gamma_ratio(std::uint64_t a, double z) {
  check_gamma_args(a, z);
  const double q = upper_gamma_ratio_sum(a, z);
  if (q > 0.5) return 1.0 - lower_gamma_ratio_series(a, z);
  return q;
}

double log_upper_gamma_ratio(std::uint64_t a, double z) {
  check_gamma_args(a, z);
  const double q = upper_gamma_ratio_sum(a, z);
  if (q > 0.5) return std::log1p(-lower_gamma_ratio_series(a, z));
  return std::log(q);
}

double upper_gamma_int(std::uint64_t a, double z) {
  check_gamma_args(a, z);
  return require_finite(std::tgamma(static_cast<double>(a)) * upper_gamma_ratio(a, z), "Gamma(a, z)");
}

double exp_b_product(double x, double w, Base b, std::size_t depth) {
  require_finite(x, "x");
  require_unit_interval(w);
  require_depth(depth);
  double product = 1.0;
  double power = w;  // w^{b^i}
  for (std::size_t i = 0; i < depth; ++i) {
    const double t = x * power;
    double term = 1.0;
    double factor = 0.0;
    for (Digit k = 0; k < b.value(); ++k) {
      factor += term;
      term *= t / static_cast<double>(k + 1);
      if (term == 0.0) break;
    }
    product *= factor;
    power = std::pow(power, static_cast<double>(b.value()));
  }
  return require_finite(product, "base-b exponential product");
}

double exp_b_series_numeric(double x, double w, Base b, std::size_t terms) {
  require_finite(x, "x");
  require_finite(w, "w");
  if (terms == 0) throw invalid_order("term count must be at least 1");
  const Digit base = b.value();
  std::vector<double> inv_fact{1.0};
  std::vector<Digit> digits{0};
  std::uint64_t digit_total = 0;
  double w_power = 1.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    double weight = 1.0;
    for (Digit d : digits) {
      while (inv_fact.size() <= d) inv_fact.push_back(inv_fact.back() / static_cast<double>(inv_fact.size()));
      weight *= inv_fact[d];
    }
    sum += std::pow(x, static_cast<double>(digit_total)) * w_power * weight;
    w_power *= w;
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == base - 1) {
      digit_total -= digits[i];
      digits[i++] = 0;
    }
    if (i == digits.size()) digits.push_back(0);
    ++digits[i];
    ++digit_total;
  }
  return require_finite(sum, "base-b exponential series");
}

ExpApprox exp_b_approx(double x, double w, Base b, std::size_t depth) {
  require_finite(x, "x");
  require_unit_interval(w);
  require_depth(depth);
  double lacunary = 0.0;
  double power = w;
  for (std::size_t i = 0; i < depth; ++i) {
    lacunary += power;
    power = std::pow(power, static_cast<double>(b.value()));
  }
  const double wb = std::pow(w, static_cast<double>(b.value()));
  return {require_finite(std::exp(x * lacunary), "approximation"),
          require_finite(std::exp(x * w + x * wb), "approximation")};
}

std::size_t default_depth(double w, Base b) {
  require_unit_interval(w);
  constexpr std::size_t kMaxDepth = 16;
  double power = std::pow(w, static_cast<double>(b.value()));
  std::size_t depth = 1;
  while (depth < kMaxDepth && !(power < 1e-300)) {
    power = std::pow(power, static_cast<double>(b.value()));
    ++depth;
  }
  return depth;
}

double log_gamma_sum(double x, double w, Base b, std::size_t depth) {
  require_finite(x, "x");
  require_unit_interval(w);
  require_depth(depth);
  if (x < 0.0) throw domain_error("x must be non-negative");
  double sum = 0.0;
  double power = w;
  for (std::size_t i = 0; i < depth; ++i) {
    sum += log_upper_gamma_ratio(b.value(), x * power);
    power = std::pow(power, static_cast<double>(b.value()));
  }
  return sum;
}

double log_gamma_bound(double w, Base b) {
  require_unit_interval(w);
  return std::pow(w, static_cast<double>(b.value())) / (static_cast<double>(b.value()) * (1.0 - w));
}

VerifyResult check_log_gamma_bound(double x, double w, Base b, std::size_t depth) {
  if (!(x >= 0.0 && x < 1.0)) throw domain_error("x must satisfy 0 <= x < 1, got " + std::to_string(x));
  const double lhs = std::fabs(log_gamma_sum(x, w, b, depth));
  const double rhs = kLogGammaSlack * log_gamma_bound(w, b);
  return make_result("gamma-bound", {Rat(x), Rat(w), rat_u(b.value()), rat_u(depth)}, Rat(lhs), Rat(rhs),
                     Relation::less_equal);
}

DigitalSeries star_convolve(const DigitalSeries& a, const DigitalSeries& b) {
  if (!(a.base == b.base)) throw shape_error("star_convolve needs series over the same base");
  if (a.order() != b.order()) throw shape_error("star_convolve needs series of equal order");
  const std::size_t order = a.order();
  std::vector<BivarPoly> swapped;
  swapped.reserve(order);
  for (const BivarPoly& c : b.coeffs.coeffs()) swapped.push_back(c.swapped());

  Series<BivarPoly> out(order);
  for (std::size_t n = 0; n < order; ++n) {
    const DominatedRange splits(Nat(static_cast<unsigned long>(n)), a.base);
    for (const Nat& kk : splits) {
      const std::size_t k = kk.get_ui();
      if (a.coeffs[k].is_zero() || swapped[n - k].is_zero()) continue;
      out[n] += a.coeffs[k] * swapped[n - k];
    }
  }
  return {a.base, std::move(out)};
}

VerifyResult verify_exp_convolution(Base b, std::size_t order) {
  const DigitalSeries e = exp_b_symbolic(b, order);
  const DigitalSeries lhs = star_convolve(e, e);
  const BivarPoly sum = BivarPoly::x() + BivarPoly::y();
  std::vector<VerifyResult> parts;
  parts.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    const DigitVec dn = to_digits(Nat(static_cast<unsigned long>(n)), b);
    const BivarPoly rhs = sum.pow(dn.digit_sum()) * Rat(Nat(1), factorial_b(dn));
    parts.push_back(make_result("exp-convolution-coefficient", {rat_u(b.value()), rat_u(n)}, lhs.coeffs[n], rhs));
  }
  return combine("exp-convolution", {rat_u(b.value()), rat_u(order)}, std::move(parts));
}

}  // namespace basecomb
