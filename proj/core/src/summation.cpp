#include "basecomb/summation.hpp"

#include <string>
#include <utility>

#include "basecomb/coeffs.hpp"

namespace basecomb {

namespace {

Rat rat_u(unsigned long v) { return Rat(v); }

const Rat& padded(const std::vector<Rat>& values, std::size_t i) {
  if (values.empty()) throw precondition_error("per-position parameter list is empty");
  return i < values.size() ? values[i] : values.back();
}

}  // namespace

Rat product_form(const Nat& n, Base b, const DigitKernel& f) {
  const DigitVec dn = to_digits(n, b);
  Rat out = 1;
  for (std::size_t i = 0; i < dn.size(); ++i) {
    Rat s = 0;
    for (Digit j = 0; j <= dn[i]; ++j) s += f(dn[i], j, i);
    out *= s;
  }
  return out;
}

Rat dominated_sum_form(const Nat& n, Base b, const DigitKernel& f) {
  const DigitVec dn = to_digits(n, b);
  Rat total = 0;
  for_each_dominated(dn, [&](std::span<const Digit> k) {
    Rat term = 1;
    for (std::size_t i = 0; i < k.size() && sgn(term) != 0; ++i) term *= f(dn[i], k[i], i);
    total += term;
  });
  return total;
}

VerifyResult verify_theorem1(const Nat& n, Base b, const DigitKernel& f) {
  return make_result("theorem1", {Rat(n), rat_u(b.value())}, product_form(n, b, f), dominated_sum_form(n, b, f));
}

std::size_t series_depth(Base b, std::size_t order) {
  if (order == 0) throw invalid_order("series order must be at least 1");
  std::size_t depth = 1;
  std::size_t reach = b.value();
  while (reach < order) {
    reach *= b.value();
    ++depth;
  }
  return depth;
}

Series<Rat> digitwise_series(Base b, const std::function<Rat(Digit, std::size_t)>& g, std::size_t order) {
  return digitwise_series_of<Rat>(b, g, order);
}

VerifyResult verify_digital_binomial(const Nat& n, Base b) {
  const DigitVec dn = to_digits(n, b);
  const BivarPoly lhs = (BivarPoly::x() + BivarPoly::y()).pow(dn.digit_sum());
  BivarPoly rhs;
  for_each_dominated(dn, [&](std::span<const Digit> k) {
    std::uint32_t sk = 0;
    std::uint32_t srest = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      sk += k[i];
      srest += dn[i] - k[i];
    }
    rhs.add_term(sk, srest, Rat(binom_b(dn, k)));
  });
  return make_result("digital-binomial", {Rat(n), rat_u(b.value())}, lhs, rhs);
}

DigitKernel binomial_power_kernel(const Rat& x, const Rat& y) {
  return [x, y](Digit n, Digit k, std::size_t) -> Rat {
    Rat xp = 1;
    Rat yp = 1;
    for (Digit j = 0; j < k; ++j) xp *= x;
    for (Digit j = 0; j < n - k; ++j) yp *= y;
    return Rat(digit_binom(n, k)) * xp * yp;
  };
}

DigitKernel pochhammer_kernel(const Rat& x, const Rat& y) {
  return [x, y](Digit n, Digit k, std::size_t) -> Rat {
    return step_binom(x, 1, k) * step_binom(y, 1, n - k);
  };
}

DigitKernel step_binomial_kernel(std::vector<Rat> xs, std::vector<Rat> ys, std::vector<Rat> rs) {
  if (xs.empty() || ys.empty() || rs.empty()) throw precondition_error("per-position parameter list is empty");
  return [xs = std::move(xs), ys = std::move(ys), rs = std::move(rs)](Digit n, Digit k, std::size_t i) -> Rat {
    const Rat& r = padded(rs, i);
    return step_binom(padded(xs, i), r, k) * step_binom(padded(ys, i), r, n - k);
  };
}

VerifyResult verify_pochhammer_binomial(const Nat& n, Base b, const Rat& x, const Rat& y) {
  const DigitVec dn = to_digits(n, b);
  Rat lhs = 1;
  for (Digit d : dn.digits()) lhs *= step_binom(x + y, 1, d);
  const Rat rhs = dominated_sum_form(n, b, pochhammer_kernel(x, y));
  return make_result("pochhammer-binomial", {Rat(n), rat_u(b.value()), x, y}, lhs, rhs);
}

VerifyResult verify_step_binomial(const Nat& n, Base b, const std::vector<Rat>& xs, const std::vector<Rat>& ys,
                                  const std::vector<Rat>& rs) {
  const DigitVec dn = to_digits(n, b);
  Rat lhs = 1;
  for (std::size_t i = 0; i < dn.size(); ++i) {
    lhs *= step_binom(padded(xs, i) + padded(ys, i), padded(rs, i), dn[i]);
  }
  const Rat rhs = dominated_sum_form(n, b, step_binomial_kernel(xs, ys, rs));
  return make_result("step-binomial", {Rat(n), rat_u(b.value())}, lhs, rhs);
}

}  // namespace basecomb
