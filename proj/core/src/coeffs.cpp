#include "basecomb/coeffs.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace basecomb {

namespace {

Rat rat(const Nat& v) { return Rat(v); }

Rat rat_u(std::uint64_t v) {
  Nat z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return Rat(z);
}

Nat pow2(std::uint64_t e) {
  Nat out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

Nat binom(const Nat& n, const Nat& k) {
  if (sgn(n) < 0 || sgn(k) < 0) throw domain_error("binom arguments must be non-negative");
  if (k > n) return 0;
  Nat kk = n - k;
  if (k < kk) kk = k;
  Nat out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), to_u64(kk, "min(k, n-k)"));
  return out;
}

Nat digit_binom(Digit n, Digit k) {
  if (k > n) return 0;
  Nat out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Nat binom_b(const DigitVec& n, std::span<const Digit> k) {
  Nat out = 1;
  const std::size_t len = std::max(n.size(), k.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Digit ki = i < k.size() ? k[i] : 0;
    const Digit ni = n[i];
    if (ki > ni) return 0;
    if (ki == 0 || ki == ni) continue;
    Nat c;
    mpz_bin_uiui(c.get_mpz_t(), ni, ki);
    out *= c;
  }
  return out;
}

std::uint64_t binom_b_small(std::uint64_t n, std::uint64_t k, Base b) {
  const Digit base = b.value();
  if (base == 2) return (k & ~n) == 0 ? 1 : 0;
  std::uint64_t out = 1;
  while (k != 0) {
    const auto ni = static_cast<Digit>(n % base);
    const auto ki = static_cast<Digit>(k % base);
    if (ki > ni) return 0;
    if (ki != 0 && ki != ni) {
      const Nat c = digit_binom(ni, ki);
      if (!mpz_fits_ulong_p(c.get_mpz_t()) || __builtin_mul_overflow(out, c.get_ui(), &out)) {
        throw numeric_error("base-b binomial exceeds 64 bits");
      }
    }
    n /= base;
    k /= base;
  }
  return out;
}

Nat binom_b(const Nat& n, const Nat& k, Base b) {
  if (b.value() == 2 && mpz_fits_ulong_p(n.get_mpz_t()) && mpz_fits_ulong_p(k.get_mpz_t())) {
    return (k.get_ui() & ~n.get_ui()) == 0 ? 1 : 0;
  }
  const DigitVec kd = to_digits(k, b);
  return binom_b(to_digits(n, b), kd.digits());
}

Nat factorial_b(const DigitVec& n) {
  Nat out = 1;
  for (Digit d : n.digits()) {
    if (d < 2) continue;
    Nat f;
    mpz_fac_ui(f.get_mpz_t(), d);
    out *= f;
  }
  return out;
}

Nat factorial_b(const Nat& n, Base b) { return factorial_b(to_digits(n, b)); }

Rat pochhammer(const Rat& x, std::uint64_t k) {
  Rat out = 1;
  Rat term = x;
  for (std::uint64_t j = 0; j < k; ++j) {
    out *= term;
    if (sgn(out) == 0) return out;
    term += 1;
  }
  return out;
}

Rat step_binom(const Rat& x, const Rat& r, std::uint64_t d) {
  Rat out = 1;
  Rat term = x;
  for (std::uint64_t j = 1; j <= d; ++j) {
    out *= term;
    out /= rat_u(j);
    term += r;
  }
  return out;
}

VerifyResult verify_chu_vandermonde(const Nat& n, const Nat& m, const Nat& r, Base b) {
  const DigitVec dn = to_digits(n, b);
  const DigitVec dm = to_digits(m, b);
  const std::size_t len = std::max(dn.size(), dm.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (std::uint64_t{dn[i]} + dm[i] > b.value() - 1) {
      throw precondition_error("n + m carries in base " + std::to_string(b.value()) + " at digit position " +
                               std::to_string(i));
    }
  }
  const DigitVec dr = to_digits(r, b);
  const Nat lhs = binom_b(n + m, r, b);
  Nat rhs = 0;
  std::vector<Digit> rest(dr.size());
  for_each_dominated(dr, [&](std::span<const Digit> k) {
    const Nat left = binom_b(dn, k);
    if (sgn(left) == 0) return;
    for (std::size_t i = 0; i < k.size(); ++i) rest[i] = dr[i] - k[i];
    rhs += left * binom_b(dm, rest);
  });
  return make_result("chu-vandermonde", {rat(n), rat(m), rat(r), rat_u(b.value())}, rat(lhs), rat(rhs));
}

VerifyResult verify_power_sum_identities(const Nat& n, Base b) {
  const DigitVec dn = to_digits(n, b);
  const std::uint64_t s = dn.digit_sum();
  Nat sum0 = 0;
  Nat sum1 = 0;
  Nat sum2 = 0;
  for_each_dominated(dn, [&](std::span<const Digit> k) {
    const Nat c = binom_b(dn, k);
    std::uint64_t sk = 0;
    for (Digit d : k) sk += d;
    sum0 += c;
    sum1 += c * sk;
    sum2 += c * sk * sk;
  });

  // 2^(s-1) and 2^(s-2) may have negative exponents when s < 2.
  const Rat two_s = rat(pow2(s));
  const Rat s_r = rat_u(s);
  const Rat rhs1 = s_r * two_s / 2;
  const Rat rhs2 = s_r * (s_r + 1) * two_s / 4;

  const std::vector<Rat> params{rat(n), rat_u(b.value())};
  return combine("power-sums", params,
                 {make_result("power-sum-0", params, rat(sum0), two_s),
                  make_result("power-sum-1", params, rat(sum1), rhs1),
                  make_result("power-sum-2", params, rat(sum2), rhs2)});
}

}  // namespace basecomb
