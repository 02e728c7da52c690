#include "basecomb/fibonacci.hpp"

#include <algorithm>
#include <string>

#include "basecomb/coeffs.hpp"
#include "basecomb/summation.hpp"

namespace basecomb {

namespace {

constexpr std::uint64_t kSharedFib = 512;

const FibTable& shared_fib() {
  static const FibTable table(kSharedFib);
  return table;
}

Rat rat_u(unsigned long v) { return Rat(v); }

}  // namespace

FibTable::FibTable(std::uint64_t max) {
  values_.reserve(max + 1);
  values_.emplace_back(1);
  if (max >= 1) values_.emplace_back(1);
  for (std::uint64_t n = 2; n <= max; ++n) values_.push_back(values_[n - 1] + values_[n - 2]);
}

const Nat& FibTable::operator[](std::uint64_t n) const {
  if (n >= values_.size()) throw domain_error("Fibonacci table holds indices up to " + std::to_string(max()));
  return values_[n];
}

Nat fib(std::uint64_t n) {
  if (n <= kSharedFib) return shared_fib()[n];
  return FibTable(n)[n];
}

Nat fib_b(const Nat& n, Base b) {
  const DigitVec dn = to_digits(n, b);
  Nat out = 1;
  for (Digit d : dn.digits()) {
    if (d > 1) out *= fib(d);
  }
  return out;
}

Nat fib_b_dominated(const Nat& n, Base b) {
  const DigitVec dn = to_digits(n, b);
  Nat total = 0;
  std::vector<Digit> rest(dn.size());
  // k <=_b n, so the digits of n - k are n_i - k_i.
  for_each_dominated(dn, [&](std::span<const Digit> k) {
    for (std::size_t i = 0; i < k.size(); ++i) rest[i] = dn[i] - k[i];
    total += binom_b(DigitVec(b, rest), k);
  });
  return total;
}

Nat fib_tilde2(const Nat& n) {
  if (sgn(n) < 0) throw domain_error("n must be non-negative");
  // Terms with k > n - k vanish: such k cannot be dominated by n - k.
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    const std::uint64_t top = n.get_ui();
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; 2 * k <= top; ++k) total += binom_b_small(top - k, k, 2);
    return Nat(static_cast<unsigned long>(total));
  }
  Nat total = 0;
  Nat rest = n;
  for (Nat k = 0; k <= rest; ++k, --rest) total += binom_b(rest, k, 2);
  return total;
}

Nat stern(const Nat& n) {
  if (sgn(n) < 0) throw domain_error("n must be non-negative");
  // Unrolls the recurrence from the top bit down: with (a_m, a_{m+1}) known,
  // a bit 0 moves to (a_{2m}, a_{2m+1}) = (a_m, a_m + a_{m+1}) and a bit 1
  // to (a_{2m+1}, a_{2m+2}) = (a_m + a_{m+1}, a_{m+1}). Starts at m = 0.
  Nat lo = 0;
  Nat hi = 1;
  for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
    if (mpz_tstbit(n.get_mpz_t(), bit) != 0) {
      lo += hi;
    } else {
      hi += lo;
    }
  }
  return lo;
}

Series<Rat> fib_b_genfun(Base b, std::size_t order) {
  return digitwise_series(b, [](Digit d, std::size_t) { return Rat(fib(d)); }, order);
}

VerifyResult verify_fib_identities(const Nat& n, Base b) {
  const unsigned long base = b.value();
  const Nat block = n * base;
  const Nat fn = fib_b(n, b);
  auto f = [&](unsigned long offset) { return fib_b(block + offset, b); };
  auto params = [&](std::initializer_list<unsigned long> extra) {
    std::vector<Rat> p{Rat(n), rat_u(base)};
    for (unsigned long e : extra) p.push_back(rat_u(e));
    return p;
  };

  std::vector<VerifyResult> parts;
  for (unsigned long p = 0; p < base; ++p) {
    parts.push_back(make_result("fib-block", params({p}), Rat(f(p)), Rat(fn * fib(p))));
  }
  if (base >= 3) {
    Nat sum = 0;
    for (unsigned long k = 0; k < base; ++k) sum += f(k);
    parts.push_back(make_result("fib-block-sum", params({}), Rat(sum), Rat(2 * f(base - 1) + f(base - 2) - fn)));

    for (unsigned long q = 0; q + 3 <= base; ++q) {
      for (unsigned long p = 0; p <= q; ++p) {
        Nat range = 0;
        for (unsigned long k = p; k <= q; ++k) range += f(k);
        parts.push_back(make_result("fib-range-sum", params({p, q}), Rat(range), Rat(f(q + 2) - f(p + 1))));
      }
    }

    for (unsigned long q = 1; q + 2 <= base; ++q) {
      const Nat lhs = f(q) * f(q) - f(q + 1) * f(q - 1);
      const Nat rhs = q % 2 == 0 ? Nat(fn * fn) : Nat(-(fn * fn));
      parts.push_back(make_result("fib-cassini", params({q}), Rat(lhs), Rat(rhs)));
    }
  }
  for (unsigned long r = 1; 2 * r + 1 <= base; ++r) {
    for (unsigned long q = r; q + r <= base - 1; ++q) {
      const Nat lhs = f(q) * f(q) - f(q + r) * f(q - r);
      Nat rhs = fib(r - 1) * fib(r - 1) * fn * fn;
      if ((q - r + 1) % 2 == 1) rhs = -rhs;
      parts.push_back(make_result("fib-catalan", params({q, r}), Rat(lhs), Rat(rhs)));
    }
  }
  return combine("fib-identities", params({}), std::move(parts));
}

VerifyResult probe_catalan_alt_sign(const Nat& n, Base b) {
  const unsigned long base = b.value();
  const Nat block = n * base;
  const Nat fn = fib_b(n, b);
  const bool n_odd = mpz_odd_p(n.get_mpz_t()) != 0;
  std::vector<VerifyResult> parts;
  for (unsigned long r = 1; 2 * r + 1 <= base; ++r) {
    for (unsigned long q = r; q + r <= base - 1; ++q) {
      const Nat fq = fib_b(block + q, b);
      const Nat lhs = fq * fq - fib_b(block + q + r, b) * fib_b(block + q - r, b);
      const Nat mag = fib_b(block + r - 1, b);
      Nat rhs = mag * mag;
      // (-1)^{n-r+1}: negative when n - r + 1 is odd.
      const bool odd = n_odd != ((r + 1) % 2 == 1);
      if (odd) rhs = -rhs;
      parts.push_back(make_result("fib-catalan-alt", {Rat(n), rat_u(base), rat_u(q), rat_u(r)}, Rat(lhs),
                                  Rat(rhs)));
    }
  }
  return combine("fib-catalan-alt", {Rat(n), rat_u(base)}, std::move(parts));
}

VerifyResult verify_fib_dominated(const Nat& n, Base b) {
  return make_result("fib-eq41", {Rat(n), rat_u(b.value())}, Rat(fib_b(n, b)), Rat(fib_b_dominated(n, b)));
}

VerifyResult verify_ternary_count(const Nat& n) {
  Nat rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, to_u64(digit_count(n, 3, 2), "digit count"));
  return make_result("ternary-count", {Rat(n)}, Rat(fib_b(n, 3)), Rat(rhs));
}

VerifyResult verify_stern_equivalence(const Nat& n) {
  return make_result("stern-equivalence", {Rat(n)}, Rat(fib_tilde2(n)), Rat(stern(n + 1)));
}

}  // namespace basecomb
