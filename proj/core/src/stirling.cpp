#include "basecomb/stirling.hpp"

#include <algorithm>

#include "basecomb/coeffs.hpp"

namespace basecomb {

namespace {

constexpr std::uint64_t kSharedRows = 128;

const StirlingTable& shared_table() {
  static const StirlingTable table(kSharedRows);
  return table;
}

Rat rat_u(unsigned long v) { return Rat(v); }

Nat upow(const Nat& base, std::uint64_t e) {
  Nat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

StirlingTable::StirlingTable(std::uint64_t n_max) : n_max_(n_max) {
  rows_.reserve(n_max + 1);
  rows_.push_back({Nat(1)});
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const std::vector<Nat>& prev = rows_.back();
    std::vector<Nat> row(n + 1);
    row[0] = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      row[k] = prev[k - 1];
      if (k < prev.size()) row[k] += prev[k] * k;
    }
    rows_.push_back(std::move(row));
  }
}

const Nat& StirlingTable::at(std::uint64_t n, std::uint64_t k) const {
  static const Nat zero = 0;
  if (n > n_max_) throw domain_error("Stirling table holds rows up to " + std::to_string(n_max_));
  return k > n ? zero : rows_[n][k];
}

Nat stirling2(std::uint64_t n, std::uint64_t k) {
  if (n <= kSharedRows) return shared_table().at(n, k);
  return StirlingTable(n).at(n, k);
}

Nat stirling2_b(std::uint64_t n, const Nat& k, Base b) {
  const DigitVec dk = to_digits(k, b);
  Nat out = 1;
  for (Digit d : dk.digits()) {
    out *= stirling2(n, d);
    if (sgn(out) == 0) break;
  }
  return out;
}

namespace {

Rat stirling2_b_alternating_sum(std::uint64_t n, const DigitVec& dk) {
  const std::uint64_t sk = dk.digit_sum();
  Nat sum = 0;
  for_each_dominated(dk, [&](std::span<const Digit> j) {
    Nat digit_product = 1;
    std::uint64_t sj = 0;
    for (Digit d : j) {
      digit_product *= d;
      sj += d;
    }
    Nat term = binom_b(dk, j) * upow(digit_product, n);  // 0^0 = 1
    if ((sk - sj) % 2 == 1) term = -term;
    sum += term;
  });
  return Rat(sum) / Rat(factorial_b(dk));
}

}  // namespace

Nat stirling2_b_explicit(std::uint64_t n, const Nat& k, Base b) {
  const Rat value = stirling2_b_alternating_sum(n, to_digits(k, b));
  if (value.get_den() != 1 || sgn(value) < 0) {
    throw internal_inconsistency("explicit base-b Stirling sum is not a non-negative integer: " + value.get_str());
  }
  return value.get_num();
}

VerifyResult verify_stirling_explicit(std::uint64_t n, const Nat& k, Base b) {
  return make_result("stirling-explicit", {rat_u(n), Rat(k), rat_u(b.value())}, Rat(stirling2_b(n, k, b)),
                     stirling2_b_alternating_sum(n, to_digits(k, b)));
}

VerifyResult verify_stirling_recurrence(std::uint64_t n, const Nat& k, Base b) {
  if (n == 0) throw precondition_error("Stirling recurrence needs n >= 1");
  const DigitVec dk = to_digits(k, b);
  Nat lhs = 1;
  Nat rhs = 1;
  for (Digit d : dk.digits()) {
    lhs *= stirling2(n, d);
    const Nat lower = d == 0 ? Nat(0) : stirling2(n - 1, d - 1);
    rhs *= lower + stirling2(n - 1, d) * d;
  }
  return make_result("stirling-recurrence", {rat_u(n), Rat(k), rat_u(b.value())}, Rat(lhs), Rat(rhs));
}

Nat stirling_tuple(std::uint64_t n, std::span<const std::uint64_t> ks) {
  Nat out = 1;
  for (std::uint64_t k : ks) out *= stirling2(n, k);
  return out;
}

Nat falling(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  Nat out = 1;
  for (std::uint64_t j = 0; j < k; ++j) out *= m - j;
  return out;
}

VerifyResult verify_theta_identity(std::uint64_t n, std::span<const std::uint64_t> m) {
  Nat monomial_weight = 1;
  for (std::uint64_t mi : m) monomial_weight *= mi;
  const Nat lhs = upow(monomial_weight, n);

  Nat rhs = 0;
  std::vector<std::uint64_t> k(m.size(), 0);
  for (;;) {
    Nat term = stirling_tuple(n, k);
    for (std::size_t i = 0; i < m.size() && sgn(term) != 0; ++i) term *= falling(m[i], k[i]);
    rhs += term;
    std::size_t i = 0;
    while (i < k.size() && k[i] == n) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }

  std::vector<Rat> params{rat_u(n)};
  for (std::uint64_t mi : m) params.push_back(rat_u(mi));
  return make_result("theta", std::move(params), Rat(lhs), Rat(rhs));
}

DiscrepancyReport probe_forward_difference(std::uint64_t n, const Nat& k, Base b) {
  const DigitVec dk = to_digits(k, b);
  const std::uint64_t order = dk.digit_sum();

  Nat delta = 0;  // Delta^order x^n at x = 0
  for (std::uint64_t j = 0; j <= order; ++j) {
    Nat term;
    mpz_bin_uiui(term.get_mpz_t(), order, j);
    term *= upow(Nat(j), n);
    if ((order - j) % 2 == 1) term = -term;
    delta += term;
  }
  Rat rhs = Rat(delta) / Rat(factorial_b(dk));
  if (order % 2 == 1) rhs = -rhs;

  DiscrepancyReport report;
  report.params = {rat_u(n), Rat(k), rat_u(b.value())};
  report.lhs = Rat(stirling2_b(n, k, b));
  report.rhs = rhs;
  report.equal = report.lhs == report.rhs;
  if (report.equal) {
    report.note = "equal";
  } else if (report.lhs == -report.rhs) {
    report.note = "sign-only mismatch";
  } else {
    report.note = "mismatch";
  }
  return report;
}

}  // namespace basecomb
