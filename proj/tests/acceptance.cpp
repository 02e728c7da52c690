// Acceptance suite. Each criterion prints one PASS/FAIL line with its wall
// time; `--criterion N` runs a single one, no arguments runs all of them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "basecomb/basecomb.hpp"
#include "cli.hpp"

using namespace basecomb;

namespace {

constexpr double kNumericTolerance = 1e-9;
constexpr double kBoundSlack = kLogGammaSlack;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_seconds;
  std::function<Outcome()> run;
};

Nat nat(unsigned long v) { return Nat(v); }

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome fibb_listing() {
  Outcome o;
  const std::vector<int> listing = {1, 1, 2, 1, 1, 2, 2, 2, 4, 1, 1, 2, 1, 1, 2,
                                    2, 2, 4, 2, 2, 4, 2, 2, 4, 4, 4, 8, 1, 1, 2};
  int code = 0;
  const std::string out = run_cli({"seq", "fibb", "--base", "3", "--range", "0", "29"}, code);
  std::string expected;
  for (std::size_t n = 0; n < listing.size(); ++n) expected += std::to_string(n) + " " + std::to_string(listing[n]) + "\n";
  if (code != 0) o.fail("seq exited with " + std::to_string(code));
  if (out != expected) o.fail("seq output differs from the listing");
  o.detail = o.pass ? "30 terms match" : o.detail;
  return o;
}

Outcome a117592() {
  Outcome o;
  if (fib_b(0, 3) != 1 || fib_b(1, 3) != 1 || fib_b(2, 3) != 2) o.fail("initial values");
  for (unsigned long n = 0; n < 10000 && o.pass; ++n) {
    const Nat a = fib_b(nat(n), 3);
    if (fib_b(nat(3 * n), 3) != a) o.fail("a(3n) != a(n) at n=" + std::to_string(n));
    if (fib_b(nat(3 * n + 1), 3) != a) o.fail("a(3n+1) != a(n) at n=" + std::to_string(n));
    if (fib_b(nat(3 * n + 2), 3) != 2 * a) o.fail("a(3n+2) != 2a(n) at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n < 10000";
  return o;
}

Outcome stern_equivalence() {
  Outcome o;
  const std::vector<int> listing = {1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5};
  for (std::size_t n = 0; n < listing.size(); ++n) {
    if (fib_tilde2(nat(n)) != listing[n]) o.fail("listing differs at n=" + std::to_string(n));
  }
  for (unsigned long n = 0; n < 10000 && o.pass; ++n) {
    const VerifyResult r = verify_stern_equivalence(nat(n));
    if (!r.pass) o.fail(describe(r));
  }
  if (o.pass) o.detail = "n < 10000, first 11 values match";
  return o;
}

Outcome digital_binomial() {
  Outcome o;
  std::uint64_t cases = 0;
  for (int b : {2, 3, 5, 10}) {
    for (unsigned long n = 0; n < 512 && o.pass; ++n, ++cases) {
      const VerifyResult r = verify_digital_binomial(nat(n), b);
      if (!r.pass) o.fail(describe(r));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome power_sums() {
  Outcome o;
  std::uint64_t cases = 0;
  for (int b : {2, 3, 7}) {
    for (unsigned long n = 0; n < 2048 && o.pass; ++n, ++cases) {
      const VerifyResult r = verify_power_sum_identities(nat(n), b);
      if (!r.pass) o.fail(describe(r));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases, 3 identities each";
  return o;
}

Outcome chu_vandermonde() {
  Outcome o;
  std::uint64_t pairs = 0;
  std::uint64_t cases = 0;
  for (unsigned long n = 0; n < 243 && o.pass; ++n) {
    for (unsigned long m = 0; m < 243 && o.pass; ++m) {
      if (!carry_free_add(nat(n), nat(m), 3)) continue;
      ++pairs;
      for (unsigned long r = 0; r <= n + m && o.pass; ++r, ++cases) {
        const VerifyResult res = verify_chu_vandermonde(nat(n), nat(m), nat(r), 3);
        if (!res.pass) o.fail(describe(res));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " carry-free pairs, " + std::to_string(cases) + " cases";
  return o;
}

Outcome stirling_explicit() {
  Outcome o;
  try {
    for (std::uint64_t n = 0; n <= 8 && o.pass; ++n) {
      for (unsigned long k = 0; k < 81 && o.pass; ++k) {
        if (stirling2_b_explicit(n, nat(k), 3) != stirling2_b(n, nat(k), 3)) o.fail("b=3 differs");
      }
      for (unsigned long k = 0; k < 64 && o.pass; ++k) {
        if (stirling2_b_explicit(n, nat(k), 2) != stirling2_b(n, nat(k), 2)) o.fail("b=2 differs");
      }
    }
  } catch (const internal_inconsistency& e) {
    o.fail(std::string("integrality check fired: ") + e.what());
  }
  if (o.pass) o.detail = "n <= 8, k < 81 (b=3), k < 64 (b=2)";
  return o;
}

Outcome theta() {
  Outcome o;
  std::uint64_t cases = 0;
  for (std::size_t len = 0; len <= 3; ++len) {
    std::vector<std::uint64_t> m(len, 0);
    for (;;) {
      for (std::uint64_t n = 0; n <= 4; ++n, ++cases) {
        const VerifyResult r = verify_theta_identity(n, m);
        if (!r.pass) o.fail(describe(r));
      }
      std::size_t i = 0;
      while (i < len && m[i] == 5) m[i++] = 0;
      if (i == len) break;
      ++m[i];
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome fib_bundle() {
  Outcome o;
  std::uint64_t cases = 0;
  for (int b : {3, 5, 8, 13}) {
    for (unsigned long n = 0; n < 500 && o.pass; ++n) {
      for (const VerifyResult& r : {verify_fib_identities(nat(n), b), verify_fib_dominated(nat(n), b)}) {
        cases += r.parts.empty() ? 1 : r.parts.size();
        if (!r.pass) o.fail(describe(r));
      }
      if (b == 3) {
        ++cases;
        const VerifyResult t = verify_ternary_count(nat(n));
        if (!t.pass) o.fail(describe(t));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " sub-identity checks";
  return o;
}

Outcome exp_exact() {
  Outcome o;
  for (int b : {2, 3}) {
    const VerifyResult c = verify_exp_coefficients(b, 3);
    if (!c.pass) o.fail(describe(c));
    const VerifyResult v = verify_exp_convolution(b, 64);
    if (!v.pass) o.fail(describe(v));
  }
  if (o.pass) o.detail = "depth 3 coefficients and order-64 convolution, b in {2,3}";
  return o;
}

Outcome exp_numeric() {
  Outcome o;
  double worst = 0;
  int bound_points = 0;
  for (double x : {0.0, 0.25, 0.5, 1.0}) {
    for (double w : {0.0, 0.1, 0.25, 0.5}) {
      for (int b : {2, 3, 5}) {
        const double diff = std::fabs(exp_b_product(x, w, b, 12) - exp_b_series_numeric(x, w, b, 4096));
        worst = std::max(worst, diff);
        if (!(diff < kNumericTolerance)) o.fail("product vs series differ by " + std::to_string(diff));
        if (x < 1.0) {
          ++bound_points;
          const double lhs = std::fabs(log_gamma_sum(x, w, b, default_depth(w, b)));
          if (!(lhs <= kBoundSlack * log_gamma_bound(w, b))) o.fail("log-gamma bound fails");
        }
      }
    }
  }
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "max |product-series| = %.3e, bound holds at %d points", worst, bound_points);
    o.detail = buf;
  }
  return o;
}

Outcome forward_difference() {
  Outcome o;
  const DiscrepancyReport documented = probe_forward_difference(3, nat(3), 2);
  if (documented.equal || documented.lhs != 1 || documented.rhs != 6) {
    o.fail("(3,3,2) report is lhs=" + documented.lhs.get_str() + " rhs=" + documented.rhs.get_str());
  }
  // Equality should occur exactly when s_2(k) <= 1.
  std::uint64_t unexpected = 0;
  std::string first;
  for (std::uint64_t n = 0; n <= 6; ++n) {
    for (unsigned long k = 0; k < 64; ++k) {
      const bool predicted = digit_sum(nat(k), 2) <= 1;
      const DiscrepancyReport r = probe_forward_difference(n, nat(k), 2);
      if (r.equal != predicted) {
        if (unexpected++ == 0) {
          first = "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") equal=" + (r.equal ? "true" : "false") +
                  " lhs=" + r.lhs.get_str() + " rhs=" + r.rhs.get_str() + " " + r.note;
        }
      }
    }
  }
  if (unexpected > 0) o.fail(std::to_string(unexpected) + " of 448 cases break 'equal iff s_2(k) <= 1', first " + first);
  if (o.pass) o.detail = "equality pattern and (3,3,2) mismatch as stated";
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "base-3 Fibonacci listing", 1, fibb_listing},
      {2, "A117592 recurrence", 5, a117592},
      {3, "Stern equivalence", 10, stern_equivalence},
      {4, "digital binomial theorem", 30, digital_binomial},
      {5, "power-sum identities", 30, power_sums},
      {6, "base-b Chu-Vandermonde", 60, chu_vandermonde},
      {7, "Stirling explicit formula", 10, stirling_explicit},
      {8, "theta identity", 10, theta},
      {9, "Fibonacci identity bundle", 30, fib_bundle},
      {10, "exponential exact identities", 30, exp_exact},
      {11, "exponential numeric cross-check", 10, exp_numeric},
      {12, "forward-difference probe", 10, forward_difference},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && secs > c.time_limit_seconds) o.fail("took longer than " + std::to_string(c.time_limit_seconds) + " s");
  std::printf("[%s] criterion %2d: %-32s %7.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
              o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const Criterion& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    all_pass = run_one(c) && all_pass;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
