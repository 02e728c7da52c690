#include <doctest.h>

#include <vector>

#include "basecomb/coeffs.hpp"
#include "basecomb/stirling.hpp"
#include "oracles.hpp"

using namespace basecomb;

TEST_SUITE_BEGIN("stirling");

TEST_CASE("stirling2 examples") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(3, 5) == 0);
  CHECK(stirling2(200, 1) == 1);
}

TEST_CASE("stirling2 matches the alternating sum for n, k <= 12") {
  for (unsigned long n = 0; n <= 12; ++n) {
    for (unsigned long k = 0; k <= 12; ++k) REQUIRE(stirling2(n, k) == oracle::stirling_alternating(n, k));
  }
}

TEST_CASE("StirlingTable invariants") {
  const StirlingTable t(30);
  CHECK(t.at(0, 0) == 1);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    CHECK(t.at(n, 0) == 0);
    CHECK(t.at(n, n + 1) == 0);
    for (std::uint64_t k = 1; k <= n; ++k) REQUIRE(t.at(n, k) == t.at(n - 1, k - 1) + k * t.at(n - 1, k));
  }
  CHECK_THROWS_AS(static_cast<void>(t.at(31, 2)), domain_error);
}

TEST_CASE("stirling2_b examples") {
  CHECK(stirling2_b(4, 7, 2) == 1);
  CHECK(stirling2_b(4, 5, 2) == 0);
  CHECK(stirling2_b(4, 2, 3) == 7);
  CHECK(stirling2_b(0, 0, 2) == 1);
  CHECK_THROWS_AS(stirling2_b(4, 2, 1), invalid_base);
}

TEST_CASE("stirling2_b_explicit examples") {
  CHECK(stirling2_b_explicit(4, 7, 2) == 1);
  CHECK(stirling2_b_explicit(4, 2, 3) == 7);
  CHECK(stirling2_b_explicit(0, 0, 2) == 1);
}

TEST_CASE("explicit sum equals the digit product") {
  for (std::uint64_t n = 0; n <= 8; ++n) {
    for (unsigned long k = 0; k < 81; ++k) {
      REQUIRE(stirling2_b_explicit(n, k, 3) == stirling2_b(n, k, 3));
      REQUIRE(verify_stirling_explicit(n, k, 3).pass);
    }
    for (unsigned long k = 0; k < 64; ++k) REQUIRE(verify_stirling_explicit(n, k, 2).pass);
  }
}

TEST_CASE("digit product agrees with per-digit table lookups") {
  for (std::uint64_t n = 0; n <= 10; ++n) {
    for (unsigned long k = 0; k < 500; ++k) {
      mpz_class expected = 1;
      for (auto d : oracle::digits(k, 5)) expected *= oracle::stirling_alternating(n, d);
      REQUIRE(stirling2_b(n, k, 5) == expected);
    }
  }
}

TEST_CASE("digitwise recurrence") {
  CHECK(verify_stirling_recurrence(5, 7, 2).pass);
  const VerifyResult r = verify_stirling_recurrence(5, 8, 3);
  CHECK(r.pass);
  CHECK(r.lhs == ExactValue(Rat(225)));
  for (unsigned long k = 0; k < 30; ++k) CHECK(verify_stirling_recurrence(1, k, 4).pass);
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (unsigned long k = 0; k < 81; ++k) REQUIRE(verify_stirling_recurrence(n, k, 3).pass);
  }
  CHECK_THROWS_AS(verify_stirling_recurrence(0, 3, 2), precondition_error);
}

TEST_CASE("stirling_tuple and falling") {
  CHECK(stirling_tuple(7, {}) == 1);
  const std::vector<std::uint64_t> a = {1, 2};
  CHECK(stirling_tuple(2, a) == 1);
  const std::vector<std::uint64_t> b = {2, 2};
  CHECK(stirling_tuple(4, b) == 49);
  CHECK(falling(9, 0) == 1);
  CHECK(falling(3, 2) == 6);
  CHECK(falling(2, 3) == 0);
}

TEST_CASE("theta identity examples") {
  CHECK(verify_theta_identity(0, std::vector<std::uint64_t>{4, 1}).pass);
  const VerifyResult two = verify_theta_identity(2, std::vector<std::uint64_t>{3, 2});
  CHECK(two.pass);
  CHECK(two.lhs == ExactValue(Rat(36)));
  const VerifyResult three = verify_theta_identity(3, std::vector<std::uint64_t>{2});
  CHECK(three.pass);
  CHECK(three.rhs == ExactValue(Rat(8)));
}

TEST_CASE("theta identity on all small monomials") {
  std::vector<std::vector<std::uint64_t>> tuples = {{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::uint64_t> m(len, 0);
    while (true) {
      tuples.push_back(m);
      std::size_t i = 0;
      while (i < len && m[i] == 5) m[i++] = 0;
      if (i == len) break;
      ++m[i];
    }
  }
  for (std::uint64_t n = 0; n <= 4; ++n) {
    for (const auto& m : tuples) REQUIRE(verify_theta_identity(n, m).pass);
  }
}

TEST_CASE("alternating sum with powers gives signed factorial times S") {
  for (unsigned long n = 0; n <= 8; ++n) {
    for (unsigned long alpha = 0; alpha <= 8; ++alpha) {
      mpz_class sum = 0;
      for (unsigned long k = 0; k <= n; ++k) {
        const mpz_class term = Nat(binom(n, k)) * oracle::ipow(mpz_class(k), alpha);
        sum += k % 2 == 0 ? term : mpz_class(-term);
      }
      const mpz_class expected = (n % 2 == 0 ? 1 : -1) * oracle::factorial(n) * stirling2(alpha, n);
      REQUIRE(sum == expected);
    }
  }
}

TEST_CASE("forward-difference probe") {
  const DiscrepancyReport zero = probe_forward_difference(0, 0, 2);
  CHECK(zero.equal);
  CHECK(zero.lhs == 1);
  CHECK(zero.rhs == 1);

  const DiscrepancyReport multi = probe_forward_difference(3, 3, 2);
  CHECK_FALSE(multi.equal);
  CHECK(multi.lhs == 1);
  CHECK(multi.rhs == 6);
  CHECK(multi.note == "mismatch");

  // The leading sign makes single-digit k = 1 disagree by sign only.
  const DiscrepancyReport one = probe_forward_difference(3, 1, 2);
  CHECK_FALSE(one.equal);
  CHECK(one.lhs == 1);
  CHECK(one.rhs == -1);
  CHECK(one.note == "sign-only mismatch");
}

TEST_SUITE_END();
