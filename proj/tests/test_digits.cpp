#include <doctest.h>

#include <set>
#include <vector>

#include "basecomb/digits.hpp"
#include "oracles.hpp"

using namespace basecomb;

TEST_SUITE_BEGIN("digits");

namespace {

std::vector<Digit> raw(const DigitVec& d) { return {d.digits().begin(), d.digits().end()}; }

}  // namespace

TEST_CASE("to_digits examples") {
  CHECK(raw(to_digits(0, 3)) == std::vector<Digit>{0});
  CHECK(raw(to_digits(22, 3)) == std::vector<Digit>{1, 1, 2});
  CHECK(raw(to_digits(7, 2)) == std::vector<Digit>{1, 1, 1});
  CHECK_THROWS_AS(to_digits(5, 1), invalid_base);
  CHECK_THROWS_AS(to_digits(5, 0), invalid_base);
}

TEST_CASE("to_digits handles values wider than a machine word") {
  const Nat big = Nat("123456789012345678901234567890");
  CHECK(from_digits(to_digits(big, 7)) == big);
  CHECK(to_digits(big, 10).size() == 30);
}

TEST_CASE("from_digits examples") {
  CHECK(from_digits(DigitVec(3, {0})) == 0);
  CHECK(from_digits(DigitVec(3, {1, 1, 2})) == 22);
  CHECK(from_digits(DigitVec(2, {1, 0, 1})) == 5);
  CHECK_THROWS_AS(DigitVec(3, {1, 3}), invalid_digit);
  const std::vector<Digit> bad{2, 2};
  CHECK_THROWS_AS(from_digits(bad, 2), invalid_digit);
}

TEST_CASE("DigitVec is canonical") {
  const DigitVec padded(5, {3, 0, 0});
  CHECK(padded.size() == 1);
  CHECK(DigitVec(5, {}).size() == 1);
  CHECK(DigitVec(5, {0, 0}) == to_digits(0, 5));
  CHECK(padded[7] == 0);
}

TEST_CASE("digit_sum and digit_count examples") {
  CHECK(digit_sum(0, 5) == 0);
  CHECK(digit_sum(7, 2) == 3);
  CHECK(digit_sum(22, 3) == 4);

  CHECK(digit_count(22, 3, 2) == 1);
  CHECK(digit_count(0, 3, 0) == 1);
  CHECK(digit_count(8, 3, 2) == 2);
  CHECK_THROWS_AS(digit_count(8, 3, 3), invalid_digit);
}

TEST_CASE("dominates examples") {
  for (int b : {2, 3, 10}) {
    for (int n : {0, 1, 17, 400}) CHECK(dominates(n, 0, b));
  }
  CHECK_FALSE(dominates(5, 2, 2));
  CHECK(dominates(22, 13, 3));
  CHECK_FALSE(dominates(2, 5, 2));
}

TEST_CASE("dominated_iter examples") {
  CHECK(dominated_list(5, 2) == std::vector<Nat>{0, 1, 4, 5});
  CHECK(dominated_list(0, 2) == std::vector<Nat>{0});
  CHECK(dominated_list(8, 3) == std::vector<Nat>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(DominatedRange(22, 3).size() == 2 * 2 * 3);
}

TEST_CASE("carry_free_add examples") {
  for (int n : {0, 5, 26}) CHECK(carry_free_add(n, 0, 3));
  CHECK_FALSE(carry_free_add(1, 1, 2));
  CHECK(carry_free_add(10, 12, 3));
}

TEST_CASE("round trip for n < 10^4") {
  for (int b : {2, 3, 5, 10}) {
    for (unsigned long n = 0; n < 10000; ++n) {
      const DigitVec d = to_digits(n, b);
      REQUIRE(from_digits(d) == n);
      REQUIRE(raw(d) == oracle::digits(n, static_cast<std::uint32_t>(b)));
    }
  }
}

TEST_CASE("number of dominated k in base 2 is 2^{s_2(n)}") {
  for (unsigned long n = 0; n < (1UL << 12); ++n) {
    std::uint64_t count = 0;
    for (const Nat& k : DominatedRange(n, 2)) {
      (void)k;
      ++count;
    }
    REQUIRE(count == (std::uint64_t{1} << oracle::digit_sum(n, 2)));
  }
}

TEST_CASE("dominance agrees with the digit-sum characterization") {
  for (int b : {2, 3, 7}) {
    for (unsigned long n = 0; n < 10000; n += (b == 2 ? 1 : 3)) {
      for (unsigned long k = 0; k <= n; k += 1 + n / 97) {
        REQUIRE(dominates(n, k, b) == oracle::dominated_by_digit_sums(n, k, static_cast<std::uint32_t>(b)));
      }
    }
  }
}

TEST_CASE("carry-free addition iff digit sums add, n, m < 3^6") {
  for (unsigned long n = 0; n < 729; ++n) {
    for (unsigned long m = 0; m < 729; ++m) {
      const bool additive = oracle::digit_sum(n, 3) + oracle::digit_sum(m, 3) == oracle::digit_sum(n + m, 3);
      REQUIRE(carry_free_add(n, m, 3) == additive);
    }
  }
}

TEST_CASE("dominated_iter is strictly increasing and matches brute force") {
  auto gen = oracle::rng(7);
  std::uniform_int_distribution<unsigned long> pick(0, 50000);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned long n = pick(gen);
    const int b = 2 + trial % 9;
    std::vector<Nat> seen;
    const DominatedRange range(n, b);
    for (auto it = range.begin(); !(it == range.end()); ++it) {
      if (!seen.empty()) REQUIRE(seen.back() < *it);
      REQUIRE(from_digits(it.digits(), b) == *it);
      seen.push_back(*it);
    }
    std::set<unsigned long> expected;
    for (unsigned long k = 0; k <= n; ++k) {
      if (oracle::dominated_by_digit_sums(n, k, static_cast<std::uint32_t>(b))) expected.insert(k);
    }
    REQUIRE(seen.size() == expected.size());
    auto e = expected.begin();
    for (const Nat& k : seen) REQUIRE(k == *e++);
  }
}

TEST_CASE("for_each_dominated visits the same k as DominatedRange") {
  const DigitVec n = to_digits(2021, 4);
  std::vector<Nat> via_callback;
  for_each_dominated(n, [&](std::span<const Digit> k) { via_callback.push_back(from_digits(k, 4)); });
  CHECK(via_callback == dominated_list(2021, 4));
}

TEST_CASE("dominated_difference subtracts digitwise") {
  const DigitVec n = to_digits(22, 3);
  const std::vector<Digit> k{1, 1, 1};
  CHECK(from_digits(dominated_difference(n, k)) == 9);
  const std::vector<Digit> bad{2};
  CHECK_THROWS_AS(dominated_difference(n, bad), precondition_error);
}

TEST_SUITE_END();
