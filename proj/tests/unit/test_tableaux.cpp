#include <doctest.h>

#include <random>
#include <stdexcept>

#include "haarmoments/serial.hpp"
#include "haarmoments/tableaux.hpp"
#include "oracles.hpp"

using namespace haarmoments;

TEST_CASE("standard tableaux counts") {
  CHECK(standard_tableaux_count(Partition({6})) == 1);
  CHECK(standard_tableaux_count(Partition({2, 1})) == 2);
  CHECK(standard_tableaux_count(Partition({2, 2})) == 2);
  CHECK(standard_tableaux_count(Partition()) == 1);
}

TEST_CASE("hook-length formula agrees with enumeration for n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(standard_tableaux_count(p) == oracle::count_standard_fillings(p));
    }
  }
}

TEST_CASE("sum of f^2 is n! for n <= 9") {
  for (int n = 0; n <= 9; ++n) {
    BigInteger total = 0;
    for (const auto& p : partitions_of(n)) {
      const BigInteger f = standard_tableaux_count(p);
      total += f * f;
    }
    CHECK(total == factorial(n));
  }
}

TEST_CASE("schur_at_ones") {
  for (int d = 1; d <= 8; ++d) CHECK(schur_at_ones(Partition({1}), d) == d);
  CHECK(schur_at_ones(Partition({2, 1}), 2) == 2);
  CHECK(schur_at_ones(Partition({1, 1, 1}), 2) == 0);
  CHECK(schur_at_ones(Partition(), 0) == 1);
  CHECK(schur_at_ones(Partition({1}), 0) == 0);
  // Single row: d (d+1) ... (d+n-1) / n!
  for (int d = 1; d <= 6; ++d) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(schur_at_ones(Partition({n}), d) == exact_quotient(rising_factorial(d, n), factorial(n)));
    }
  }
  CHECK_THROWS_AS(schur_at_ones(Partition({1}), -1), std::invalid_argument);
}

TEST_CASE("hook-content formula agrees with enumeration for n <= 6, r <= 4") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int r = 0; r <= 4; ++r) {
        CHECK(schur_at_ones(p, r) == oracle::count_semistandard_fillings(p, r));
      }
    }
  }
}

TEST_CASE("Kostka numbers") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : partitions_of(n)) {
      std::vector<int> content(p.parts());
      if (content.empty()) content.push_back(0);
      CHECK(kostka_number(p, Composition(content)) == 1);
    }
  }
  CHECK(kostka_number(Partition({2, 1}), Composition({1, 1, 1})) == 2);
  CHECK(kostka_number(Partition({1, 1}), Composition({2, 0})) == 0);
  CHECK_THROWS_AS(kostka_number(Partition({2}), Composition({1, 2})), std::invalid_argument);

  // Against arrangement enumeration, every composition into up to 4 parts.
  for (int n = 0; n <= 5; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int k = 1; k <= 4; ++k) {
        for (const auto& alpha : weak_compositions(n, k)) {
          CHECK(kostka_number(p, alpha) == oracle::kostka_by_arrangements(p, alpha.parts()));
        }
      }
    }
  }
}

TEST_CASE("Kostka numbers sum to s_lambda(1^k)") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& p : partitions_of(n)) {
      for (int k = 1; k <= 5; ++k) {
        BigInteger sum = 0;
        for (const auto& alpha : weak_compositions(n, k)) sum += kostka_number(p, alpha);
        CHECK(sum == schur_at_ones(p, k));
      }
    }
  }
}

TEST_CASE("longest increasing subsequence") {
  CHECK(longest_increasing_subsequence({}) == 0);
  CHECK(longest_increasing_subsequence({3, 1, 2}) == 2);
  CHECK(longest_increasing_subsequence({1, 1, 1}) == 1);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> value(0, 20);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> a(static_cast<std::size_t>(trial % 15));
    for (int& x : a) x = value(rng);
    CHECK(longest_increasing_subsequence(a) == oracle::lis_quadratic(a));
  }
}

TEST_CASE("bounded-LIS permutation counts") {
  CHECK(count_bounded_lis_permutations(3, 2) == 5);
  CHECK(count_bounded_lis_permutations(4, 1) == 1);
  CHECK(count_bounded_lis_permutations(4, 2) == 14);
  for (int n = 1; n <= 7; ++n) CHECK(count_bounded_lis_permutations(n, n) == factorial(n));
  CHECK(count_bounded_lis_permutations(5, 9) == 120);
  CHECK_THROWS_AS(count_bounded_lis_permutations(10, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_bounded_lis_permutations(0, 3), std::invalid_argument);
}

TEST_CASE("RSK identity: bounded-LIS count is the length-restricted f^2 sum") {
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= 7; ++d) {
      BigInteger total = 0;
      for (const auto& p : partitions_of(n, d)) {
        const BigInteger f = standard_tableaux_count(p);
        total += f * f;
      }
      CHECK(count_bounded_lis_permutations(n, d) == total);
    }
  }
}

TEST_CASE("magic squares") {
  for (int j = 0; j <= 6; ++j) CHECK(count_magic_squares(1, j) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(count_magic_squares(n, 1) == factorial(n));
  CHECK(count_magic_squares(2, 2) == 3);
  // H_2(j) = j + 1 and H_3(j) = binom(j+2, 2) + 3 binom(j+3, 4).
  for (int j = 0; j <= 6; ++j) {
    CHECK(count_magic_squares(2, j) == j + 1);
    CHECK(count_magic_squares(3, j) == binomial(j + 2, 2) + 3 * binomial(j + 3, 4));
  }
  for (int n = 1; n <= 3; ++n) {
    for (int j = 0; j <= 4; ++j) CHECK(count_magic_squares(n, j) == oracle::magic_squares_unpruned(n, j));
  }
  for (int j = 0; j <= 3; ++j) CHECK(count_magic_squares(4, j) == oracle::magic_squares_unpruned(4, j));
  CHECK(count_magic_squares(4, 2) == 282);
  CHECK_THROWS_AS(count_magic_squares(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(count_magic_squares(2, 7), std::invalid_argument);
}
