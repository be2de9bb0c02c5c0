#pragma once

// Exact tableaux counts (hook-length and hook-content product formulas),
// Kostka numbers, and the brute-force combinatorial counts that the moment
// formulas are checked against.

#include "haarmoments/combinatorics.hpp"
#include "haarmoments/rational.hpp"

namespace haarmoments {

/// f^lambda, the number of standard Young tableaux, as n! / prod(hooks).
BigInteger standard_tableaux_count(const Partition& shape);

/// s_lambda(1^r): semistandard tableaux of the given shape with entries in
/// {1..r}, as prod (r + content) / prod(hooks). Zero when length > r.
BigInteger schur_at_ones(const Partition& shape, int r);

/// K_{lambda, alpha}: semistandard tableaux of shape lambda with content
/// alpha, enumerated row by row.
BigInteger kostka_number(const Partition& shape, const Composition& content);

inline constexpr int kMaxLisPermutationDegree = 9;

/// Number of permutations of [n] whose longest increasing subsequence has
/// length at most d, by exhaustive search over S_n. Requires 1 <= n <= 9.
/// Parallelized over the first image; see serial::count_bounded_lis_permutations.
BigInteger count_bounded_lis_permutations(int n, int d);

/// Longest strictly increasing subsequence of a sequence (patience sorting).
int longest_increasing_subsequence(const std::vector<int>& sequence);

inline constexpr int kMaxMagicSquareOrder = 4;
inline constexpr int kMaxMagicSquareLineSum = 6;

/// H_n(j): n x n nonnegative integer matrices with every row and column
/// summing to j. Requires 1 <= n <= 4, 0 <= j <= 6.
BigInteger count_magic_squares(int n, int j);

}  // namespace haarmoments
