#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the product formulas, the Murnaghan-Nakayama recursion or the
// Weingarten code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "haarmoments/combinatorics.hpp"

namespace oracle {

using haarmoments::Partition;

/// Number of partitions of n, by the p(n, largest part <= m) recurrence.
inline std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int total = part; total <= n; ++total) {
      p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
    }
  }
  return p[static_cast<std::size_t>(n)];
}

/// Every permutation of {0..n-1} in one-line notation.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Cycle lengths of a 0-based permutation, sorted decreasingly.
inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t s = 0; s < p.size(); ++s) {
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    if (len) out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

/// Standard Young tableaux of the shape, by placing 1, 2, ..., n one at a
/// time into an addable corner.
inline std::uint64_t count_standard_fillings(const Partition& shape) {
  std::vector<int> filled(static_cast<std::size_t>(shape.length()), 0);
  std::function<std::uint64_t(int)> rec = [&](int left) -> std::uint64_t {
    if (left == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < filled.size(); ++r) {
      const bool room = filled[r] < shape.part(static_cast<int>(r));
      const bool above_ok = r == 0 || filled[r - 1] > filled[r];
      if (room && above_ok) {
        ++filled[r];
        total += rec(left - 1);
        --filled[r];
      }
    }
    return total;
  };
  return rec(shape.weight());
}

/// Every filling of the shape with entries in {1..r}, checked for
/// semistandardness after the fact (no pruning).
inline std::uint64_t count_semistandard_fillings(const Partition& shape, int r) {
  const int n = shape.weight();
  if (n == 0) return 1;
  if (r == 0) return 0;
  std::vector<int> cells(static_cast<std::size_t>(n), 1);
  std::uint64_t total = 0;
  while (true) {
    // Check rows weakly increase and columns strictly increase.
    bool ok = true;
    std::vector<int> row_start;
    int offset = 0;
    for (int i = 0; i < shape.length(); ++i) {
      row_start.push_back(offset);
      offset += shape.part(i);
    }
    for (int i = 0; i < shape.length() && ok; ++i) {
      for (int j = 0; j < shape.part(i) && ok; ++j) {
        const int v = cells[static_cast<std::size_t>(row_start[static_cast<std::size_t>(i)] + j)];
        if (j > 0 && cells[static_cast<std::size_t>(row_start[static_cast<std::size_t>(i)] + j - 1)] > v)
          ok = false;
        if (i > 0 && cells[static_cast<std::size_t>(row_start[static_cast<std::size_t>(i - 1)] + j)] >= v)
          ok = false;
      }
    }
    if (ok) ++total;
    // Odometer increment over {1..r}^n.
    std::size_t pos = 0;
    while (pos < cells.size() && cells[pos] == r) cells[pos++] = 1;
    if (pos == cells.size()) break;
    ++cells[pos];
  }
  return total;
}

/// Kostka number by trying every arrangement of the content multiset in
/// row-major order and checking semistandardness.
inline std::uint64_t kostka_by_arrangements(const Partition& shape, const std::vector<int>& content) {
  std::vector<int> word;
  for (std::size_t i = 0; i < content.size(); ++i) {
    word.insert(word.end(), static_cast<std::size_t>(content[i]), static_cast<int>(i) + 1);
  }
  if (static_cast<int>(word.size()) != shape.weight()) return 0;
  std::uint64_t total = 0;
  do {
    bool ok = true;
    int offset = 0, prev_offset = 0;
    for (int i = 0; i < shape.length() && ok; ++i) {
      for (int j = 0; j < shape.part(i) && ok; ++j) {
        const int v = word[static_cast<std::size_t>(offset + j)];
        if (j > 0 && word[static_cast<std::size_t>(offset + j - 1)] > v) ok = false;
        if (i > 0 && word[static_cast<std::size_t>(prev_offset + j)] >= v) ok = false;
      }
      prev_offset = offset;
      offset += shape.part(i);
    }
    if (ok) ++total;
  } while (std::next_permutation(word.begin(), word.end()));
  return total;
}

/// Number of words with content `content` fixed by the 0-based permutation
/// p acting on positions. This is the permutation character of S_n on the
/// cosets of the Young subgroup S_content.
inline std::uint64_t fixed_words(const std::vector<int>& p, const std::vector<int>& content) {
  std::vector<int> word;
  for (std::size_t i = 0; i < content.size(); ++i) {
    word.insert(word.end(), static_cast<std::size_t>(content[i]), static_cast<int>(i));
  }
  std::uint64_t total = 0;
  do {
    bool fixed = true;
    for (std::size_t s = 0; s < p.size() && fixed; ++s) {
      fixed = word[s] == word[static_cast<std::size_t>(p[s])];
    }
    if (fixed) ++total;
  } while (std::next_permutation(word.begin(), word.end()));
  return total;
}

/// Longest increasing subsequence by the O(n^2) dynamic program.
inline int lis_quadratic(const std::vector<int>& a) {
  std::vector<int> best(a.size(), 1);
  int overall = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] < a[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    overall = std::max(overall, best[i]);
  }
  return overall;
}

/// Magic squares by enumerating every row independently and checking the
/// column sums at the end (no pruning).
inline std::uint64_t magic_squares_unpruned(int n, int j) {
  std::vector<std::vector<int>> rows;
  for (const auto& c : haarmoments::weak_compositions(j, n)) rows.push_back(c.parts());
  std::uint64_t total = 0;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int col = 0; col < n && ok; ++col) {
      int sum = 0;
      for (int r = 0; r < n; ++r) sum += rows[pick[static_cast<std::size_t>(r)]][static_cast<std::size_t>(col)];
      ok = sum == j;
    }
    if (ok) ++total;
    std::size_t pos = 0;
    while (pos < pick.size() && pick[pos] + 1 == rows.size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
    ++pick[pos];
  }
  return total;
}

}  // namespace oracle
