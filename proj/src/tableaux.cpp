#include "haarmoments/tableaux.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace haarmoments {

BigInteger standard_tableaux_count(const Partition& shape) {
  BigInteger hooks = 1;
  for (const Box& b : hooks_and_contents(shape)) hooks *= b.hook;
  return exact_quotient(factorial(shape.weight()), hooks);
}

BigInteger schur_at_ones(const Partition& shape, int r) {
  if (r < 0) throw std::invalid_argument("schur_at_ones: r must be nonnegative");
  if (shape.length() > r) return 0;
  BigInteger numerator = 1;
  BigInteger hooks = 1;
  for (const Box& b : hooks_and_contents(shape)) {
    numerator *= r + b.content;
    hooks *= b.hook;
  }
  return exact_quotient(numerator, hooks);
}

namespace {

class KostkaCounter {
 public:
  KostkaCounter(const Partition& shape, const Composition& content)
      : shape_(shape), remaining_(content.parts()) {
    for (int i = 0; i < shape.length(); ++i) {
      grid_.emplace_back(static_cast<std::size_t>(shape.part(i)), 0);
    }
  }

  BigInteger count() {
    BigInteger total = 0;
    fill(0, 0, total);
    return total;
  }

 private:
  // Cells are filled in row-major order; entries are 1-based labels.
  void fill(int row, int col, BigInteger& total) {
    if (row == shape_.length()) {
      ++total;
      return;
    }
    if (col == shape_.part(row)) {
      fill(row + 1, 0, total);
      return;
    }
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid_[r][c - 1]);
    if (row > 0) lo = std::max(lo, grid_[r - 1][c] + 1);
    const int labels = static_cast<int>(remaining_.size());
    for (int v = lo; v <= labels; ++v) {
      auto& left = remaining_[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      grid_[r][c] = v;
      fill(row, col + 1, total);
      ++left;
    }
    grid_[r][c] = 0;
  }

  const Partition& shape_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> grid_;
};

}  // namespace

BigInteger kostka_number(const Partition& shape, const Composition& content) {
  if (shape.weight() != content.weight()) {
    throw std::invalid_argument("kostka_number: shape " + shape.to_string() + " and content " +
                                content.to_string() + " have different weights");
  }
  return KostkaCounter(shape, content).count();
}

int longest_increasing_subsequence(const std::vector<int>& sequence) {
  std::vector<int> tails;
  for (int x : sequence) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

BigInteger count_bounded_lis_permutations(int n, int d) {
  if (n < 1 || n > kMaxLisPermutationDegree) {
    throw std::invalid_argument("count_bounded_lis_permutations: n must lie in [1, " +
                                std::to_string(kMaxLisPermutationDegree) + "]");
  }
  if (d < 1) throw std::invalid_argument("count_bounded_lis_permutations: d must be positive");

  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(dynamic, 1)
  for (int first = 0; first < n; ++first) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + first, perm.begin() + first + 1);
    do {
      if (longest_increasing_subsequence(perm) <= d) ++count;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
  return BigInteger(static_cast<unsigned long>(count));
}

namespace {

// Fill rows top to bottom; the last row is forced by the residual column sums.
std::uint64_t magic_rows(int rows_left, int line_sum, std::vector<int>& column_room) {
  if (rows_left == 1) {
    return std::all_of(column_room.begin(), column_room.end(),
                       [](int r) { return r >= 0; })
               ? 1
               : 0;
  }
  std::uint64_t total = 0;
  const std::size_t n = column_room.size();
  std::vector<int> row(n, 0);
  // Enumerate all rows summing to line_sum that fit under column_room.
  auto place = [&](auto&& self, std::size_t col, int left) -> void {
    if (col + 1 == n) {
      if (left > column_room[col]) return;
      column_room[col] -= left;
      total += magic_rows(rows_left - 1, line_sum, column_room);
      column_room[col] += left;
      return;
    }
    for (int v = std::min(left, column_room[col]); v >= 0; --v) {
      column_room[col] -= v;
      self(self, col + 1, left - v);
      column_room[col] += v;
    }
  };
  place(place, 0, line_sum);
  return total;
}

}  // namespace

BigInteger count_magic_squares(int n, int j) {
  if (n < 1 || n > kMaxMagicSquareOrder || j < 0 || j > kMaxMagicSquareLineSum) {
    throw std::invalid_argument("count_magic_squares: requires 1 <= n <= " +
                                std::to_string(kMaxMagicSquareOrder) + " and 0 <= j <= " +
                                std::to_string(kMaxMagicSquareLineSum));
  }
  std::vector<int> column_room(static_cast<std::size_t>(n), j);
  return BigInteger(static_cast<unsigned long>(magic_rows(n, j, column_room)));
}

}  // namespace haarmoments
