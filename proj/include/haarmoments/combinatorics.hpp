#pragma once

// Partitions, weak compositions, permutations and the Young subgroups they
// generate. All types are immutable value types; every function is pure.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "haarmoments/rational.hpp"

namespace haarmoments {

/// A weakly decreasing sequence of positive integers. Serves as Young
/// diagram (shape) and as cycle type. The empty partition is valid.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Sorts into canonical order; zero entries are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based); 0 past the end.
  int part(int i) const noexcept {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  Partition conjugate() const;

  /// "(2,1)" style rendering; "()" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Exactly k nonnegative parts (weak composition).
class Composition {
 public:
  /// Throws std::invalid_argument on empty input or negative parts.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int size() const noexcept { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// A bijection of {1, ..., n}, given by its one-line images (1-based).
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}.
  explicit Permutation(const std::vector<int>& images);

  static Permutation identity(int n);

  int degree() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of point i, both 1-based.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }

  /// One-line notation, 1-based.
  std::vector<int> images() const;

  Permutation inverse() const;

  /// (outer * inner)(i) = outer(inner(i)).
  friend Permutation operator*(const Permutation& outer, const Permutation& inner);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct ZeroBased {};
  Permutation(ZeroBased, std::vector<int> images) : images_(std::move(images)) {}

  friend class YoungSubgroup;
  friend Partition cycle_type(const Permutation& sigma);

  std::vector<int> images_;  // 0-based
};

/// Every partition of n with at most `max_length` parts, in reverse
/// lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n, std::optional<int> max_length = std::nullopt);

/// Every weak k-part composition of n, in reverse lexicographic order
/// (largest first part first): (n,0,...,0), ..., (0,...,0,n).
std::vector<Composition> weak_compositions(int n, int k);

struct Box {
  int row;      // 1-based
  int column;   // 1-based
  int hook;     // arm + leg + 1
  int content;  // column - row
};

/// Boxes of the diagram in row-major order.
std::vector<Box> hooks_and_contents(const Partition& shape);

Partition cycle_type(const Permutation& sigma);

/// n! / z_mu.
BigInteger conjugacy_class_size(const Partition& mu);

/// n! / (a_1! ... a_k!).
BigInteger multinomial(const Composition& alpha);

/// The Young subgroup S_alpha: permutations preserving each consecutive block
/// [1, a_1], [a_1 + 1, a_1 + a_2], ... setwise. Iterates its elements in
/// lexicographic one-line order without materializing them.
class YoungSubgroup {
 public:
  explicit YoungSubgroup(Composition alpha);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
    }

   private:
    friend class YoungSubgroup;
    iterator(const YoungSubgroup* group, bool done);

    const YoungSubgroup* group_ = nullptr;
    Permutation current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  /// Product of a_i!.
  BigInteger order() const;
  const Composition& composition() const noexcept { return alpha_; }

 private:
  Composition alpha_;
  std::vector<int> block_starts_;  // 0-based offsets, plus the total at the end
};

YoungSubgroup young_subgroup_elements(const Composition& alpha);

}  // namespace haarmoments
