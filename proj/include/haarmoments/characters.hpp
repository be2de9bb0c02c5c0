#pragma once

#include <memory>
#include <vector>

#include "haarmoments/combinatorics.hpp"
#include "haarmoments/rational.hpp"

namespace haarmoments {

/// chi^lambda(mu): the irreducible character of S_n labelled by `shape`,
/// evaluated on the conjugacy class with cycle type `cycle_type`.
///
/// Computed with the Murnaghan-Nakayama rule. Border strips of length equal
/// to the largest remaining cycle are removed through the beta-number
/// (abacus) encoding of the shape; the sign of each removal is (-1)^height.
/// Intermediate results are memoized process-wide on (shape, cycle type).
///
/// Throws std::invalid_argument if the weights differ.
BigInteger character(const Partition& shape, const Partition& cycle_type);

/// Full character table of S_n, immutable once built.
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int degree() const noexcept { return n_; }

  /// Partitions of n in reverse lexicographic order; rows and columns use it.
  const std::vector<Partition>& partitions() const noexcept { return partitions_; }

  const BigInteger& at(const Partition& shape, const Partition& cycle_type) const;
  const BigInteger& at(std::size_t shape_index, std::size_t class_index) const {
    return values_[shape_index * partitions_.size() + class_index];
  }

  std::size_t index_of(const Partition& p) const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::vector<BigInteger> values_;
};

/// Cached per n; safe to call concurrently.
std::shared_ptr<const CharacterTable> character_table(int n);

}  // namespace haarmoments
