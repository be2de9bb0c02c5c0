#pragma once

#include <map>
#include <memory>

#include "haarmoments/combinatorics.hpp"
#include "haarmoments/rational.hpp"

namespace haarmoments {

/// Unitary Weingarten function
///
///   Wg(d, n, mu) = 1/(n!)^2 * sum_{lambda |- n, len(lambda) <= d}
///                  (f^lambda)^2 / s_lambda(1^d) * chi^lambda(mu)
///
/// evaluated exactly. The length cutoff is part of the definition, so the
/// function is total for d < n as well; there it is the pseudo-inverse
/// variant rather than the classical inverse of the Gram matrix.
BigRational weingarten(int d, int n, const Partition& cycle_type);

/// Wg(d, n, .) tabulated on every cycle type of S_n.
class WeingartenTable {
 public:
  WeingartenTable(int d, int n);

  int dimension() const noexcept { return d_; }
  int degree() const noexcept { return n_; }
  const std::map<Partition, BigRational>& values() const noexcept { return values_; }

  /// Throws std::invalid_argument for a partition of the wrong weight.
  const BigRational& at(const Partition& cycle_type) const;

 private:
  int d_;
  int n_;
  std::map<Partition, BigRational> values_;
};

/// Cached per (d, n); concurrent calls may build the same table twice but
/// always observe identical values.
std::shared_ptr<const WeingartenTable> weingarten_table(int d, int n);

/// Wg at the cycle type of sigma. Throws std::invalid_argument if sigma is
/// not in S_n for the table's n.
const BigRational& weingarten_of_permutation(const WeingartenTable& table,
                                             const Permutation& sigma);

}  // namespace haarmoments
