#include "haarmoments/moments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "haarmoments/combinatorics.hpp"
#include "haarmoments/tableaux.hpp"
#include "haarmoments/weingarten.hpp"

namespace haarmoments {

namespace {

void check_corner(int d, int k, int n) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (k < 1 || k > d) {
    throw std::invalid_argument("k must lie in [1, d]; got k=" + std::to_string(k) +
                                ", d=" + std::to_string(d));
  }
  if (n < 1) throw std::invalid_argument("n must be positive");
}

// All permutations of {0..n-1} (one-line, 0-based) satisfying
// word[s] == target[perm[s]] for every s.
std::vector<std::vector<int>> matching_permutations(const std::vector<int>& word,
                                                    const std::vector<int>& target) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(word.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t s = 0; s < word.size() && ok; ++s) {
      ok = word[s] == target[static_cast<std::size_t>(perm[s])];
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

BigRational trace_truncation_moment(int d, int k, int n) {
  check_corner(d, k, n);
  BigRational total = 0;
  for (const Partition& shape : partitions_of(n, k)) {
    const BigInteger f = standard_tableaux_count(shape);
    BigRational term(f * f * schur_at_ones(shape, k), schur_at_ones(shape, d));
    term.canonicalize();
    total += term;
  }
  return total;
}

BigRational trace_truncation_moment_via_subgroups(int d, int k, int n) {
  check_corner(d, k, n);
  if (n > kMaxSubgroupRouteDegree) {
    throw std::invalid_argument("subgroup route is limited to n <= " +
                                std::to_string(kMaxSubgroupRouteDegree));
  }
  const auto wg = weingarten_table(d, n);
  BigRational total = 0;
  for (const Composition& alpha : weak_compositions(n, k)) {
    BigRational block_sum = 0;
    for (const Permutation& sigma : young_subgroup_elements(alpha)) {
      block_sum += weingarten_of_permutation(*wg, sigma);
    }
    total += BigRational(multinomial(alpha)) * block_sum;
  }
  return total * BigRational(factorial(n));
}

BigRational monomial_moment(int d, const MonomialSpec& spec) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  const std::size_t n = spec.rows.size();
  if (spec.cols.size() != n || spec.conj_rows.size() != n || spec.conj_cols.size() != n) {
    throw std::invalid_argument("monomial index sequences must have equal length");
  }
  if (n > static_cast<std::size_t>(kMaxMonomialDegree)) {
    throw std::invalid_argument("monomial degree is limited to " +
                                std::to_string(kMaxMonomialDegree));
  }
  for (const auto* seq : {&spec.rows, &spec.cols, &spec.conj_rows, &spec.conj_cols}) {
    for (int idx : *seq) {
      if (idx < 1 || idx > d) {
        throw std::invalid_argument("monomial index " + std::to_string(idx) +
                                    " outside [1, " + std::to_string(d) + "]");
      }
    }
  }
  if (n == 0) return 1;

  const auto sigmas = matching_permutations(spec.rows, spec.conj_rows);
  const auto taus = matching_permutations(spec.cols, spec.conj_cols);
  if (sigmas.empty() || taus.empty()) return 0;

  // Count pairs per cycle type of tau sigma^{-1}, then weight once per class.
  std::map<Partition, std::uint64_t> class_counts;
  for (const auto& s : sigmas) {
    std::vector<int> one_based(n);
    for (std::size_t i = 0; i < n; ++i) one_based[i] = s[i] + 1;
    const Permutation sigma_inv = Permutation(one_based).inverse();
    for (const auto& t : taus) {
      for (std::size_t i = 0; i < n; ++i) one_based[i] = t[i] + 1;
      ++class_counts[cycle_type(Permutation(one_based) * sigma_inv)];
    }
  }

  const auto wg = weingarten_table(d, static_cast<int>(n));
  BigRational total = 0;
  for (const auto& [mu, count] : class_counts) {
    total += wg->at(mu) * BigRational(BigInteger(static_cast<unsigned long>(count)));
  }
  return total;
}

std::vector<int> diagonal_word(const std::vector<int>& composition_parts) {
  std::vector<int> word;
  for (std::size_t i = 0; i < composition_parts.size(); ++i) {
    word.insert(word.end(), static_cast<std::size_t>(composition_parts[i]),
                static_cast<int>(i) + 1);
  }
  return word;
}

BigRational expand_trace_power_and_integrate(int d, int k, int n) {
  check_corner(d, k, n);
  if (n > kMaxExpansionDegree || k > kMaxExpansionCorner) {
    throw std::invalid_argument("expansion route is limited to n <= " +
                                std::to_string(kMaxExpansionDegree) + " and k <= " +
                                std::to_string(kMaxExpansionCorner));
  }
  const auto compositions = weak_compositions(n, k);
  BigRational total = 0;
  for (const Composition& alpha : compositions) {
    const std::vector<int> plain = diagonal_word(alpha.parts());
    for (const Composition& beta : compositions) {
      const std::vector<int> conj = diagonal_word(beta.parts());
      const MonomialSpec spec{plain, plain, conj, conj};
      total += BigRational(multinomial(alpha) * multinomial(beta)) * monomial_moment(d, spec);
    }
  }
  return total;
}

BigRational single_entry_moment(int d, int n) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigRational r(factorial(n), rising_factorial(d, n));
  r.canonicalize();
  return r;
}

BigRational scaled_entry_moment_ratio(int d, int n) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  BigInteger dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
  return BigRational(dn) * single_entry_moment(d, n) / BigRational(factorial(n));
}

BigInteger rains_moment(int d, int n) {
  const BigRational exact = trace_truncation_moment(d, d, n);
  if (exact.get_den() != 1) {
    throw std::logic_error("rains_moment: non-integral value " + to_string(exact));
  }
  return exact.get_num();
}

BigInteger magic_square_prediction(int d, int j, int n) {
  if (d < 1 || j < 1 || j > d || n < 1) {
    throw std::invalid_argument("magic_square_prediction: requires d >= 1, 1 <= j <= d, n >= 1");
  }
  if (static_cast<long long>(j) * n > d) {
    throw std::domain_error("magic_square_prediction: no exact value claimed when j*n > d (j=" +
                            std::to_string(j) + ", n=" + std::to_string(n) +
                            ", d=" + std::to_string(d) + ")");
  }
  return count_magic_squares(n, j);
}

}  // namespace haarmoments
