#pragma once

// Exact moments of traces of truncated Haar unitaries.
//
// Three independent routes compute E|Tr U_k|^{2n} for U Haar on U(d) and
// U_k its upper-left k x k corner:
//
//   trace_truncation_moment               closed form over shapes lambda |- n
//   trace_truncation_moment_via_subgroups Weingarten sums over Young subgroups
//   expand_trace_power_and_integrate      multinomial expansion, each monomial
//                                         integrated by the Weingarten formula
//
// The last two are factorial-time and exist to cross-check the first.

#include <vector>

#include "haarmoments/rational.hpp"

namespace haarmoments {

/// Indices of a balanced monomial
///   u_{rows[0] cols[0]} ... u_{rows[n-1] cols[n-1]}
///   * conj(u_{conj_rows[0] conj_cols[0]}) ... conj(u_{conj_rows[n-1] conj_cols[n-1]}),
/// all 1-based. Unbalanced monomials integrate to zero and are not representable.
struct MonomialSpec {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> conj_rows;
  std::vector<int> conj_cols;

  int degree() const noexcept { return static_cast<int>(rows.size()); }
};

inline constexpr int kMaxSubgroupRouteDegree = 7;
inline constexpr int kMaxMonomialDegree = 7;
inline constexpr int kMaxExpansionDegree = 4;
inline constexpr int kMaxExpansionCorner = 4;

/// sum_{lambda |- n, len <= k} (f^lambda)^2 s_lambda(1^k) / s_lambda(1^d).
/// Requires 1 <= k <= d and n >= 1.
BigRational trace_truncation_moment(int d, int k, int n);

/// n! sum_alpha (n choose alpha) sum_{sigma in S_alpha} Wg(d, n, sigma), with
/// alpha over weak k-part compositions of n and S_alpha enumerated element by
/// element. Requires 1 <= k <= d and 1 <= n <= 7.
BigRational trace_truncation_moment_via_subgroups(int d, int k, int n);

/// E[monomial] = sum_{sigma, tau in S_n} prod_s [rows(s) = conj_rows(sigma(s))]
///               prod_s [cols(s) = conj_cols(tau(s))] Wg(d, n, tau sigma^{-1}).
/// Requires degree <= 7 and every index in [1, d].
BigRational monomial_moment(int d, const MonomialSpec& spec);

/// Expands |Tr U_k|^{2n} = sum_{alpha, beta} (n choose alpha)(n choose beta)
/// u^alpha conj(u)^beta over all pairs of compositions, off-diagonal pairs
/// included, and integrates each monomial. Requires n <= 4, k <= 4, k <= d.
BigRational expand_trace_power_and_integrate(int d, int k, int n);

/// E|u_ij|^{2n} = n! / (d (d+1) ... (d+n-1)) = 1 / binom(d+n-1, n).
BigRational single_entry_moment(int d, int n);

/// d^n E|u_ij|^{2n} / n! = prod_{j<n} (1 + j/d)^{-1}; tends to 1 as d grows,
/// the moment ratio of sqrt(d) u_ij against a standard complex Gaussian.
BigRational scaled_entry_moment_ratio(int d, int n);

/// E|Tr U|^{2n} = sum_{lambda |- n, len <= d} (f^lambda)^2.
BigInteger rains_moment(int d, int n);

/// E|Sc_j(U)|^{2n} = H_n(j), valid when j n <= d. Throws std::domain_error
/// when j n > d and std::invalid_argument outside the magic-square bounds.
BigInteger magic_square_prediction(int d, int j, int n);

/// Diagonal index word 1^{a_1} 2^{a_2} ... k^{a_k} of a composition.
std::vector<int> diagonal_word(const std::vector<int>& composition_parts);

}  // namespace haarmoments
