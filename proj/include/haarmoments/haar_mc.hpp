#pragma once

// Monte Carlo oracle: Haar-distributed unitaries and empirical moments.
//
// Samples are split into fixed-size chunks; chunk c draws from
// RandomStream(seed, c). Chunks are independent work items for the OpenMP
// kernels and are merged in chunk order, so an estimate depends on
// (seed, samples) only, never on the worker count.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "haarmoments/rational.hpp"

namespace haarmoments {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr std::uint64_t kDefaultSeed = 20240917;
inline constexpr std::int64_t kSamplesPerStream = 4096;

/// Deterministic random source identified by (master seed, stream index).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream);

  /// x + iy with x, y independent N(0, 1/2): a standard complex Gaussian.
  Complex complex_gaussian();

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 0.7071067811865476};
};

/// Sample mean with its standard error (sample standard deviation / sqrt(N)).
struct MomentEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::int64_t samples = 0;

  /// (mean - reference) / standard_error; 0 when both numerator and
  /// standard error vanish, infinite when only the standard error does.
  double z_score(double reference) const;

  /// |mean - reference| <= sigmas * standard_error, up to a 1e-12 relative
  /// allowance for floating-point roundoff in degenerate (zero-variance)
  /// statistics such as |det U|^2.
  bool agrees_with(double reference, double sigmas = 5.0) const;
};

/// One-pass mean/variance accumulator (Welford), mergeable with Chan's rule.
class RunningMoments {
 public:
  void add(double x) noexcept;
  void merge(const RunningMoments& other) noexcept;

  std::int64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept;  // unbiased; 0 for fewer than 2 samples
  MomentEstimate estimate() const;

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct SamplingConfig {
  std::int64_t samples = 100000;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
};

/// Haar-random d x d unitary: QR of a complex Gaussian matrix, with the
/// columns of Q rescaled by the phases of diag(R). Skipping that phase
/// correction leaves Q unitary but not Haar distributed.
ComplexMatrix sample_haar_unitary(int d, RandomStream& stream);

/// max |(U* U - I)_{ij}|.
double unitarity_defect(const ComplexMatrix& u);

/// Sc_1..Sc_d: elementary symmetric functions of the eigenvalues, so that
/// det(U - zI) = (-1)^d sum_j (-1)^j Sc_j z^{d-j} with Sc_0 = 1.
std::vector<Complex> secular_coefficients(const ComplexMatrix& u);

/// Real statistic of one sampled unitary.
using Statistic = std::function<double(const ComplexMatrix&)>;

/// Parallel (OpenMP) estimate of E[statistic(U)] over Haar U in U(d).
MomentEstimate estimate_statistic(int d, const SamplingConfig& config,
                                  const Statistic& statistic);

/// E|Tr U_k|^{2n}, U_k the upper-left k x k corner. Requires 1 <= k <= d,
/// samples >= 100.
MomentEstimate estimate_trace_moment(int d, int k, int n, const SamplingConfig& config);

/// E|Sc_j(U)|^{2n}. Requires 1 <= j <= d.
MomentEstimate estimate_secular_moment(int d, int j, int n, const SamplingConfig& config);

/// E|u_{row,col}|^{2n}, 1-based position.
MomentEstimate estimate_entry_moment(int d, int row, int col, int n,
                                     const SamplingConfig& config);

struct KsResult {
  double statistic = 0.0;  // sup_t |F_N(t) - F(t)|
  double threshold = 0.0;  // 1.95 / sqrt(N), the asymptotic 0.001 level
  std::int64_t samples = 0;
  double sample_mean = 0.0;

  bool passes() const noexcept { return statistic <= threshold; }
};

/// Kolmogorov-Smirnov test of |u_11|^2 against Beta(1, d-1), whose CDF is
/// 1 - (1 - t)^{d-1}: the law of a 1 x 1 truncation. Requires d >= 2.
KsResult truncation_entry_law_check(int d, const SamplingConfig& config);

/// CDF of |u_11|^2 for U Haar on U(d).
double entry_law_cdf(int d, double t);

/// Normalization constant of the truncation eigenvalue density
///   C_{d,k} = rational / pi^k,  rational = prod_{j<k} binom(d-k+j-1, j) (d-k+j) / k!
struct DensityConstant {
  BigRational rational;
  int pi_power = 0;
  double value = 0.0;
};

/// Requires 1 <= k <= d - 1.
DensityConstant density_constant(int d, int k);

/// Truncation density for k = 1 at |z|^2 = r2: C_{d,1} (1 - r2)^{d-2}.
double entry_density(int d, double r2);

}  // namespace haarmoments
