#include "haarmoments/haar_mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace haarmoments {

// ---------------------------------------------------------------------------
// RandomStream

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x48414152u};
  return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(seeded_engine(seed, stream)) {}

Complex RandomStream::complex_gaussian() {
  const double re = normal_(engine_);
  const double im = normal_(engine_);
  return {re, im};
}

// ---------------------------------------------------------------------------
// Accumulation

double MomentEstimate::z_score(double reference) const {
  const double diff = mean - reference;
  if (standard_error > 0.0) return diff / standard_error;
  if (diff == 0.0) return 0.0;
  return std::copysign(std::numeric_limits<double>::infinity(), diff);
}

bool MomentEstimate::agrees_with(double reference, double sigmas) const {
  const double roundoff = 1e-12 * std::max(1.0, std::abs(reference));
  return std::abs(mean - reference) <= sigmas * standard_error + roundoff;
}

void RunningMoments::add(double x) noexcept {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double RunningMoments::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

MomentEstimate RunningMoments::estimate() const {
  MomentEstimate e;
  e.mean = mean_;
  e.samples = count_;
  e.standard_error = count_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
  return e;
}

// ---------------------------------------------------------------------------
// Sampling

ComplexMatrix sample_haar_unitary(int d, RandomStream& stream) {
  if (d < 1) throw std::invalid_argument("sample_haar_unitary: d must be positive");
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) g(i, j) = stream.complex_gaussian();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const auto& r = qr.matrixQR();
  for (int j = 0; j < d; ++j) {
    const double modulus = std::abs(r(j, j));
    if (modulus > 0.0) q.col(j) *= r(j, j) / modulus;
  }
  return q;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return gram.cwiseAbs().maxCoeff();
}

std::vector<Complex> secular_coefficients(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("secular_coefficients: matrix not square");
  const auto d = static_cast<std::size_t>(u.rows());
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("secular_coefficients: eigenvalue iteration did not converge");
  }
  std::vector<Complex> e(d + 1, Complex(0.0, 0.0));
  e[0] = 1.0;
  for (Eigen::Index m = 0; m < u.rows(); ++m) {
    const Complex z = solver.eigenvalues()(m);
    for (std::size_t j = static_cast<std::size_t>(m) + 1; j >= 1; --j) e[j] += z * e[j - 1];
  }
  return {e.begin() + 1, e.end()};
}

namespace {

double power_of_modulus_squared(Complex z, int n) {
  const double m = std::norm(z);
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= m;
  return r;
}

void check_sampling(int d, const SamplingConfig& config) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (config.samples < 1) throw std::invalid_argument("samples must be positive");
  if (config.workers < 1) throw std::invalid_argument("workers must be positive");
}

std::int64_t chunk_count(std::int64_t samples) {
  return (samples + kSamplesPerStream - 1) / kSamplesPerStream;
}

}  // namespace

MomentEstimate estimate_statistic(int d, const SamplingConfig& config,
                                  const Statistic& statistic) {
  check_sampling(d, config);
  const std::int64_t chunks = chunk_count(config.samples);
  std::vector<RunningMoments> partial(static_cast<std::size_t>(chunks));

#pragma omp parallel for num_threads(config.workers) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    RandomStream stream(config.seed, static_cast<std::uint64_t>(c));
    const std::int64_t begin = c * kSamplesPerStream;
    const std::int64_t end = std::min(config.samples, begin + kSamplesPerStream);
    RunningMoments acc;
    for (std::int64_t s = begin; s < end; ++s) acc.add(statistic(sample_haar_unitary(d, stream)));
    partial[static_cast<std::size_t>(c)] = acc;
  }

  RunningMoments total;
  for (const auto& p : partial) total.merge(p);
  return total.estimate();
}

MomentEstimate estimate_trace_moment(int d, int k, int n, const SamplingConfig& config) {
  if (k < 1 || k > d) throw std::invalid_argument("estimate_trace_moment: k must lie in [1, d]");
  if (n < 0) throw std::invalid_argument("estimate_trace_moment: n must be nonnegative");
  if (config.samples < 100) throw std::invalid_argument("estimate_trace_moment: samples >= 100");
  return estimate_statistic(d, config, [k, n](const ComplexMatrix& u) {
    return power_of_modulus_squared(u.topLeftCorner(k, k).trace(), n);
  });
}

MomentEstimate estimate_secular_moment(int d, int j, int n, const SamplingConfig& config) {
  if (j < 1 || j > d) throw std::invalid_argument("estimate_secular_moment: j must lie in [1, d]");
  if (n < 0) throw std::invalid_argument("estimate_secular_moment: n must be nonnegative");
  return estimate_statistic(d, config, [j, n](const ComplexMatrix& u) {
    return power_of_modulus_squared(secular_coefficients(u)[static_cast<std::size_t>(j - 1)], n);
  });
}

MomentEstimate estimate_entry_moment(int d, int row, int col, int n,
                                     const SamplingConfig& config) {
  if (row < 1 || row > d || col < 1 || col > d) {
    throw std::invalid_argument("estimate_entry_moment: position outside the matrix");
  }
  return estimate_statistic(d, config, [row, col, n](const ComplexMatrix& u) {
    return power_of_modulus_squared(u(row - 1, col - 1), n);
  });
}

// ---------------------------------------------------------------------------
// Truncation law

double entry_law_cdf(int d, double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return 1.0 - std::pow(1.0 - t, d - 1);
}

KsResult truncation_entry_law_check(int d, const SamplingConfig& config) {
  if (d < 2) throw std::invalid_argument("truncation_entry_law_check: d must be at least 2");
  check_sampling(d, config);
  const std::int64_t chunks = chunk_count(config.samples);
  std::vector<double> x(static_cast<std::size_t>(config.samples));

#pragma omp parallel for num_threads(config.workers) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    RandomStream stream(config.seed, static_cast<std::uint64_t>(c));
    const std::int64_t begin = c * kSamplesPerStream;
    const std::int64_t end = std::min(config.samples, begin + kSamplesPerStream);
    for (std::int64_t s = begin; s < end; ++s) {
      x[static_cast<std::size_t>(s)] = std::norm(sample_haar_unitary(d, stream)(0, 0));
    }
  }

  RunningMoments mean;
  for (double v : x) mean.add(v);

  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = entry_law_cdf(d, x[i]);
    sup = std::max({sup, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return KsResult{sup, 1.95 / std::sqrt(n), config.samples, mean.mean()};
}

DensityConstant density_constant(int d, int k) {
  if (k < 1 || k > d - 1) {
    throw std::invalid_argument("density_constant: requires 1 <= k <= d - 1 (got d=" +
                                std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
  BigInteger product = 1;
  for (int j = 0; j < k; ++j) product *= binomial(d - k + j - 1, j) * (d - k + j);
  DensityConstant c;
  c.rational = BigRational(product, factorial(k));
  c.rational.canonicalize();
  c.pi_power = k;
  c.value = c.rational.get_d() / std::pow(std::numbers::pi, k);
  return c;
}

double entry_density(int d, double r2) {
  if (r2 < 0.0 || r2 > 1.0) return 0.0;
  return density_constant(d, 1).value * std::pow(1.0 - r2, d - 2);
}

}  // namespace haarmoments
