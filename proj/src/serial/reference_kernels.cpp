#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "haarmoments/serial.hpp"
#include "haarmoments/tableaux.hpp"

namespace haarmoments::serial {

MomentEstimate estimate_statistic(int d, const SamplingConfig& config,
                                  const Statistic& statistic) {
  if (d < 1 || config.samples < 1) throw std::invalid_argument("serial::estimate_statistic");
  RunningMoments acc;
  std::uint64_t stream_index = 0;
  RandomStream stream(config.seed, stream_index);
  for (std::int64_t s = 0; s < config.samples; ++s) {
    if (s > 0 && s % kSamplesPerStream == 0) stream = RandomStream(config.seed, ++stream_index);
    acc.add(statistic(sample_haar_unitary(d, stream)));
  }
  return acc.estimate();
}

std::vector<double> entry_samples(int d, const SamplingConfig& config) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(config.samples));
  std::uint64_t stream_index = 0;
  RandomStream stream(config.seed, stream_index);
  for (std::int64_t s = 0; s < config.samples; ++s) {
    if (s > 0 && s % kSamplesPerStream == 0) stream = RandomStream(config.seed, ++stream_index);
    out.push_back(std::norm(sample_haar_unitary(d, stream)(0, 0)));
  }
  return out;
}

BigInteger count_bounded_lis_permutations(int n, int d) {
  if (n < 1 || n > kMaxLisPermutationDegree || d < 1) {
    throw std::invalid_argument("serial::count_bounded_lis_permutations: bad arguments");
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (longest_increasing_subsequence(perm) <= d) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInteger(static_cast<unsigned long>(count));
}

}  // namespace haarmoments::serial
