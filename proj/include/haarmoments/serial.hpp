#pragma once

// Single-threaded reference kernels. They walk the same sample/stream layout
// as the parallel kernels with a single accumulator, and are kept for
// testing and benchmarking against the OpenMP versions.

#include "haarmoments/haar_mc.hpp"
#include "haarmoments/rational.hpp"

namespace haarmoments::serial {

MomentEstimate estimate_statistic(int d, const SamplingConfig& config,
                                  const Statistic& statistic);

/// |u_11|^2 samples in sample order.
std::vector<double> entry_samples(int d, const SamplingConfig& config);

BigInteger count_bounded_lis_permutations(int n, int d);

}  // namespace haarmoments::serial
