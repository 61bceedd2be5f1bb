// Wall-clock cost of the unbiased generation pipeline (biased sample plus
// shuffle) as a function of dimension. Timings use a monotonic clock, exclude
// a warm-up pass, and auto-scale the repetition count so each measurement
// window is at least 10 ms. RNG cost is part of the measured method cost.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

#include "probvec/rng.hpp"
#include "probvec/sampler.hpp"

namespace probvec {

struct BenchRecord {
    MethodId method = MethodId::Normalization;
    Eigen::Index dim = 2;
    std::uint64_t reps = 0;
    double total_seconds = 0.0;
    double per_vector_seconds = 0.0;
};

// Times `reps` (or more, if the 10 ms floor demands it) unbiased vectors of
// the given method. Single-threaded; never interleaves methods.
BenchRecord time_method(MethodId method, Eigen::Index dim, std::uint64_t reps, Mt19937& rng);

// The run with the median per-vector time.
BenchRecord median_run(std::vector<BenchRecord> runs);

// Least-squares slope of log(per_vector_seconds) against log(dim); needs at
// least two distinct dimensions.
double loglog_slope(std::span<const BenchRecord> records);

} // namespace probvec
