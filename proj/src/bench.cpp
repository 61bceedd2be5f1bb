#include "probvec/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace probvec {

namespace {

constexpr double kMinWindowSeconds = 0.010;
constexpr std::uint64_t kWarmupVectors = 8;

double run_window(MethodId method, Eigen::Index dim, std::uint64_t reps, Mt19937& rng) {
    using clock = std::chrono::steady_clock;
    double checksum = 0.0;
    const auto start = clock::now();
    for (std::uint64_t r = 0; r < reps; ++r)
        checksum += sample_unbiased(method, dim, rng).components.coeff(0);
    const auto stop = clock::now();
    volatile double sink = checksum; // keep the generated vectors observable
    (void)sink;
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

BenchRecord time_method(MethodId method, Eigen::Index dim, std::uint64_t reps, Mt19937& rng) {
    if (method != MethodId::Normalization && method != MethodId::Trig)
        throw std::invalid_argument("time_method: method must be norm or trig");
    detail::require_dim(dim);

    std::uint64_t n = std::max<std::uint64_t>(reps, 1);
    for (std::uint64_t w = 0; w < kWarmupVectors; ++w)
        (void)sample_unbiased(method, dim, rng);

    double total = run_window(method, dim, n, rng);
    while (total < kMinWindowSeconds) {
        n *= 2;
        total = run_window(method, dim, n, rng);
    }

    BenchRecord rec;
    rec.method = method;
    rec.dim = dim;
    rec.reps = n;
    rec.total_seconds = total;
    rec.per_vector_seconds = total / static_cast<double>(n);
    return rec;
}

BenchRecord median_run(std::vector<BenchRecord> runs) {
    if (runs.empty())
        throw std::invalid_argument("median_run: no runs");
    const auto mid = runs.begin() + static_cast<std::ptrdiff_t>(runs.size() / 2);
    std::nth_element(runs.begin(), mid, runs.end(), [](const BenchRecord& a, const BenchRecord& b) {
        return a.per_vector_seconds < b.per_vector_seconds;
    });
    return *mid;
}

double loglog_slope(std::span<const BenchRecord> records) {
    if (records.size() < 2)
        throw std::invalid_argument("loglog_slope: need at least two records");
    Eigen::VectorXd x(records.size()), y(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        x[static_cast<Eigen::Index>(i)] = std::log(static_cast<double>(records[i].dim));
        y[static_cast<Eigen::Index>(i)] = std::log(records[i].per_vector_seconds);
    }
    const Eigen::ArrayXd dx = x.array() - x.mean();
    const double var = dx.square().sum();
    if (var == 0.0)
        throw std::invalid_argument("loglog_slope: need at least two distinct dimensions");
    return (dx * (y.array() - y.mean())).sum() / var;
}

} // namespace probvec
