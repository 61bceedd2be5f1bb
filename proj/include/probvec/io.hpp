// CSV and JSON emission of sampler, stats, bench, and quantum output, plus
// the matching readers. All text is ASCII with '.' decimal separator and
// newline-terminated rows; doubles are written with 17 significant digits so
// every value round-trips bit-exactly.

#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "probvec/bench.hpp"
#include "probvec/quantum.hpp"
#include "probvec/sampler.hpp"
#include "probvec/stats.hpp"

namespace probvec::io {

// Shortest-exact decimal text (17 significant digits), locale-independent.
std::string format_double(double value);
double parse_double(std::string_view text);

// Probability vectors: one vector per row, components in order, no header.
void write_vector_row(std::ostream& os, const Eigen::Ref<const Eigen::VectorXd>& components);
Eigen::MatrixXd read_vectors_csv(std::istream& is);
Eigen::MatrixXd read_vectors_csv(const std::filesystem::path& path);

// Histogram: header "bin_low,bin_high,count,density".
void write_histogram_csv(std::ostream& os, const Histogram& h);
void write_histogram_csv(const std::filesystem::path& path, const Histogram& h);
Histogram read_histogram_csv(const std::filesystem::path& path);

// Component means: header "component,mean", 1-based component index.
void write_means_csv(std::ostream& os, const Eigen::Ref<const Eigen::VectorXd>& means);
void write_means_csv(const std::filesystem::path& path,
                     const Eigen::Ref<const Eigen::VectorXd>& means);
Eigen::VectorXd read_means_csv(const std::filesystem::path& path);

// Ternary-plot points: header "x,y".
void write_points_csv(std::ostream& os, const Eigen::Ref<const Eigen::MatrixX2d>& points);
void write_points_csv(const std::filesystem::path& path,
                      const Eigen::Ref<const Eigen::MatrixX2d>& points);
Eigen::MatrixX2d read_points_csv(const std::filesystem::path& path);

// Timing records: header "method,dim,reps,total_seconds,per_vector_seconds".
void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records);
void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRecord> records);
std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path);

// Method-comparison result: header "dim,samples,bins,tv_distance".
struct CompareResult {
    Eigen::Index dim = 0;
    std::uint64_t samples = 0;
    Eigen::Index bins = 0;
    double tv_distance = 0.0;
};
void write_compare_csv(const std::filesystem::path& path, const CompareResult& result);
CompareResult read_compare_csv(const std::filesystem::path& path);

// Tail-fraction result: header "method,shuffled,dim,samples,threshold,fraction".
struct TailResult {
    MethodId method = MethodId::Iid;
    bool shuffled = false;
    Eigen::Index dim = 0;
    std::uint64_t samples = 0;
    double threshold = 0.0;
    double fraction = 0.0;
};
void write_tail_csv(const std::filesystem::path& path, const TailResult& result);
TailResult read_tail_csv(const std::filesystem::path& path);

// Pure states, CSV: header "j,re,im"; j cycles 1..d, one block per state.
void write_states_csv(std::ostream& os, std::span<const PureState> states);
void write_states_csv(const std::filesystem::path& path, std::span<const PureState> states);
std::vector<PureState> read_states_csv(const std::filesystem::path& path);

// Pure states, JSON: {"dim": d, "states": [[[re,im], ...], ...]}.
void write_states_json(std::ostream& os, std::span<const PureState> states);
void write_states_json(const std::filesystem::path& path, std::span<const PureState> states);
std::vector<PureState> read_states_json(const std::filesystem::path& path);

// Opens for writing, throwing std::runtime_error on failure.
std::ofstream open_output(const std::filesystem::path& path);

} // namespace probvec::io
