// Command execution behind the probvec CLI. Each command runs one module
// pipeline deterministically from the configured seed and writes data files
// for external plotting; the executable in tools/ is a thin flag parser over
// run().

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "probvec/rng.hpp"
#include "probvec/sampler.hpp"

namespace probvec {

enum class Command { Generate, Means, Hist, Tail, Compare, Simplex, Bench, Qstate };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command command);
std::string_view to_string(OutputFormat format);

struct RunConfig {
    Command command = Command::Generate;
    MethodId method = MethodId::Normalization;
    Eigen::Index dim = 2;
    std::uint64_t samples = 1;
    std::uint32_t seed = kDefaultSeed;
    Eigen::Index bins = 64;
    double threshold = 0.5; // used by `tail` only
    bool shuffle = false;
    std::filesystem::path output_path;
    OutputFormat format = OutputFormat::Csv;
};

// Executes the configured command, writes its output file(s), and prints a
// one-line summary (command, seed, draws consumed, output path) to stdout.
// Returns 0 on success; throws std::invalid_argument for bad configurations
// and std::runtime_error for I/O failures. trig-exact inversion failures do
// not abort: successful vectors are emitted and the failure rate is reported
// in the summary.
int run(const RunConfig& config);

} // namespace probvec
