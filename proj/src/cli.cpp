#include "probvec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "probvec/bench.hpp"
#include "probvec/io.hpp"
#include "probvec/quantum.hpp"
#include "probvec/stats.hpp"

namespace probvec {

namespace {

// Draws vectors of the configured flavor, tracking trig-exact failures.
struct Drawer {
    MethodId method;
    bool shuffled;
    Eigen::Index dim;
    std::uint64_t attempts = 0;
    std::uint64_t failures = 0;

    std::optional<ProbabilityVector> next(Mt19937& rng) {
        ++attempts;
        switch (method) {
        case MethodId::Iid:
            return sample_iid(dim, rng);
        case MethodId::Normalization:
        case MethodId::Trig:
            return shuffled ? sample_unbiased(method, dim, rng)
                            : (method == MethodId::Normalization
                                   ? sample_normalization_biased(dim, rng)
                                   : sample_trig_biased(dim, rng));
        case MethodId::TrigExact: {
            auto p = sample_trig_exact(dim, rng);
            if (!p)
                ++failures;
            return p;
        }
        }
        throw std::invalid_argument("unknown method");
    }

    std::vector<ProbabilityVector> collect(std::uint64_t samples, Mt19937& rng) {
        std::vector<ProbabilityVector> out;
        out.reserve(samples);
        for (std::uint64_t i = 0; i < samples; ++i)
            if (auto p = next(rng))
                out.push_back(std::move(*p));
        return out;
    }
};

std::filesystem::path component_path(const std::filesystem::path& base, Eigen::Index component) {
    auto path = base;
    path.replace_filename(base.stem().string() + "_p" + std::to_string(component + 1) +
                          base.extension().string());
    return path;
}

void validate(const RunConfig& cfg) {
    if (cfg.dim < 2)
        throw std::invalid_argument("--dim must be at least 2");
    if (cfg.samples < 1)
        throw std::invalid_argument("--samples must be at least 1");
    if (cfg.bins < 2)
        throw std::invalid_argument("--bins must be at least 2");
    if (cfg.output_path.empty())
        throw std::invalid_argument("--out is required");
    if (cfg.command == Command::Tail && !(cfg.threshold > 0.0 && cfg.threshold < 1.0))
        throw std::invalid_argument("--threshold must lie strictly between 0 and 1");
    if (cfg.command == Command::Simplex && cfg.dim != 3)
        throw std::invalid_argument("simplex export requires --dim 3");
    if (cfg.format == OutputFormat::Json && cfg.command != Command::Qstate)
        throw std::invalid_argument("--format json is only available for qstate");
    if (cfg.shuffle && cfg.method == MethodId::TrigExact)
        throw std::invalid_argument("--shuffle cannot be combined with trig-exact");
    if (cfg.command == Command::Qstate &&
        !(cfg.method == MethodId::Normalization || cfg.method == MethodId::Trig))
        throw std::invalid_argument("qstate requires --method norm or trig");
}

// iid vectors are exchangeable already; a shuffle would only burn draws.
bool effective_shuffle(const RunConfig& cfg) {
    if (cfg.shuffle && cfg.method == MethodId::Iid) {
        std::cerr << "warning: --shuffle is a no-op for the iid method; ignoring\n";
        return false;
    }
    return cfg.shuffle;
}

void print_summary(const RunConfig& cfg, const Mt19937& rng, const std::string& out_note,
                   const Drawer* drawer = nullptr) {
    std::cout << to_string(cfg.command) << " seed=" << cfg.seed << " draws=" << rng.draw_count()
              << " out=" << out_note;
    if (drawer && drawer->method == MethodId::TrigExact)
        std::cout << " failures=" << drawer->failures << "/" << drawer->attempts << " rate="
                  << io::format_double(static_cast<double>(drawer->failures) /
                                       static_cast<double>(drawer->attempts));
    std::cout << "\n";
}

int run_generate(const RunConfig& cfg, Mt19937& rng) {
    Drawer drawer{cfg.method, effective_shuffle(cfg), cfg.dim};
    auto os = io::open_output(cfg.output_path);
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        if (auto p = drawer.next(rng))
            io::write_vector_row(os, p->components);
    print_summary(cfg, rng, cfg.output_path.string(), &drawer);
    return 0;
}

int run_means(const RunConfig& cfg, Mt19937& rng) {
    Drawer drawer{cfg.method, effective_shuffle(cfg), cfg.dim};
    ComponentMeans means(cfg.dim);
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        if (auto p = drawer.next(rng))
            means.accumulate(*p);
    io::write_means_csv(cfg.output_path, means.means());
    print_summary(cfg, rng, cfg.output_path.string(), &drawer);
    return 0;
}

int run_hist(const RunConfig& cfg, Mt19937& rng) {
    Drawer drawer{cfg.method, effective_shuffle(cfg), cfg.dim};
    std::vector<Histogram> hists(static_cast<std::size_t>(cfg.dim), Histogram(cfg.bins));
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        if (auto p = drawer.next(rng))
            for (Eigen::Index j = 0; j < cfg.dim; ++j)
                hists[static_cast<std::size_t>(j)].add(p->components[j]);
    for (Eigen::Index j = 0; j < cfg.dim; ++j)
        io::write_histogram_csv(component_path(cfg.output_path, j),
                                hists[static_cast<std::size_t>(j)]);
    print_summary(cfg, rng,
                  component_path(cfg.output_path, 0).string() + ".." +
                      component_path(cfg.output_path, cfg.dim - 1).filename().string(),
                  &drawer);
    return 0;
}

int run_tail(const RunConfig& cfg, Mt19937& rng) {
    Drawer drawer{cfg.method, effective_shuffle(cfg), cfg.dim};
    const auto samples = drawer.collect(cfg.samples, rng);
    io::TailResult result;
    result.method = cfg.method;
    result.shuffled = drawer.shuffled;
    result.dim = cfg.dim;
    result.samples = samples.size();
    result.threshold = cfg.threshold;
    result.fraction = max_component_tail(samples, cfg.threshold);
    io::write_tail_csv(cfg.output_path, result);
    print_summary(cfg, rng, cfg.output_path.string(), &drawer);
    return 0;
}

// First-component histograms of both shuffled methods, drawn sequentially
// from one stream, compared by total variation distance.
int run_compare(const RunConfig& cfg, Mt19937& rng) {
    Histogram h_norm(cfg.bins), h_trig(cfg.bins);
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        h_norm.add(sample_unbiased(MethodId::Normalization, cfg.dim, rng).components[0]);
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        h_trig.add(sample_unbiased(MethodId::Trig, cfg.dim, rng).components[0]);
    const double tv = total_variation(h_norm, h_trig);
    auto os = io::open_output(cfg.output_path);
    os << "dim,samples,bins,tv_distance\n"
       << cfg.dim << ',' << cfg.samples << ',' << cfg.bins << ',' << io::format_double(tv)
       << '\n';
    print_summary(cfg, rng, cfg.output_path.string() + " tv=" + io::format_double(tv));
    return 0;
}

int run_simplex(const RunConfig& cfg, Mt19937& rng) {
    Drawer drawer{cfg.method, effective_shuffle(cfg), cfg.dim};
    const auto samples = drawer.collect(cfg.samples, rng);
    io::write_points_csv(cfg.output_path, export_simplex_points(samples));
    print_summary(cfg, rng, cfg.output_path.string(), &drawer);
    return 0;
}

// Sweeps d = 2, 4, ..., up to --dim for both shuffled methods; one CSV row
// per (method, dimension) holding the median-of-5 timing run. --samples sets
// the starting repetition count (auto-scaled up to the 10 ms window).
int run_bench(const RunConfig& cfg, Mt19937& rng) {
    std::vector<BenchRecord> records;
    for (const MethodId method : {MethodId::Normalization, MethodId::Trig}) {
        for (Eigen::Index d = 2; d <= cfg.dim; d *= 2) {
            std::vector<BenchRecord> runs;
            runs.reserve(5);
            for (int r = 0; r < 5; ++r)
                runs.push_back(time_method(method, d, cfg.samples, rng));
            records.push_back(median_run(std::move(runs)));
        }
    }
    io::write_bench_csv(cfg.output_path, records);
    print_summary(cfg, rng, cfg.output_path.string());
    return 0;
}

int run_qstate(const RunConfig& cfg, Mt19937& rng) {
    std::vector<PureState> states;
    states.reserve(cfg.samples);
    for (std::uint64_t i = 0; i < cfg.samples; ++i)
        states.push_back(random_pure_state(cfg.dim, cfg.method, rng));
    if (cfg.format == OutputFormat::Json)
        io::write_states_json(cfg.output_path, states);
    else
        io::write_states_csv(cfg.output_path, states);
    print_summary(cfg, rng, cfg.output_path.string());
    return 0;
}

} // namespace

std::string_view to_string(Command command) {
    switch (command) {
    case Command::Generate:
        return "generate";
    case Command::Means:
        return "means";
    case Command::Hist:
        return "hist";
    case Command::Tail:
        return "tail";
    case Command::Compare:
        return "compare";
    case Command::Simplex:
        return "simplex";
    case Command::Bench:
        return "bench";
    case Command::Qstate:
        return "qstate";
    }
    throw std::invalid_argument("to_string: unknown Command");
}

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::Json ? "json" : "csv";
}

int run(const RunConfig& config) {
    validate(config);
    Mt19937 rng(config.seed);
    switch (config.command) {
    case Command::Generate:
        return run_generate(config, rng);
    case Command::Means:
        return run_means(config, rng);
    case Command::Hist:
        return run_hist(config, rng);
    case Command::Tail:
        return run_tail(config, rng);
    case Command::Compare:
        return run_compare(config, rng);
    case Command::Simplex:
        return run_simplex(config, rng);
    case Command::Bench:
        return run_bench(config, rng);
    case Command::Qstate:
        return run_qstate(config, rng);
    }
    throw std::invalid_argument("unknown command");
}

} // namespace probvec
