// probvec — deterministic generation of pseudo-random probability vectors
// and pure quantum states, with statistics, comparison, and timing commands.
// All commands write data files (CSV; JSON for qstate) for external plotting.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "probvec/cli.hpp"

namespace {

struct Flags {
    std::string method = "norm";
    std::string format = "csv";
    probvec::RunConfig cfg;
};

void add_method(CLI::App* sub, Flags& flags, const std::string& allowed) {
    sub->add_option("--method", flags.method, "generation method (" + allowed + ")")
        ->check(CLI::IsMember(CLI::detail::split(allowed, '|')));
}

void add_common(CLI::App* sub, Flags& flags) {
    sub->add_option("--samples", flags.cfg.samples, "number of vectors (attempts for trig-exact)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", flags.cfg.seed, "Mersenne Twister seed")
        ->capture_default_str();
    sub->add_option("--out", flags.cfg.output_path, "output file path")->required();
}

void add_dim(CLI::App* sub, Flags& flags, bool required = true) {
    auto* opt = sub->add_option("--dim", flags.cfg.dim, "probability vector dimension (>= 2)");
    if (required)
        opt->required();
}

void add_shuffle(CLI::App* sub, Flags& flags) {
    sub->add_flag("--shuffle", flags.cfg.shuffle, "de-bias by random component shuffling");
}

void add_bins(CLI::App* sub, Flags& flags) {
    sub->add_option("--bins", flags.cfg.bins, "histogram bin count")->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-random probability vectors and pure quantum states"};
    app.require_subcommand(1);
    Flags flags;

    auto* generate = app.add_subcommand("generate", "write sampled probability vectors as CSV");
    add_method(generate, flags, "iid|norm|trig|trig-exact");
    add_dim(generate, flags);
    add_shuffle(generate, flags);
    add_common(generate, flags);

    auto* means = app.add_subcommand("means", "per-component sample means");
    add_method(means, flags, "iid|norm|trig|trig-exact");
    add_dim(means, flags);
    add_shuffle(means, flags);
    add_common(means, flags);

    auto* hist = app.add_subcommand("hist", "marginal histogram of every component");
    add_method(hist, flags, "iid|norm|trig|trig-exact");
    add_dim(hist, flags);
    add_bins(hist, flags);
    add_shuffle(hist, flags);
    add_common(hist, flags);

    auto* tail = app.add_subcommand("tail", "fraction of samples with max component above a threshold");
    add_method(tail, flags, "iid|norm|trig|trig-exact");
    add_dim(tail, flags);
    tail->add_option("--threshold", flags.cfg.threshold, "tail threshold in (0,1)")->required();
    add_shuffle(tail, flags);
    add_common(tail, flags);

    auto* compare = app.add_subcommand(
        "compare", "total variation distance between the shuffled norm and trig marginals");
    add_dim(compare, flags);
    add_bins(compare, flags);
    add_common(compare, flags);

    auto* simplex = app.add_subcommand("simplex", "ternary-plot coordinates of d=3 samples");
    add_method(simplex, flags, "iid|norm|trig|trig-exact");
    flags.cfg.dim = 3;
    add_dim(simplex, flags, /*required=*/false);
    add_shuffle(simplex, flags);
    add_common(simplex, flags);

    auto* bench = app.add_subcommand("bench", "per-vector timing sweep over dimensions");
    bench->add_option("--dim", flags.cfg.dim, "largest dimension in the sweep (powers of 2 from 2)")
        ->capture_default_str();
    add_common(bench, flags);

    auto* qstate = app.add_subcommand("qstate", "unbiased pseudo-random pure quantum states");
    add_method(qstate, flags, "norm|trig");
    add_dim(qstate, flags);
    qstate->add_option("--format", flags.format, "output format (csv|json)")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    add_common(qstate, flags);

    // bench sweeps to 1024 unless told otherwise
    bench->preparse_callback([&flags](std::size_t) { flags.cfg.dim = 1024; });

    CLI11_PARSE(app, argc, argv);

    using probvec::Command;
    if (generate->parsed())
        flags.cfg.command = Command::Generate;
    else if (means->parsed())
        flags.cfg.command = Command::Means;
    else if (hist->parsed())
        flags.cfg.command = Command::Hist;
    else if (tail->parsed())
        flags.cfg.command = Command::Tail;
    else if (compare->parsed())
        flags.cfg.command = Command::Compare;
    else if (simplex->parsed())
        flags.cfg.command = Command::Simplex;
    else if (bench->parsed())
        flags.cfg.command = Command::Bench;
    else if (qstate->parsed())
        flags.cfg.command = Command::Qstate;

    try {
        flags.cfg.method = probvec::parse_method(flags.method);
        flags.cfg.format =
            flags.format == "json" ? probvec::OutputFormat::Json : probvec::OutputFormat::Csv;
        return probvec::run(flags.cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
