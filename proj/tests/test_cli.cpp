#include <doctest.h>

#include <cmath>
#include <fstream>

#include "probvec/cli.hpp"
#include "probvec/io.hpp"
#include "test_util.hpp"

using namespace probvec;

namespace {

RunConfig base(Command command, const std::filesystem::path& out) {
    RunConfig cfg;
    cfg.command = command;
    cfg.output_path = out;
    return cfg;
}

} // namespace

TEST_CASE("generate is deterministic in its configuration") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Generate, dir.file("a.csv"));
    cfg.method = MethodId::Normalization;
    cfg.dim = 4;
    cfg.samples = 3;
    cfg.seed = 7;
    cfg.shuffle = true;
    CHECK(run(cfg) == 0);

    cfg.output_path = dir.file("b.csv");
    CHECK(run(cfg) == 0);
    CHECK(testutil::slurp(dir.file("a.csv")) == testutil::slurp(dir.file("b.csv")));

    const Eigen::MatrixXd rows = io::read_vectors_csv(dir.file("a.csv"));
    REQUIRE(rows.rows() == 3);
    REQUIRE(rows.cols() == 4);
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        CHECK(on_simplex(rows.row(i).transpose()));
}

TEST_CASE("means reproduces the biased normalization table") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Means, dir.file("means.csv"));
    cfg.method = MethodId::Normalization;
    cfg.dim = 5;
    cfg.samples = 1000000;
    cfg.seed = 1;
    CHECK(run(cfg) == 0);

    const Eigen::VectorXd means = io::read_means_csv(dir.file("means.csv"));
    const double table[] = {0.4998, 0.2501, 0.1252, 0.0625, 0.0624};
    REQUIRE(means.size() == 5);
    for (int j = 0; j < 5; ++j)
        CHECK(std::abs(means[j] - table[j]) < 0.003);
}

TEST_CASE("compare reports a small tv distance between the two methods") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Compare, dir.file("compare.csv"));
    cfg.dim = 8;
    cfg.samples = 1000000;
    cfg.bins = 64;
    cfg.seed = 1;
    CHECK(run(cfg) == 0);

    std::ifstream is(dir.file("compare.csv"));
    std::string header, row;
    REQUIRE(std::getline(is, header));
    CHECK(header == "dim,samples,bins,tv_distance");
    REQUIRE(std::getline(is, row));
    const double tv = io::parse_double(row.substr(row.rfind(',') + 1));
    CHECK(tv < 0.01);
}

TEST_CASE("shuffle is a no-op for iid generation") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Generate, dir.file("plain.csv"));
    cfg.method = MethodId::Iid;
    cfg.dim = 3;
    cfg.samples = 5;
    cfg.seed = 3;
    CHECK(run(cfg) == 0);

    cfg.shuffle = true; // warns, then proceeds unshuffled
    cfg.output_path = dir.file("shuffled.csv");
    CHECK(run(cfg) == 0);
    CHECK(testutil::slurp(dir.file("plain.csv")) == testutil::slurp(dir.file("shuffled.csv")));
}

TEST_CASE("invalid configurations are rejected") {
    testutil::TempDir dir;

    RunConfig cfg = base(Command::Generate, dir.file("out.csv"));
    cfg.method = MethodId::TrigExact;
    cfg.dim = 5;
    cfg.shuffle = true;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Generate, dir.file("out.csv"));
    cfg.dim = 1;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Generate, dir.file("out.csv"));
    cfg.dim = 4;
    cfg.samples = 0;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Hist, dir.file("out.csv"));
    cfg.dim = 4;
    cfg.bins = 1;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Tail, dir.file("out.csv"));
    cfg.dim = 4;
    cfg.threshold = 1.0;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Simplex, dir.file("out.csv"));
    cfg.dim = 4;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Generate, dir.file("out.csv"));
    cfg.dim = 4;
    cfg.format = OutputFormat::Json; // json is a qstate-only format
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Qstate, dir.file("out.csv"));
    cfg.dim = 4;
    cfg.method = MethodId::Iid;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);

    cfg = base(Command::Generate, "");
    cfg.dim = 4;
    CHECK_THROWS_AS((void)run(cfg), std::invalid_argument);
}

TEST_CASE("trig-exact generation emits only the successful inversions") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Generate, dir.file("exact.csv"));
    cfg.method = MethodId::TrigExact;
    cfg.dim = 3;
    cfg.samples = 200; // attempts; roughly half succeed at d=3
    cfg.seed = 2;
    CHECK(run(cfg) == 0);

    const Eigen::MatrixXd rows = io::read_vectors_csv(dir.file("exact.csv"));
    CHECK(rows.rows() > 0);
    CHECK(rows.rows() < 200);
    for (Eigen::Index i = 0; i < rows.rows(); ++i)
        CHECK(on_simplex(rows.row(i).transpose()));
}

TEST_CASE("hist writes one histogram file per component") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Hist, dir.file("hist.csv"));
    cfg.method = MethodId::Trig;
    cfg.dim = 3;
    cfg.samples = 1000;
    cfg.bins = 16;
    cfg.seed = 10;
    CHECK(run(cfg) == 0);

    for (int j = 1; j <= 3; ++j) {
        const auto h = io::read_histogram_csv(dir.file("hist_p" + std::to_string(j) + ".csv"));
        CHECK(h.bins() == 16);
        CHECK(h.total() == 1000);
    }
}

TEST_CASE("tail writes the measured fraction") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Tail, dir.file("tail.csv"));
    cfg.method = MethodId::Normalization;
    cfg.dim = 4;
    cfg.samples = 20000;
    cfg.threshold = 0.8;
    cfg.shuffle = true;
    cfg.seed = 5;
    CHECK(run(cfg) == 0);

    std::ifstream is(dir.file("tail.csv"));
    std::string header, row;
    REQUIRE(std::getline(is, header));
    CHECK(header == "method,shuffled,dim,samples,threshold,fraction");
    REQUIRE(std::getline(is, row));
    CHECK(row.rfind("norm,true,4,20000,", 0) == 0);
    const double fraction = io::parse_double(row.substr(row.rfind(',') + 1));
    CHECK(fraction > 0.15);
    CHECK(fraction < 0.35);
}

TEST_CASE("simplex exports ternary coordinates for d=3") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Simplex, dir.file("points.csv"));
    cfg.method = MethodId::Normalization;
    cfg.dim = 3;
    cfg.samples = 500;
    cfg.shuffle = true;
    cfg.seed = 4;
    CHECK(run(cfg) == 0);

    const Eigen::MatrixX2d points = io::read_points_csv(dir.file("points.csv"));
    CHECK(points.rows() == 500);
}

TEST_CASE("qstate writes parseable states in both formats") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Qstate, dir.file("states.csv"));
    cfg.method = MethodId::Trig;
    cfg.dim = 4;
    cfg.samples = 50;
    cfg.seed = 6;
    CHECK(run(cfg) == 0);
    const auto csv_states = io::read_states_csv(dir.file("states.csv"));
    REQUIRE(csv_states.size() == 50);
    for (const auto& psi : csv_states)
        CHECK(std::abs(state_norm(psi) - 1.0) <= 1e-12);

    cfg.format = OutputFormat::Json;
    cfg.output_path = dir.file("states.json");
    CHECK(run(cfg) == 0);
    const auto json_states = io::read_states_json(dir.file("states.json"));
    REQUIRE(json_states.size() == 50);
    for (std::size_t s = 0; s < 50; ++s)
        for (Eigen::Index j = 0; j < 4; ++j)
            CHECK(json_states[s].amplitudes[j] == csv_states[s].amplitudes[j]);
}

TEST_CASE("bench sweeps both methods over the dimension ladder") {
    testutil::TempDir dir;
    RunConfig cfg = base(Command::Bench, dir.file("bench.csv"));
    cfg.dim = 4; // sweep {2, 4}
    cfg.samples = 256;
    cfg.seed = 8;
    CHECK(run(cfg) == 0);

    const auto records = io::read_bench_csv(dir.file("bench.csv"));
    REQUIRE(records.size() == 4);
    CHECK(records[0].method == MethodId::Normalization);
    CHECK(records[2].method == MethodId::Trig);
    for (const auto& r : records) {
        CHECK((r.dim == 2 || r.dim == 4));
        CHECK(r.per_vector_seconds > 0.0);
        CHECK(r.total_seconds >= 0.010);
    }
}
