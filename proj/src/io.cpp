#include "probvec/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace probvec::io {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::uint64_t parse_u64(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error("malformed integer field '" + std::string(text) + "'");
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return is;
}

void expect_header(std::istream& is, std::string_view expected,
                   const std::filesystem::path& path) {
    std::string line;
    if (!std::getline(is, line) || line != expected)
        throw std::runtime_error("'" + path.string() + "': expected header '" +
                                 std::string(expected) + "'");
}

// Remaining non-empty lines, split on commas, each with `fields` fields.
std::vector<std::vector<std::string>> read_rows(std::istream& is, std::size_t fields,
                                                const std::filesystem::path& path) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto parts = split_fields(line);
        if (parts.size() != fields)
            throw std::runtime_error("'" + path.string() + "': expected " +
                                     std::to_string(fields) + " fields, got " +
                                     std::to_string(parts.size()));
        std::vector<std::string> row;
        row.reserve(parts.size());
        for (auto p : parts)
            row.emplace_back(p);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::runtime_error("malformed numeric field '" + std::string(text) + "'");
    return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return os;
}

void write_vector_row(std::ostream& os, const Eigen::Ref<const Eigen::VectorXd>& components) {
    for (Eigen::Index j = 0; j < components.size(); ++j) {
        if (j > 0)
            os << ',';
        os << format_double(components[j]);
    }
    os << '\n';
}

Eigen::MatrixXd read_vectors_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        for (auto field : split_fields(line))
            row.push_back(parse_double(field));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("vector rows have inconsistent widths");
        rows.push_back(std::move(row));
    }
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

Eigen::MatrixXd read_vectors_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    return read_vectors_csv(is);
}

void write_histogram_csv(std::ostream& os, const Histogram& h) {
    os << "bin_low,bin_high,count,density\n";
    for (Eigen::Index b = 0; b < h.bins(); ++b)
        os << format_double(h.bin_low(b)) << ',' << format_double(h.bin_high(b)) << ','
           << h.counts()[b] << ',' << format_double(h.density(b)) << '\n';
}

void write_histogram_csv(const std::filesystem::path& path, const Histogram& h) {
    auto os = open_output(path);
    write_histogram_csv(os, h);
}

Histogram read_histogram_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "bin_low,bin_high,count,density", path);
    const auto rows = read_rows(is, 4, path);
    Eigen::VectorX<std::uint64_t> counts(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t b = 0; b < rows.size(); ++b)
        counts[static_cast<Eigen::Index>(b)] = parse_u64(rows[b][2]);
    return Histogram(std::move(counts));
}

void write_means_csv(std::ostream& os, const Eigen::Ref<const Eigen::VectorXd>& means) {
    os << "component,mean\n";
    for (Eigen::Index j = 0; j < means.size(); ++j)
        os << (j + 1) << ',' << format_double(means[j]) << '\n';
}

void write_means_csv(const std::filesystem::path& path,
                     const Eigen::Ref<const Eigen::VectorXd>& means) {
    auto os = open_output(path);
    write_means_csv(os, means);
}

Eigen::VectorXd read_means_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "component,mean", path);
    const auto rows = read_rows(is, 2, path);
    Eigen::VectorXd means(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (parse_u64(rows[j][0]) != j + 1)
            throw std::runtime_error("'" + path.string() + "': component indices not 1..d");
        means[static_cast<Eigen::Index>(j)] = parse_double(rows[j][1]);
    }
    return means;
}

void write_points_csv(std::ostream& os, const Eigen::Ref<const Eigen::MatrixX2d>& points) {
    os << "x,y\n";
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        os << format_double(points(i, 0)) << ',' << format_double(points(i, 1)) << '\n';
}

void write_points_csv(const std::filesystem::path& path,
                      const Eigen::Ref<const Eigen::MatrixX2d>& points) {
    auto os = open_output(path);
    write_points_csv(os, points);
}

Eigen::MatrixX2d read_points_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "x,y", path);
    const auto rows = read_rows(is, 2, path);
    Eigen::MatrixX2d points(static_cast<Eigen::Index>(rows.size()), 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        points(static_cast<Eigen::Index>(i), 0) = parse_double(rows[i][0]);
        points(static_cast<Eigen::Index>(i), 1) = parse_double(rows[i][1]);
    }
    return points;
}

void write_bench_csv(std::ostream& os, std::span<const BenchRecord> records) {
    os << "method,dim,reps,total_seconds,per_vector_seconds\n";
    for (const BenchRecord& r : records)
        os << to_string(r.method) << ',' << r.dim << ',' << r.reps << ','
           << format_double(r.total_seconds) << ',' << format_double(r.per_vector_seconds)
           << '\n';
}

void write_bench_csv(const std::filesystem::path& path, std::span<const BenchRecord> records) {
    auto os = open_output(path);
    write_bench_csv(os, records);
}

std::vector<BenchRecord> read_bench_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "method,dim,reps,total_seconds,per_vector_seconds", path);
    const auto rows = read_rows(is, 5, path);
    std::vector<BenchRecord> records;
    records.reserve(rows.size());
    for (const auto& row : rows) {
        BenchRecord r;
        r.method = parse_method(row[0]);
        r.dim = static_cast<Eigen::Index>(parse_u64(row[1]));
        r.reps = parse_u64(row[2]);
        r.total_seconds = parse_double(row[3]);
        r.per_vector_seconds = parse_double(row[4]);
        records.push_back(r);
    }
    return records;
}

void write_compare_csv(const std::filesystem::path& path, const CompareResult& result) {
    auto os = open_output(path);
    os << "dim,samples,bins,tv_distance\n"
       << result.dim << ',' << result.samples << ',' << result.bins << ','
       << format_double(result.tv_distance) << '\n';
}

CompareResult read_compare_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "dim,samples,bins,tv_distance", path);
    const auto rows = read_rows(is, 4, path);
    if (rows.size() != 1)
        throw std::runtime_error("'" + path.string() + "': expected exactly one result row");
    CompareResult result;
    result.dim = static_cast<Eigen::Index>(parse_u64(rows[0][0]));
    result.samples = parse_u64(rows[0][1]);
    result.bins = static_cast<Eigen::Index>(parse_u64(rows[0][2]));
    result.tv_distance = parse_double(rows[0][3]);
    return result;
}

void write_tail_csv(const std::filesystem::path& path, const TailResult& result) {
    auto os = open_output(path);
    os << "method,shuffled,dim,samples,threshold,fraction\n"
       << to_string(result.method) << ',' << (result.shuffled ? "true" : "false") << ','
       << result.dim << ',' << result.samples << ',' << format_double(result.threshold) << ','
       << format_double(result.fraction) << '\n';
}

TailResult read_tail_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "method,shuffled,dim,samples,threshold,fraction", path);
    const auto rows = read_rows(is, 6, path);
    if (rows.size() != 1)
        throw std::runtime_error("'" + path.string() + "': expected exactly one result row");
    TailResult result;
    result.method = parse_method(rows[0][0]);
    if (rows[0][1] != "true" && rows[0][1] != "false")
        throw std::runtime_error("'" + path.string() + "': malformed shuffled flag");
    result.shuffled = rows[0][1] == "true";
    result.dim = static_cast<Eigen::Index>(parse_u64(rows[0][2]));
    result.samples = parse_u64(rows[0][3]);
    result.threshold = parse_double(rows[0][4]);
    result.fraction = parse_double(rows[0][5]);
    return result;
}

void write_states_csv(std::ostream& os, std::span<const PureState> states) {
    os << "j,re,im\n";
    for (const PureState& psi : states)
        for (Eigen::Index j = 0; j < psi.dim(); ++j)
            os << (j + 1) << ',' << format_double(psi.amplitudes[j].real()) << ','
               << format_double(psi.amplitudes[j].imag()) << '\n';
}

void write_states_csv(const std::filesystem::path& path, std::span<const PureState> states) {
    auto os = open_output(path);
    write_states_csv(os, states);
}

std::vector<PureState> read_states_csv(const std::filesystem::path& path) {
    auto is = open_input(path);
    expect_header(is, "j,re,im", path);
    const auto rows = read_rows(is, 3, path);
    std::vector<PureState> states;
    std::vector<std::complex<double>> current;
    auto flush = [&] {
        if (current.empty())
            return;
        PureState psi;
        psi.amplitudes = Eigen::Map<const Eigen::VectorXcd>(current.data(),
                                                            static_cast<Eigen::Index>(current.size()));
        states.push_back(std::move(psi));
        current.clear();
    };
    for (const auto& row : rows) {
        const std::uint64_t j = parse_u64(row[0]);
        if (j == 1)
            flush();
        else if (j != current.size() + 1)
            throw std::runtime_error("'" + path.string() + "': amplitude index out of order");
        current.emplace_back(parse_double(row[1]), parse_double(row[2]));
    }
    flush();
    return states;
}

void write_states_json(std::ostream& os, std::span<const PureState> states) {
    nlohmann::json doc;
    doc["dim"] = states.empty() ? 0 : states.front().dim();
    auto& list = doc["states"] = nlohmann::json::array();
    for (const PureState& psi : states) {
        nlohmann::json state = nlohmann::json::array();
        for (Eigen::Index j = 0; j < psi.dim(); ++j)
            state.push_back({psi.amplitudes[j].real(), psi.amplitudes[j].imag()});
        list.push_back(std::move(state));
    }
    os << doc.dump(2) << '\n';
}

void write_states_json(const std::filesystem::path& path, std::span<const PureState> states) {
    auto os = open_output(path);
    write_states_json(os, states);
}

std::vector<PureState> read_states_json(const std::filesystem::path& path) {
    auto is = open_input(path);
    const auto doc = nlohmann::json::parse(is);
    std::vector<PureState> states;
    for (const auto& state : doc.at("states")) {
        PureState psi;
        psi.amplitudes.resize(static_cast<Eigen::Index>(state.size()));
        Eigen::Index j = 0;
        for (const auto& pair : state)
            psi.amplitudes[j++] = {pair.at(0).get<double>(), pair.at(1).get<double>()};
        states.push_back(std::move(psi));
    }
    return states;
}

} // namespace probvec::io
