#include "probvec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace probvec {

ComponentMeans::ComponentMeans(Eigen::Index dim) {
    detail::require_dim(dim);
    sums_ = Eigen::VectorXd::Zero(dim);
}

void ComponentMeans::accumulate(const ProbabilityVector& p) {
    if (p.dim() != dim())
        throw std::invalid_argument("ComponentMeans::accumulate: dimension mismatch");
    sums_ += p.components;
    ++count_;
}

void ComponentMeans::merge(const ComponentMeans& other) {
    if (other.dim() != dim())
        throw std::invalid_argument("ComponentMeans::merge: dimension mismatch");
    sums_ += other.sums_;
    count_ += other.count_;
}

Eigen::VectorXd ComponentMeans::means() const {
    if (count_ == 0)
        throw std::logic_error("ComponentMeans::means: no samples accumulated");
    return sums_ / static_cast<double>(count_);
}

Histogram::Histogram(Eigen::Index bins) {
    if (bins < 2)
        throw std::invalid_argument("Histogram: need at least 2 bins");
    counts_ = Eigen::VectorX<std::uint64_t>::Zero(bins);
}

Histogram::Histogram(Eigen::VectorX<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2)
        throw std::invalid_argument("Histogram: need at least 2 bins");
    total_ = counts_.sum();
}

void Histogram::add(double value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw std::out_of_range("Histogram::add: value outside [0,1]");
    const auto bin = std::min<Eigen::Index>(
        static_cast<Eigen::Index>(value * static_cast<double>(bins())), bins() - 1);
    ++counts_[bin];
    ++total_;
}

void Histogram::merge(const Histogram& other) {
    if (other.bins() != bins())
        throw std::invalid_argument("Histogram::merge: bin count mismatch");
    counts_ += other.counts_;
    total_ += other.total_;
}

double Histogram::bin_low(Eigen::Index bin) const {
    return static_cast<double>(bin) / static_cast<double>(bins());
}

double Histogram::bin_high(Eigen::Index bin) const {
    return static_cast<double>(bin + 1) / static_cast<double>(bins());
}

double Histogram::density(Eigen::Index bin) const {
    if (total_ == 0)
        return 0.0;
    return static_cast<double>(counts_[bin]) * static_cast<double>(bins()) /
           static_cast<double>(total_);
}

Histogram histogram(std::span<const double> values, Eigen::Index bins) {
    Histogram h(bins);
    for (double v : values)
        h.add(v);
    return h;
}

double total_variation(const Histogram& h1, const Histogram& h2) {
    if (h1.bins() != h2.bins())
        throw std::invalid_argument("total_variation: bin count mismatch");
    if (h1.total() == 0 || h2.total() == 0)
        throw std::invalid_argument("total_variation: empty histogram");
    const Eigen::ArrayXd p = h1.counts().cast<double>().array() / static_cast<double>(h1.total());
    const Eigen::ArrayXd q = h2.counts().cast<double>().array() / static_cast<double>(h2.total());
    return 0.5 * (p - q).abs().sum();
}

double max_component_tail(std::span<const ProbabilityVector> samples, double threshold) {
    if (samples.empty())
        throw std::invalid_argument("max_component_tail: empty sample list");
    if (!(threshold > 0.0 && threshold < 1.0))
        throw std::invalid_argument("max_component_tail: threshold must lie in (0,1)");
    const Eigen::Index dim = samples.front().dim();
    std::uint64_t hits = 0;
    for (const ProbabilityVector& p : samples) {
        if (p.dim() != dim)
            throw std::invalid_argument("max_component_tail: dimension mismatch");
        if (p.components.maxCoeff() > threshold)
            ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples.size());
}

Eigen::Vector2d simplex_point(const Eigen::Ref<const Eigen::Vector3d>& p) {
    constexpr double kHalfSqrt3 = 0.86602540378443864676; // sqrt(3)/2
    return {p[1] + 0.5 * p[2], kHalfSqrt3 * p[2]};
}

Eigen::MatrixX2d export_simplex_points(std::span<const ProbabilityVector> samples) {
    Eigen::MatrixX2d points(static_cast<Eigen::Index>(samples.size()), 2);
    Eigen::Index row = 0;
    for (const ProbabilityVector& p : samples) {
        if (p.dim() != 3)
            throw std::invalid_argument("export_simplex_points: vectors must have dim 3");
        points.row(row++) = simplex_point(p.components.head<3>()).transpose();
    }
    return points;
}

} // namespace probvec
