// Statistical accumulators for validating sampler output: per-component
// running means, fixed-bin marginal histograms, total variation distance,
// max-component tail fractions, and ternary-plot export for d=3.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>

#include "probvec/sampler.hpp"

namespace probvec {

// Running mean of each component over a stream of probability vectors.
// Instances accumulated in parallel can be combined with merge(), which is
// associative (field-wise addition).
class ComponentMeans {
public:
    explicit ComponentMeans(Eigen::Index dim);

    void accumulate(const ProbabilityVector& p);
    void merge(const ComponentMeans& other);

    Eigen::VectorXd means() const;
    Eigen::Index dim() const { return sums_.size(); }
    std::uint64_t count() const { return count_; }

private:
    Eigen::VectorXd sums_;
    std::uint64_t count_ = 0;
};

// Equal-width histogram over [0,1]. Value v lands in bin floor(v*B); v = 1
// is clamped into the last bin. merge() is associative.
class Histogram {
public:
    explicit Histogram(Eigen::Index bins);
    explicit Histogram(Eigen::VectorX<std::uint64_t> counts);

    void add(double value);
    void merge(const Histogram& other);

    Eigen::Index bins() const { return counts_.size(); }
    std::uint64_t total() const { return total_; }
    const Eigen::VectorX<std::uint64_t>& counts() const { return counts_; }

    double bin_low(Eigen::Index bin) const;
    double bin_high(Eigen::Index bin) const;
    // Empirical density count/(total * width); 0 for an empty histogram.
    double density(Eigen::Index bin) const;

private:
    Eigen::VectorX<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

Histogram histogram(std::span<const double> values, Eigen::Index bins);

// Half the L1 distance between the two normalized histograms; 0 iff they are
// identical after normalization, 1 iff disjoint. Requires matching bin counts
// and at least one observation on each side.
double total_variation(const Histogram& h1, const Histogram& h2);

// Fraction of samples whose largest component exceeds `threshold`.
double max_component_tail(std::span<const ProbabilityVector> samples, double threshold);

// Ternary-plot coordinates for a d=3 vector: x = p2 + p3/2, y = (sqrt(3)/2) p3,
// mapping the simplex onto an equilateral triangle with unit side.
Eigen::Vector2d simplex_point(const Eigen::Ref<const Eigen::Vector3d>& p);
Eigen::MatrixX2d export_simplex_points(std::span<const ProbabilityVector> samples);

} // namespace probvec
