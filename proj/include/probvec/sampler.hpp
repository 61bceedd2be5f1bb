// Generation of pseudo-random probability vectors on the d-simplex.
//
// Four constructions are provided: iid (normalize d independent uniforms),
// normalization (stick-breaking over the remaining mass), and two
// trigonometric parametrizations p_j = sin^2(theta_{j-1}) * prod cos^2(theta_k)
// with theta_0 = pi/2 — one drawing theta_j = arccos(sqrt(t_j)) directly, one
// inverting the parametrization exactly (which is numerically unstable and
// fails whenever an arcsin argument leaves [0,1]; the failure is surfaced,
// never clamped). Biased constructions are de-biased by a Fisher-Yates
// component shuffle, at the cost of d-1 extra uniforms per vector.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "probvec/rng.hpp"

namespace probvec {

enum class MethodId { Iid, Normalization, Trig, TrigExact };

// Serialized names: "iid", "norm", "trig", "trig-exact".
std::string_view to_string(MethodId method);
MethodId parse_method(std::string_view name);

// A point on the probability simplex plus provenance: how it was generated,
// whether it was shuffled, and how many uniforms it cost.
struct ProbabilityVector {
    Eigen::VectorXd components;
    MethodId method = MethodId::Iid;
    bool shuffled = false;
    std::uint64_t draws_used = 0;

    Eigen::Index dim() const { return components.size(); }
};

inline constexpr double kSimplexSumTolerance = 1e-12;

// All components non-negative and summing to 1 within tol.
bool on_simplex(const Eigen::Ref<const Eigen::VectorXd>& components,
                double tol = kSimplexSumTolerance);

// order[i] is the source position of entry i: applying to p yields q with
// q_i = p_{order[i]}.
struct Permutation {
    Eigen::VectorX<Eigen::Index> order;

    Eigen::Index size() const { return order.size(); }
};

// Raised when the iid method keeps drawing all-zero uniforms (probability
// ~2^-32d per attempt); bounded retries guarantee termination.
class DegenerateSumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kIidRetryLimit = 16;

// Exact trigonometric inversion failed: arcsin argument `argument` at angle
// index `index` (1-based, as in theta_index) exceeded 1.
struct TrigExactFailure {
    Eigen::Index index = 0;
    double argument = 0.0;
};

namespace detail {

inline void require_dim(Eigen::Index dim) {
    if (dim < 2)
        throw std::invalid_argument("probability vector dimension must be at least 2");
}

} // namespace detail

// iid method: p_j = x_j / sum_k x_k from d independent uniforms x_j.
// Consumes d uniforms (per attempt); components are exchangeable by
// construction, so no shuffle is needed.
template <UniformSource Rng>
ProbabilityVector sample_iid(Eigen::Index dim, Rng& rng) {
    detail::require_dim(dim);
    const std::uint64_t before = rng.draw_count();
    Eigen::VectorXd x(dim);
    for (int attempt = 0; attempt < kIidRetryLimit; ++attempt) {
        for (Eigen::Index j = 0; j < dim; ++j)
            x[j] = rng.next_uniform();
        const double sum = x.sum();
        if (sum > 0.0) {
            ProbabilityVector p;
            p.components = x / sum;
            p.method = MethodId::Iid;
            p.draws_used = rng.draw_count() - before;
            return p;
        }
    }
    throw DegenerateSumError("sample_iid: all-zero uniforms in every retry");
}

// Normalization method: p_1 ~ U[0,1), each later component uniform on the
// mass left over, and the last fixed by normalization. Consumes d-1 uniforms.
// The leading components are biased low-index-heavy (<p_j> = 2^-j); shuffle
// to de-bias.
template <UniformSource Rng>
ProbabilityVector sample_normalization_biased(Eigen::Index dim, Rng& rng) {
    detail::require_dim(dim);
    const std::uint64_t before = rng.draw_count();
    Eigen::VectorXd p(dim);
    double remaining = 1.0;
    for (Eigen::Index j = 0; j + 1 < dim; ++j) {
        p[j] = rng.next_uniform() * remaining;
        remaining -= p[j];
    }
    p[dim - 1] = remaining;

    ProbabilityVector out;
    out.components = std::move(p);
    out.method = MethodId::Normalization;
    out.draws_used = rng.draw_count() - before;
    return out;
}

// Trigonometric method, arccos variant: theta_j = arccos(sqrt(t_j)) for
// j = 1..d-1, then p_j = sin^2(theta_{j-1}) * prod_{k=j}^{d-1} cos^2(theta_k)
// with theta_0 = pi/2. Consumes d-1 uniforms. Mirror-image bias of the
// normalization method (<p_d> = 1/2 down to <p_1> = 2^-(d-1)); shuffle to
// de-bias.
template <UniformSource Rng>
ProbabilityVector sample_trig_biased(Eigen::Index dim, Rng& rng) {
    detail::require_dim(dim);
    const std::uint64_t before = rng.draw_count();
    const Eigen::Index n = dim - 1; // angle count; slot i holds theta_{i+1}
    Eigen::VectorXd cos2(n), sin2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double theta = std::acos(std::sqrt(rng.next_uniform()));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        cos2[i] = c * c;
        sin2[i] = s * s;
    }

    Eigen::VectorXd p(dim);
    p[dim - 1] = sin2[n - 1];
    double suffix = 1.0; // prod_{k=j}^{d-1} cos^2(theta_k), built from the top
    for (Eigen::Index i = dim - 2; i >= 0; --i) {
        suffix *= cos2[i];
        p[i] = (i == 0 ? 1.0 : sin2[i - 1]) * suffix; // sin^2(theta_0) = 1
    }

    ProbabilityVector out;
    out.components = std::move(p);
    out.method = MethodId::Trig;
    out.draws_used = rng.draw_count() - before;
    return out;
}

// Trigonometric method, exact inversion: theta_{d-1} = arcsin(sqrt(t_{d-1})),
// then theta_j = arcsin(sqrt(t_j / prod_{k=j+1}^{d-1} cos^2(theta_k))) going
// down to j = 1. The division blows past 1 whenever the remaining squared
// cosines cannot absorb t_j, which happens with probability 1 - 1/(d-1)!;
// the offending index and argument are reported through `failure`. On success
// consumes d-1 uniforms.
template <UniformSource Rng>
std::optional<ProbabilityVector> sample_trig_exact(Eigen::Index dim, Rng& rng,
                                                   TrigExactFailure* failure = nullptr) {
    detail::require_dim(dim);
    const std::uint64_t before = rng.draw_count();
    const Eigen::Index n = dim - 1;
    Eigen::VectorXd cos2(n), sin2(n);
    {
        const double theta = std::asin(std::sqrt(rng.next_uniform()));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        cos2[n - 1] = c * c;
        sin2[n - 1] = s * s;
    }
    double denom = cos2[n - 1]; // prod_{k=j+1}^{d-1} cos^2(theta_k)
    for (Eigen::Index i = n - 2; i >= 0; --i) {
        const double a = rng.next_uniform() / denom;
        if (!(a <= 1.0)) { // negated so NaN (0/0) also fails
            if (failure)
                *failure = TrigExactFailure{i + 1, a};
            return std::nullopt;
        }
        const double theta = std::asin(std::sqrt(a));
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        cos2[i] = c * c;
        sin2[i] = s * s;
        denom *= cos2[i];
    }

    Eigen::VectorXd p(dim);
    p[dim - 1] = sin2[n - 1];
    double suffix = 1.0;
    for (Eigen::Index i = dim - 2; i >= 0; --i) {
        suffix *= cos2[i];
        p[i] = (i == 0 ? 1.0 : sin2[i - 1]) * suffix;
    }

    ProbabilityVector out;
    out.components = std::move(p);
    out.method = MethodId::TrigExact;
    out.draws_used = rng.draw_count() - before;
    return out;
}

// Fisher-Yates: walk i from the top down to the second position, swapping
// position i with a uniformly chosen j <= i. Consumes exactly d-1 uniforms
// and produces each of the d! permutations with equal probability.
template <UniformSource Rng>
Permutation random_permutation(Eigen::Index dim, Rng& rng) {
    detail::require_dim(dim);
    Permutation perm;
    perm.order = Eigen::VectorX<Eigen::Index>::LinSpaced(dim, 0, dim - 1);
    for (Eigen::Index i = dim - 1; i >= 1; --i) {
        const auto j = static_cast<Eigen::Index>(rng.next_uniform() * static_cast<double>(i + 1));
        std::swap(perm.order[i], perm.order[j]);
    }
    return perm;
}

// De-biasing shuffle: q_i = p_{k_i} under a fresh random permutation k.
// Preserves the component multiset exactly; adds d-1 uniforms to the cost.
template <UniformSource Rng>
ProbabilityVector shuffle(const ProbabilityVector& p, Rng& rng) {
    const Permutation perm = random_permutation(p.dim(), rng);
    ProbabilityVector q;
    q.components = p.components(perm.order);
    q.method = p.method;
    q.shuffled = true;
    q.draws_used = p.draws_used + static_cast<std::uint64_t>(p.dim() - 1);
    return q;
}

// Unbiased composite: biased sample followed by a shuffle, 2(d-1) uniforms
// total. Only the normalization and trig methods participate: iid needs no
// shuffle and the exact trig inversion is unfit for production use.
template <UniformSource Rng>
ProbabilityVector sample_unbiased(MethodId method, Eigen::Index dim, Rng& rng) {
    switch (method) {
    case MethodId::Normalization:
        return shuffle(sample_normalization_biased(dim, rng), rng);
    case MethodId::Trig:
        return shuffle(sample_trig_biased(dim, rng), rng);
    default:
        throw std::invalid_argument("sample_unbiased: method must be norm or trig");
    }
}

} // namespace probvec
