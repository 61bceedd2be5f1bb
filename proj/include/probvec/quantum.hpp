// Pseudo-random pure quantum states built from an unbiased probability
// vector and independent uniform phases: c_j = sqrt(q_j) * exp(i*phi_j).

#pragma once

#include <Eigen/Dense>

#include <numbers>

#include "probvec/rng.hpp"
#include "probvec/sampler.hpp"

namespace probvec {

// Unit-norm vector in C^d. |c_j|^2 recovers the underlying probability
// vector; the global phase is left free.
struct PureState {
    Eigen::VectorXcd amplitudes;

    Eigen::Index dim() const { return amplitudes.size(); }
};

// Assembles amplitudes sqrt(p_j) * exp(i*phi_j) from given probabilities and
// phases (radians). Requires p_j >= 0 and matching lengths.
PureState pure_state_from(const Eigen::Ref<const Eigen::VectorXd>& probabilities,
                          const Eigen::Ref<const Eigen::VectorXd>& phases);

// sqrt(sum_j |c_j|^2); 1 within 1e-12 for any state built from a
// probability vector.
double state_norm(const PureState& psi);

// Unbiased pseudo-random state vector: q from sample_unbiased(method), then
// phases phi_j = 2*pi*u_j. Consumes 2(d-1) + d uniforms; the probability
// draws come first, so the q underlying a state is bit-identical to a
// sample_unbiased call on the same stream prefix.
template <UniformSource Rng>
PureState random_pure_state(Eigen::Index dim, MethodId method, Rng& rng) {
    const ProbabilityVector q = sample_unbiased(method, dim, rng);
    Eigen::VectorXd phases(dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        phases[j] = 2.0 * std::numbers::pi * rng.next_uniform();
    return pure_state_from(q.components, phases);
}

} // namespace probvec
