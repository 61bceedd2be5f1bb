#include "probvec/quantum.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace probvec {

PureState pure_state_from(const Eigen::Ref<const Eigen::VectorXd>& probabilities,
                          const Eigen::Ref<const Eigen::VectorXd>& phases) {
    if (probabilities.size() != phases.size())
        throw std::invalid_argument("pure_state_from: probabilities/phases length mismatch");
    if (probabilities.size() < 2)
        throw std::invalid_argument("pure_state_from: dimension must be at least 2");
    if ((probabilities.array() < 0.0).any())
        throw std::invalid_argument("pure_state_from: probabilities must be non-negative");

    PureState psi;
    psi.amplitudes.resize(probabilities.size());
    for (Eigen::Index j = 0; j < probabilities.size(); ++j)
        psi.amplitudes[j] = std::polar(std::sqrt(probabilities[j]), phases[j]);
    return psi;
}

double state_norm(const PureState& psi) {
    return psi.amplitudes.norm();
}

} // namespace probvec
