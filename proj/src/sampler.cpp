#include "probvec/sampler.hpp"

#include <string>

namespace probvec {

std::string_view to_string(MethodId method) {
    switch (method) {
    case MethodId::Iid:
        return "iid";
    case MethodId::Normalization:
        return "norm";
    case MethodId::Trig:
        return "trig";
    case MethodId::TrigExact:
        return "trig-exact";
    }
    throw std::invalid_argument("to_string: unknown MethodId");
}

MethodId parse_method(std::string_view name) {
    if (name == "iid")
        return MethodId::Iid;
    if (name == "norm")
        return MethodId::Normalization;
    if (name == "trig")
        return MethodId::Trig;
    if (name == "trig-exact")
        return MethodId::TrigExact;
    throw std::invalid_argument("unknown method '" + std::string(name) +
                                "' (expected iid, norm, trig, or trig-exact)");
}

bool on_simplex(const Eigen::Ref<const Eigen::VectorXd>& components, double tol) {
    if (components.size() < 2)
        return false;
    if ((components.array() < 0.0).any())
        return false;
    return std::abs(components.sum() - 1.0) <= tol;
}

} // namespace probvec
