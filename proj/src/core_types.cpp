#include "wavedecay/core_types.hpp"

#include <sstream>

namespace wavedecay {

DecayProfile::DecayProfile(double amplitude, double p_exp, double q_exp, double lambda_exp)
    : amplitude_A(amplitude), p(p_exp), q(q_exp), lambda(lambda_exp)
{
    if (!std::isfinite(amplitude) || !std::isfinite(p_exp) || !std::isfinite(q_exp) ||
        !std::isfinite(lambda_exp))
        throw std::invalid_argument("decay profile values must be finite");
    if (!(amplitude > 0.0))
        throw std::invalid_argument("decay profile requires A > 0");
    if (lambda_exp < 0.0)
        throw std::invalid_argument("decay profile requires lambda >= 0");
}

std::string describe(const DecayProfile& profile)
{
    std::ostringstream os;
    os << "A=" << profile.amplitude_A << " p=" << profile.p << " q=" << profile.q;
    if (profile.lambda != 0.0)
        os << " lambda=" << profile.lambda;
    return os.str();
}

} // namespace wavedecay
