#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace wavedecay {

/// Weight bracket <x> = 1 + |x| used by every decay weight.
template <typename Scalar>
constexpr Scalar bracket(Scalar x)
{
    using std::abs;
    return Scalar(1) + abs(x);
}

/// Source-bound parameters A / (<x>^lambda <t+|x|>^p <t-|x|>^q).
/// lambda == 0 is the form without spatial decay.
struct DecayProfile {
    double amplitude_A = 1.0;
    double p = 0.0;
    double q = 0.0;
    double lambda = 0.0;

    DecayProfile() = default;
    DecayProfile(double amplitude, double p_exp, double q_exp, double lambda_exp = 0.0);
};

template <typename Scalar>
class BasicSpacetimePoint {
public:
    BasicSpacetimePoint(Scalar t, Scalar r) : t_(t), r_(r)
    {
        using std::isfinite;
        if (!isfinite(t) || !isfinite(r))
            throw std::invalid_argument("spacetime point must be finite");
        if (t < Scalar(0))
            throw std::invalid_argument("spacetime point requires t >= 0");
        if (r < Scalar(0))
            throw std::invalid_argument("spacetime point requires r >= 0");
    }

    Scalar t() const { return t_; }
    Scalar r() const { return r_; }

private:
    Scalar t_;
    Scalar r_;
};

/// Null coordinates u = t + r, v = t - r, valid on u >= 0, |v| <= u.
template <typename Scalar>
class BasicNullPoint {
public:
    BasicNullPoint(Scalar u, Scalar v) : u_(u), v_(v)
    {
        using std::abs;
        using std::isfinite;
        if (!isfinite(u) || !isfinite(v))
            throw std::invalid_argument("null point must be finite");
        if (u < Scalar(0))
            throw std::invalid_argument("null point requires u >= 0");
        if (abs(v) > u)
            throw std::invalid_argument("null point requires |v| <= u");
    }

    Scalar u() const { return u_; }
    Scalar v() const { return v_; }

private:
    Scalar u_;
    Scalar v_;
};

/// Exponent pair of the weight <t+r>^a <t-r>^b.
template <typename Scalar>
struct BasicWeightExponents {
    Scalar a = Scalar(0);
    Scalar b = Scalar(0);
};

using SpacetimePoint = BasicSpacetimePoint<double>;
using NullPoint = BasicNullPoint<double>;
using WeightExponents = BasicWeightExponents<double>;

template <typename Scalar>
BasicNullPoint<Scalar> to_null(const BasicSpacetimePoint<Scalar>& pt)
{
    return {pt.t() + pt.r(), pt.t() - pt.r()};
}

template <typename Scalar>
BasicSpacetimePoint<Scalar> from_null(const BasicNullPoint<Scalar>& np)
{
    return {(np.u() + np.v()) / Scalar(2), (np.u() - np.v()) / Scalar(2)};
}

/// |value| * <t+r>^a * <t-r>^b.
template <typename Scalar>
Scalar weighted_amplitude(Scalar value, Scalar t, Scalar r, const BasicWeightExponents<Scalar>& w)
{
    using std::abs;
    using std::pow;
    if (value == Scalar(0))
        return Scalar(0);
    return abs(value) * pow(bracket(t + r), w.a) * pow(bracket(t - r), w.b);
}

template <typename Scalar>
Scalar weighted_amplitude(Scalar value, const BasicSpacetimePoint<Scalar>& pt,
                          const BasicWeightExponents<Scalar>& w)
{
    return weighted_amplitude(value, pt.t(), pt.r(), w);
}

std::string describe(const DecayProfile& profile);

} // namespace wavedecay
