#include "trapscat/single.hpp"

#include <cmath>

#include "trapscat/specfun.hpp"

namespace trapscat
{
OscillatorState OscillatorState::one_d(unsigned nx)
{
    OscillatorState s;
    s.numbers_ = {nx, std::nullopt, std::nullopt};
    return s;
}

OscillatorState OscillatorState::two_d(unsigned nx, unsigned ny)
{
    OscillatorState s;
    s.numbers_ = {nx, ny, std::nullopt};
    return s;
}

OscillatorState OscillatorState::three_d(unsigned nx, unsigned ny, unsigned nz)
{
    OscillatorState s;
    s.numbers_ = {nx, ny, nz};
    return s;
}

int OscillatorState::dimensionality() const
{
    int d = 0;
    for (auto const& n : numbers_)
        d += n.has_value();
    return d;
}

double OscillatorState::energy(TrapGeometry const& geom) const
{
    double e = 0;
    for (Axis a : all_axes)
    {
        if (auto n = this->quantum_number(a))
            e += (*n + 0.5) * geom.level_spacing(a);
    }
    return e;
}

//---------------------------------------------------------------------------//
double form_factor(OscillatorState const& state, MomentumTransfer const& q)
{
    double exponent = 0;
    double product = 1;
    for (Axis a : all_axes)
    {
        auto n = state.quantum_number(a);
        if (!n)
            continue;
        double const Q = q.scaled_square(a);
        exponent += Q;
        product *= laguerre(*n, 2 * Q);
    }
    return std::exp(-exponent) * product;
}

complex_type amplitude_1d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          unsigned nx,
                          double theta,
                          double phi)
{
    return amplitude(ctx, geom, OscillatorState::one_d(nx), theta, phi);
}

complex_type amplitude_2d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          unsigned nx,
                          unsigned ny,
                          double theta,
                          double phi)
{
    return amplitude(ctx, geom, OscillatorState::two_d(nx, ny), theta, phi);
}

complex_type amplitude_3d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          OscillatorState const& state,
                          double theta,
                          double phi)
{
    if (state.dimensionality() != 3)
        throw DomainError("amplitude_3d needs a three-dimensional state");
    return amplitude(ctx, geom, state, theta, phi);
}

complex_type amplitude(ScatteringContext const& ctx,
                       TrapGeometry const& geom,
                       OscillatorState const& state,
                       double theta,
                       double phi)
{
    auto const q = momentum_transfer(ctx.k(), theta, phi, geom);
    return -ctx.a_k() * form_factor(state, q);
}

complex_type amplitude_fixed_configuration(ScatteringContext const& ctx,
                                           TrapGeometry const& geom,
                                           std::span<OscillatorState const> states,
                                           double theta,
                                           double phi)
{
    if (states.empty())
        throw DomainError("fixed configuration needs at least one scatterer");
    auto const q = momentum_transfer(ctx.k(), theta, phi, geom);
    double sum = 0;
    for (auto const& s : states)
    {
        if (s.dimensionality() != states.front().dimensionality())
            throw DomainError("scatterers must share one trap dimensionality");
        sum += form_factor(s, q);
    }
    return -ctx.a_k() * sum;
}

int count_sign_changes(std::span<double const> values)
{
    int changes = 0;
    int last_sign = 0;
    for (double v : values)
    {
        int const sign = (v > 0) - (v < 0);
        if (sign == 0)
            continue;
        if (last_sign != 0 && sign != last_sign)
            ++changes;
        last_sign = sign;
    }
    return changes;
}

}  // namespace trapscat
