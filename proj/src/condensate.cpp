#include "trapscat/condensate.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "trapscat/thermal.hpp"

namespace trapscat
{
namespace
{
using boost::math::quadrature::gauss_kronrod;

constexpr double interaction_coefficient = 4.932;

double coherent_scale(ScatteringContext const& ctx, double particles)
{
    return std::norm(ctx.a_k() * particles);
}

double forward_shape(ScatteringContext const& ctx,
                     TrapGeometry const& geom,
                     double theta,
                     double phi)
{
    return std::exp(-2 * momentum_transfer(ctx.k(), theta, phi, geom).quadratic_form());
}

}  // namespace

double critical_temperature(double particles)
{
    if (!(particles > 0))
        throw DomainError("particle number must be positive");
    return std::cbrt(particles / zeta3);
}

double bec_ground_profile(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          double particles,
                          double theta,
                          double phi)
{
    return coherent_scale(ctx, particles) * forward_shape(ctx, geom, theta, phi);
}

CrossSection integrate_cross_section(std::function<double(double, double)> const& profile,
                                     double tolerance)
{
    constexpr unsigned max_depth = 20;
    double inner_error_sum = 0;
    auto polar = [&](double theta) {
        double err = 0;
        double ring = gauss_kronrod<double, 31>::integrate(
            [&](double phi) { return profile(theta, phi); },
            0.0,
            2 * std::numbers::pi,
            max_depth,
            tolerance,
            &err);
        inner_error_sum = std::max(inner_error_sum, err);
        return ring * std::sin(theta);
    };
    double outer_error = 0;
    double value = gauss_kronrod<double, 31>::integrate(
        polar, 0.0, std::numbers::pi, max_depth, tolerance, &outer_error);
    double error = outer_error + 2 * std::numbers::pi * inner_error_sum;
    if (!std::isfinite(value) || error > 1e3 * tolerance * std::abs(value))
        throw ConvergenceError("cross-section quadrature did not converge");
    return {value, error};
}

CrossSection total_cross_section(ScatteringContext const& ctx,
                                 TrapGeometry const& geom,
                                 double particles)
{
    return integrate_cross_section([&](double theta, double phi) {
        return bec_ground_profile(ctx, geom, particles, theta, phi);
    });
}

double low_energy_cross_section(ScatteringContext const& ctx, double particles)
{
    double amplitude = particles * ctx.reduced_mass_factor();
    return 4 * std::numbers::pi * amplitude * amplitude;
}

Expansion expansion_S(double t, double fugacity, double q2l2, PolylogKind kind)
{
    if (!(t > 0) || !(fugacity >= 0))
        throw DomainError("expansion requires t > 0 and z >= 0");
    double li3 = polylog(3, fugacity, kind);
    double li4 = polylog(4, fugacity, kind);
    double li5 = polylog(5, fugacity, kind);
    double t3 = t * t * t;
    double t4 = t3 * t;
    double value = t3 * li3 - 6 * q2l2 * t4 * li4
                   + q2l2 * q2l2 * (12 * t4 * t * li5 + 3 * t4 * li4);
    return {value, q2l2 <= 0.1};
}

double condensate_fraction(double t, double t_c, double a_tilde_over_l, bool corrections)
{
    if (!(t >= 0) || !(t_c > 0) || !(a_tilde_over_l >= 0))
        throw DomainError("condensate fraction needs t >= 0, t_c > 0, a >= 0");
    double tc3 = t_c * t_c * t_c;
    double fraction = 1 - t * t * t / tc3;
    if (corrections)
    {
        fraction -= 3 * t * t * zeta2 / (2 * tc3 * zeta3);
        fraction -= interaction_coefficient * std::pow(t, 3.5) * a_tilde_over_l
                    / (tc3 * zeta3);
    }
    return std::max(0.0, fraction);
}

double variational_width(double condensate, double a_tilde_over_l)
{
    if (!(condensate >= 0) || !(a_tilde_over_l >= 0))
        throw DomainError("width scaling needs N0 >= 0 and a >= 0");
    double c = std::sqrt(2 / std::numbers::pi) * condensate * a_tilde_over_l;
    if (c == 0)
        return 1;

    // g(u) = u⁵ − u − c is negative at u = 1 and positive at the upper end
    auto g = [c](double u) { return u * u * u * u * u - u - c; };
    double lo = 1;
    double hi = std::max(2.0, std::pow(c + 1, 0.2) + 1);
    double u = std::pow(c + 1, 0.2);
    for (int iter = 0; iter < 200; ++iter)
    {
        double gu = g(u);
        if (std::abs(gu) <= 1e-12 * (c + 1))
            return u;
        (gu < 0 ? lo : hi) = u;
        double step = gu / (5 * u * u * u * u - 1);
        double next = u - step;
        u = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    throw ConvergenceError("variational width did not converge");
}

CondensateState prepare_condensate(TrapGeometry const& geom,
                                   double particles,
                                   double t,
                                   double a_tilde_over_l,
                                   CondensateOptions const& options)
{
    CondensateState state;
    state.particles = particles;
    state.t = t;
    state.t_c = critical_temperature(particles);
    if (!(t >= 0) || t >= state.t_c)
        throw DomainError("below-T_c composite requires 0 <= t < t_c");

    state.condensate = particles
                       * condensate_fraction(t, state.t_c, a_tilde_over_l, options.corrections);
    if (options.width_scale)
    {
        if (!(*options.width_scale >= 1))
            throw DomainError("width scale must be at least 1");
        state.width_scale = *options.width_scale;
    }
    else
    {
        state.width_scale = variational_width(state.condensate, a_tilde_over_l);
    }
    state.thermal_atoms = particles - state.condensate;
    if (t > 0)
        state.cloud_norm = excited_bose_number(0, t, geom);
    return state;
}

complex_type below_tc_amplitude(ScatteringContext const& ctx,
                                TrapGeometry const& geom,
                                CondensateState const& state,
                                double theta,
                                double phi)
{
    auto q_wide = momentum_transfer(ctx.k(), theta, phi, geom.scaled(state.width_scale));
    double total = state.condensate * std::exp(-q_wide.quadratic_form());
    if (state.thermal_atoms > 0 && state.cloud_norm > 0)
    {
        auto q = momentum_transfer(ctx.k(), theta, phi, geom);
        total += state.thermal_atoms * excited_bose_form_sum(0, state.t, geom, q)
                 / state.cloud_norm;
    }
    return -ctx.a_k() * total;
}

double bec_below_tc_profile(ScatteringContext const& ctx,
                            TrapGeometry const& geom,
                            double particles,
                            double t,
                            double a_tilde_over_l,
                            double theta,
                            double phi,
                            CondensateOptions const& options)
{
    auto state = prepare_condensate(geom, particles, t, a_tilde_over_l, options);
    return std::norm(below_tc_amplitude(ctx, geom, state, theta, phi));
}

double array_factor(unsigned wells, double spacing, double k, double theta)
{
    if (wells == 0)
        throw DomainError("array needs at least one well");
    if (!(spacing >= 0))
        throw DomainError("well spacing must be non-negative");
    double n = wells;
    double x = 0.5 * k * spacing * std::sin(theta);
    double s = std::sin(x);
    if (std::abs(s) > 1e-3)
    {
        double ratio = std::sin(n * x) / s;
        return ratio * ratio;
    }
    // |Σ_w e^{2iwx}|² = N′ + 2 Σ_m (N′ − m) cos 2mx
    double sum = n;
    for (unsigned m = 1; m < wells; ++m)
        sum += 2 * (n - m) * std::cos(2 * m * x);
    return sum;
}

double double_well_profile(ScatteringContext const& ctx,
                           TrapGeometry const& geom,
                           double particles,
                           double spacing,
                           double theta,
                           double phi)
{
    double x = 0.5 * ctx.k() * spacing * std::sin(theta);
    double two_cos = 2 * std::cos(x);
    return bec_ground_profile(ctx, geom, particles, theta, phi) * two_cos * two_cos;
}

double lattice_profile(ScatteringContext const& ctx,
                       TrapGeometry const& geom,
                       double particles,
                       ArrayGeometry const& array,
                       double theta,
                       double phi)
{
    return bec_ground_profile(ctx, geom, particles, theta, phi)
           * array_factor(array.wells, array.spacing, ctx.k(), theta);
}

double array_profile_finite_T(ScatteringContext const& ctx,
                              TrapGeometry const& geom,
                              CondensateState const& state,
                              ArrayGeometry const& array,
                              double theta,
                              double phi,
                              CloudCoherence coherence)
{
    double af = array_factor(array.wells, array.spacing, ctx.k(), theta);
    if (coherence == CloudCoherence::coherent)
        return af * std::norm(below_tc_amplitude(ctx, geom, state, theta, phi));

    auto q_wide = momentum_transfer(ctx.k(), theta, phi, geom.scaled(state.width_scale));
    double a2 = std::norm(ctx.a_k());
    double condensate = state.condensate * std::exp(-q_wide.quadratic_form());
    double cloud = 0;
    if (state.thermal_atoms > 0 && state.cloud_norm > 0)
    {
        auto q = momentum_transfer(ctx.k(), theta, phi, geom);
        cloud = state.thermal_atoms * excited_bose_form_sum(0, state.t, geom, q)
                / state.cloud_norm;
    }
    return af * a2 * condensate * condensate + array.wells * a2 * cloud * cloud;
}

}  // namespace trapscat
