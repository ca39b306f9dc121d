#include "trapscat/oracle.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "trapscat/specfun.hpp"

namespace trapscat::validation
{
namespace
{
template<class F>
std::pair<double, double>
integrate(F const& f, double a, double b, QuadratureSpec const& spec)
{
    if (spec.rule == QuadratureRule::adaptive)
    {
        double err = 0;
        double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            f, a, b, 25, spec.tolerance, &err);
        return {value, err};
    }
    if (spec.panels == 0)
        throw DomainError("fixed quadrature needs at least one panel");
    auto panel_sum = [&](unsigned panels) {
        double h = (b - a) / panels;
        double sum = 0;
        for (unsigned p = 0; p < panels; ++p)
        {
            sum += boost::math::quadrature::gauss<double, 20>::integrate(
                f, a + p * h, a + (p + 1) * h);
        }
        return sum;
    };
    double fine = panel_sum(spec.panels);
    double coarse = panel_sum(std::max(1u, spec.panels / 2));
    return {fine, std::abs(fine - coarse)};
}

double cutoff(unsigned n, double length, QuadratureSpec const& spec)
{
    return (std::sqrt(2.0 * n + 1) + spec.cutoff_margin) * length;
}

}  // namespace

QuadratureResult density_fourier_transform(unsigned n,
                                           double length,
                                           double kappa,
                                           QuadratureSpec const& spec)
{
    if (n > 30)
        throw DomainError("quadrature oracle is limited to n <= 30");
    if (std::abs(kappa) * length > 40)
        throw DomainError("quadrature oracle is limited to k l <= 20");
    double edge = cutoff(n, length, spec);
    auto density = [&](double x) {
        double psi = oscillator_eigenfunction(n, x, length);
        return psi * psi;
    };
    auto [re, re_err] = integrate(
        [&](double x) { return std::cos(kappa * x) * density(x); }, -edge, edge, spec);
    auto [im, im_err] = integrate(
        [&](double x) { return -std::sin(kappa * x) * density(x); }, -edge, edge, spec);
    double error = std::hypot(re_err, im_err);
    if (!(error <= std::max(spec.tolerance, 1e-15)))
    {
        throw ConvergenceError("quadrature tolerance not reached: error estimate "
                               + std::to_string(error));
    }
    return {{re, im}, error};
}

double eigenfunction_norm(unsigned n, double length, QuadratureSpec const& spec)
{
    return density_fourier_transform(n, length, 0, spec).value.real();
}

QuadratureResult quadrature_amplitude(ScatteringContext const& ctx,
                                      TrapGeometry const& geom,
                                      OscillatorState const& state,
                                      double theta,
                                      double phi,
                                      QuadratureSpec const& spec)
{
    auto q = momentum_transfer(ctx.k(), theta, phi, geom);
    double const kappa[3] = {2 * q.qx, 2 * q.qy, -2 * q.qz_bar};

    complex_type product{1, 0};
    double relative_error = 0;
    for (Axis a : all_axes)
    {
        auto n = state.quantum_number(a);
        if (!n)
            continue;
        auto ft = density_fourier_transform(
            *n, geom.length(a), kappa[static_cast<int>(a)], spec);
        product *= ft.value;
        relative_error += ft.error;
    }
    complex_type value = -ctx.a_k() * product;
    return {value, std::abs(ctx.a_k()) * relative_error};
}

complex_type direct_thermal_sum(ScatteringContext const& ctx,
                                TrapGeometry const& geom,
                                EnsembleSpec const& spec,
                                double theta,
                                double phi,
                                SumCaps const& caps)
{
    unsigned const n_max = caps.max_quantum;
    std::uint64_t states = std::uint64_t(n_max + 1) * (n_max + 1) * (n_max + 1);
    if (states > caps.max_states)
        throw DomainError("direct thermal sum exceeds its state cap");

    double eps[3];
    for (Axis a : all_axes)
        eps[static_cast<int>(a)] = geom.level_spacing(a);
    double eps_min = std::min({eps[0], eps[1], eps[2]});
    if (occupation((n_max + 1) * eps_min, spec) > caps.tail_tolerance * spec.particles)
        throw DomainError("occupation above the direct-sum cap is not negligible");

    auto q = momentum_transfer(ctx.k(), theta, phi, geom);
    std::vector<double> lag[3];
    for (Axis a : all_axes)
    {
        auto& values = lag[static_cast<int>(a)];
        double x = 2 * q.scaled_square(a);
        values.resize(n_max + 1);
        for (unsigned n = 0; n <= n_max; ++n)
            values[n] = laguerre(n, x);
    }

    double sum = 0;
    for (unsigned nx = 0; nx <= n_max; ++nx)
    {
        for (unsigned ny = 0; ny <= n_max; ++ny)
        {
            for (unsigned nz = 0; nz <= n_max; ++nz)
            {
                double e = nx * eps[0] + ny * eps[1] + nz * eps[2];
                double occ = (nx + ny + nz == 0) ? spec.ground_occupation()
                                                 : occupation(e, spec);
                sum += occ * lag[0][nx] * lag[1][ny] * lag[2][nz];
            }
        }
    }
    return -ctx.a_k() * std::exp(-q.quadratic_form()) * sum;
}

std::vector<double> laguerre_roots(unsigned n)
{
    std::vector<double> roots;
    if (n == 0)
        return roots;
    double upper = 4.0 * n + 2;
    unsigned const scan = 2000 * n;
    double step = upper / scan;
    double a = 0;
    double fa = laguerre(n, a);
    for (unsigned i = 1; i <= scan; ++i)
    {
        double b = i * step;
        double fb = laguerre(n, b);
        if (fb == 0)
        {
            roots.push_back(b);
        }
        else if (fa * fb < 0)
        {
            boost::math::tools::eps_tolerance<double> tol(52);
            std::uintmax_t iters = 200;
            auto [lo, hi] = boost::math::tools::toms748_solve(
                [n](double x) { return laguerre(n, x); }, a, b, fa, fb, tol, iters);
            roots.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return roots;
}

}  // namespace trapscat::validation
