#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "trapscat/condensate.hpp"
#include "trapscat/oracle.hpp"
#include "trapscat/single.hpp"
#include "trapscat/specfun.hpp"
#include "trapscat/thermal.hpp"

using namespace trapscat;
using doctest::Approx;

namespace
{
constexpr double pi = std::numbers::pi;

double rel(complex_type a, complex_type b)
{
    return std::abs(a - b) / std::abs(b);
}

EnsembleSpec bose(double t, double z)
{
    EnsembleSpec s;
    s.statistics = Statistics::bose;
    s.t = t;
    s.log_fugacity = std::log(z);
    return s;
}

}  // namespace

TEST_CASE("occupation numbers")
{
    EnsembleSpec b = bose(3, 0.5);
    CHECK(occupation(0, b) == Approx(1).epsilon(1e-15));
    CHECK(occupation(2, b) == Approx(1 / (2 * std::exp(2.0 / 3) - 1)).epsilon(1e-14));

    auto cold = fermi_fill(10, TrapGeometry::isotropic(1));
    EnsembleSpec f = solve_fugacity(Statistics::fermi, 10, 0.01, TrapGeometry::isotropic(1));
    CHECK(occupation(1, f) == Approx(1).epsilon(1e-12));
    CHECK(occupation(3, f) < 1e-12);

    EnsembleSpec z = b;
    z.log_fugacity = 0;
    CHECK_THROWS_AS(occupation(0, z), DomainError);
}

TEST_CASE("boltzmann weight concentrates in the ground state as t -> 0")
{
    auto geom = TrapGeometry::isotropic(1);
    auto spec = solve_fugacity(Statistics::boltzmann, 1, 0.02, geom);
    CHECK(occupation(0, spec) == Approx(1).epsilon(1e-12));
    CHECK(spec.partition_function == Approx(1).epsilon(1e-12));
    // Z = Π_α 1/(1 − e^{−ε_α/t})
    auto warm = solve_fugacity(Statistics::boltzmann, 1, 2, geom);
    CHECK(warm.partition_function == Approx(std::pow(1 / (1 - std::exp(-0.5)), 3)).epsilon(1e-14));
}

TEST_CASE("fermi shell filling")
{
    auto geom = TrapGeometry::isotropic(1);
    auto levels = fermi_fill(10, geom);
    REQUIRE(levels.size() == 3);
    CHECK(levels.back().energy == 2);
    CHECK(levels.back().filled_fraction == 1);

    for (std::size_t n : {1ul, 4ul, 7ul, 35ul, 10000ul})
    {
        double total = 0;
        for (auto const& lv : fermi_fill(n, geom))
            total += lv.degeneracy * lv.filled_fraction;
        CHECK(total == Approx(double(n)).epsilon(1e-15));
    }
    auto big = fermi_fill(10000, geom);
    CHECK(big.back().energy == 38);
    CHECK_THROWS_AS(fermi_fill(0, geom), DomainError);
}

TEST_CASE("bulk condensation point")
{
    CHECK(critical_temperature(1e4) == Approx(20.26).epsilon(1e-3));
    auto geom = TrapGeometry::isotropic(1);
    auto above = solve_fugacity(Statistics::bose, 1e4, 25, geom, FugacityRoute::thermodynamic_limit);
    CHECK(std::pow(25, 3) * polylog(3, above.fugacity(), PolylogKind::bose)
          == Approx(1e4).epsilon(1e-10));
    auto below = solve_fugacity(Statistics::bose, 1e4, 10, geom, FugacityRoute::thermodynamic_limit);
    CHECK(below.log_fugacity == 0);
    CHECK(below.condensate == Approx(1e4 - 1000 * zeta3).epsilon(1e-12));
}

TEST_CASE("number sum rule after solving")
{
    for (auto stats : {Statistics::bose, Statistics::fermi, Statistics::boltzmann})
    {
        for (double t : {0.1, 0.7, 5.0, 30.0, 100.0})
        {
            for (double n : {1.0, 40.0, 1e4})
            {
                auto geom = TrapGeometry::isotropic(1);
                auto spec = solve_fugacity(stats, n, t, geom);
                CHECK(particle_number(spec, geom) == Approx(n).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("number sum rule for an anisotropic trap")
{
    TrapGeometry geom(1, 1.5, 0.8);
    for (auto stats : {Statistics::bose, Statistics::fermi})
    {
        for (double t : {0.5, 4.0})
        {
            auto spec = solve_fugacity(stats, 200, t, geom);
            CHECK(particle_number(spec, geom) == Approx(200).epsilon(1e-9));
        }
    }
}

TEST_CASE("direct sum matches the literal triple loop")
{
    auto geom = TrapGeometry::isotropic(1);
    ScatteringContext ctx(1.5, 0.1);
    validation::SumCaps caps;
    caps.max_quantum = 100;
    for (auto stats : {Statistics::bose, Statistics::fermi, Statistics::boltzmann})
    {
        for (double t : {0.3, 1.0, 2.0})
        {
            auto spec = solve_fugacity(stats, 20, t, geom);
            auto literal = validation::direct_thermal_sum(ctx, geom, spec, 1.2, 0.3, caps);
            auto shells = thermal_amplitude_direct(ctx, geom, spec, 1.2, 0.3);
            CHECK(rel(shells, literal) < 1e-10);
        }
    }
}

TEST_CASE("generating function reduction matches brute force")
{
    // one axis: Σ_n s^n e^{−Q} L_n(2Q) = e^{−Q coth(ε/2t)} / (1 − s)
    for (double t : {0.5, 3.0})
    {
        for (double Q : {0.0, 0.3, 2.0})
        {
            double s = std::exp(-1 / t);
            long double direct = 0;
            for (unsigned n = 0; n < 2000; ++n)
                direct += std::pow(static_cast<long double>(s), n) * laguerre(n, 2 * Q);
            double closed = std::exp(-Q / std::tanh(0.5 / t)) / (1 - s);
            CHECK(static_cast<double>(direct) * std::exp(-Q) == Approx(closed).epsilon(1e-11));
        }
    }
}

TEST_CASE("fast path equals direct path on random ensembles")
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(0, 1);
    auto geom = TrapGeometry::isotropic(1);
    int fallbacks = 0;
    for (int i = 0; i < 60; ++i)
    {
        auto stats = static_cast<Statistics>(i % 3);
        double t = 0.2 + 30 * u(rng);
        double n = std::round(1 + 3000 * u(rng));
        auto spec = solve_fugacity(stats, n, t, geom);
        double target = 6 * u(rng) * std::tanh(0.5 / t);
        double theta = 0.2 + (pi - 0.2) * u(rng);
        ScatteringContext ctx(std::sqrt(target) / std::sin(theta / 2), 0.1);
        auto fast = thermal_amplitude_fast(ctx, geom, spec, theta, 2 * pi * u(rng));
        auto direct = thermal_amplitude_direct(ctx, geom, spec, theta, 0);
        fallbacks += fast.fell_back;
        CHECK(rel(fast.value, direct) < 1e-9);
    }
    CHECK(fallbacks < 60);
}

TEST_CASE("single boltzmann particle at t = 13.2")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    auto spec = solve_fugacity(Statistics::boltzmann, 1, 13.2, geom);
    // beyond Q coth(1/2t) ≈ 6 the direct sum is lost to cancellation
    for (double theta : {0.1, 0.2, 0.3, 0.45})
    {
        auto fast = thermal_amplitude_fast(ctx, geom, spec, theta, 0);
        CHECK_FALSE(fast.fell_back);
        CHECK(rel(fast.value, thermal_amplitude_direct(ctx, geom, spec, theta, 0)) < 1e-9);
    }
}

TEST_CASE("forward amplitude counts the particles")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    for (auto stats : {Statistics::bose, Statistics::fermi, Statistics::boltzmann})
    {
        for (double t : {0.5, 8.0, 40.0})
        {
            auto spec = solve_fugacity(stats, 500, t, geom);
            auto expected = -500.0 * ctx.a_k();
            CHECK(rel(thermal_amplitude_fast(ctx, geom, spec, 0, 0).value, expected) < 1e-12);
            CHECK(rel(thermal_amplitude_direct(ctx, geom, spec, 0, 1.0), expected) < 1e-12);
        }
    }
}

TEST_CASE("cold bose gas collapses onto the ground state")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    auto spec = solve_fugacity(Statistics::bose, 1e4, 0.02, geom);
    for (double theta : {0.3, 1.5, 3.0})
    {
        auto q = momentum_transfer(2, theta, 0, geom);
        auto expected = -1e4 * ctx.a_k() * std::exp(-q.quadratic_form());
        CHECK(rel(thermal_amplitude_fast(ctx, geom, spec, theta, 0).value, expected) < 1e-12);
        CHECK(rel(thermal_amplitude_direct(ctx, geom, spec, theta, 0), expected) < 1e-12);
    }
}

TEST_CASE("zero-temperature fermi profile")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    for (double theta : {0.2, 1.0, 2.7})
    {
        CHECK(fermi_ground_profile(ctx, geom, 1, theta, 0, FermiProfileMode::exact)
              == Approx(cross_section(amplitude_3d(ctx, geom, OscillatorState::three_d(0, 0, 0), theta, 0)))
                     .epsilon(1e-14));
    }
    double forward = std::norm(1e4 * ctx.a_k());
    CHECK(fermi_ground_profile(ctx, geom, 10000, 0, 0, FermiProfileMode::exact)
          == Approx(forward).epsilon(1e-12));
    CHECK(fermi_ground_profile(ctx, geom, 10000, 0, 0, FermiProfileMode::approx)
          == Approx(forward).epsilon(1e-12));
    CHECK_THROWS_AS(fermi_ground_profile(ctx, geom, 0, 1, 0, FermiProfileMode::exact), DomainError);
    CHECK_THROWS_AS(fermi_ground_profile(ctx, TrapGeometry(1, 2, 1), 10, 1, 0, FermiProfileMode::approx),
                    DomainError);
}

TEST_CASE("four fermions fill the s and p shells")
{
    ScatteringContext ctx(1.3, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    auto spec = solve_fugacity(Statistics::fermi, 4, 0.02, geom);
    for (double theta : {0.3, 1.1, 2.4})
    {
        auto q = momentum_transfer(1.3, theta, 0.5, geom);
        // one s state plus the three p states, by hand
        double by_hand = (1 + laguerre(1, 2 * q.scaled_square(Axis::x))
                          + laguerre(1, 2 * q.scaled_square(Axis::y))
                          + laguerre(1, 2 * q.scaled_square(Axis::z)))
                         * std::exp(-q.quadratic_form());
        CHECK(fermi_ground_profile(ctx, geom, 4, theta, 0.5, FermiProfileMode::exact)
              == Approx(std::norm(ctx.a_k() * by_hand)).epsilon(1e-12));
        CHECK(std::norm(validation::direct_thermal_sum(ctx, geom, spec, theta, 0.5))
              == Approx(std::norm(ctx.a_k() * by_hand)).epsilon(1e-9));
    }
}

TEST_CASE("bose ground state scatters at least as coherently as the fermi sea")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    for (std::size_t n : {4ul, 100ul, 10000ul})
    {
        for (int i = 0; i <= 60; ++i)
        {
            double theta = pi * i / 60;
            double b = bec_ground_profile(ctx, geom, double(n), theta, 0);
            double f = fermi_ground_profile(ctx, geom, n, theta, 0, FermiProfileMode::exact);
            CHECK(b >= f * (1 - 1e-12));
        }
    }
}

TEST_CASE("highly excited states narrow the forward lobe")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    auto width = [&](unsigned n) {
        return half_width_at_half_maximum(
            [&](double th) { return classical_limit_profile(ctx, geom, n, th, 0); });
    };
    double w0 = half_width_at_half_maximum([&](double th) {
        return cross_section(amplitude_3d(ctx, geom, OscillatorState::three_d(0, 0, 0), th, 0));
    });
    double previous = w0;
    for (unsigned n : {1u, 5u, 20u, 80u})
    {
        double w = width(n);
        CHECK(w < previous);
        previous = w;
        CHECK(classical_limit_profile(ctx, geom, n, 0, 0) == Approx(std::norm(ctx.a_k())));
    }
    CHECK(width(20) < w0 / 3);
}

TEST_CASE("hot boltzmann particle only scatters forward")
{
    ScatteringContext ctx(2, 0.1);
    auto geom = TrapGeometry::isotropic(1);
    double previous = 1e300;
    for (double t : {1.0, 10.0, 100.0, 1000.0})
    {
        auto spec = solve_fugacity(Statistics::boltzmann, 1, t, geom);
        double side = std::norm(thermal_amplitude_fast(ctx, geom, spec, 0.5, 0).value);
        CHECK(side < previous);
        previous = side;
        CHECK(std::norm(thermal_amplitude_fast(ctx, geom, spec, 0, 0).value)
              == Approx(std::norm(ctx.a_k())).epsilon(1e-12));
    }
    CHECK(previous < 1e-50);
}

TEST_CASE("direct sum refuses hopeless cutoffs")
{
    ScatteringContext ctx(1, 0.1);
    TrapGeometry geom(1, 1.2, 0.9);
    auto spec = solve_fugacity(Statistics::boltzmann, 1, 400, geom);
    CutoffPolicy tight;
    tight.max_states = 1000;
    CHECK_THROWS_AS(thermal_amplitude_direct(ctx, geom, spec, 1, 0, tight), ConvergenceError);
}

TEST_CASE("half width of a gaussian")
{
    // e^{−θ²} falls to one half at sqrt(ln 2)
    double w = half_width_at_half_maximum([](double th) { return std::exp(-th * th); });
    CHECK(w == Approx(std::sqrt(std::log(2.0))).epsilon(1e-9));
}
