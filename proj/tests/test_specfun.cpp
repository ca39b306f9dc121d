#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trapscat/specfun.hpp"

using namespace trapscat;
using doctest::Approx;

namespace
{
// Σ_j (−1)^j C(n,j) x^j / j! in extended precision
double laguerre_by_coefficients(unsigned n, double x)
{
    long double sum = 0;
    long double binom = 1;
    long double power = 1;
    long double fact = 1;
    for (unsigned j = 0; j <= n; ++j)
    {
        if (j > 0)
        {
            binom = binom * (n - j + 1) / j;
            power *= x;
            fact *= j;
        }
        sum += ((j % 2) ? -1 : 1) * binom * power / fact;
    }
    return static_cast<double>(sum);
}

// Σ_{p ≤ P} p^{−s} plus the integral tail and endpoint correction
double zeta_by_series(int s)
{
    long const P = 200000;
    long double sum = 0;
    for (long p = P; p >= 1; --p)
        sum += std::pow(static_cast<long double>(p), -s);
    long double tail = std::pow(static_cast<long double>(P), 1 - s) / (s - 1)
                       - 0.5L * std::pow(static_cast<long double>(P), -s)
                       + s / 12.0L * std::pow(static_cast<long double>(P), -s - 1);
    return static_cast<double>(sum + tail);
}

double bose_series(int j, double z, long terms)
{
    long double sum = 0;
    long double zp = 1;
    for (long p = 1; p <= terms; ++p)
    {
        zp *= z;
        sum += zp / std::pow(static_cast<long double>(p), j);
    }
    return static_cast<double>(sum);
}

}  // namespace

TEST_CASE("laguerre values")
{
    CHECK(laguerre(0, 7.3) == 1);
    CHECK(laguerre(2, 2) == Approx(-1).epsilon(1e-15));
    CHECK(laguerre(10, 3.7) == Approx(laguerre_by_coefficients(10, 3.7)).epsilon(1e-12));
    for (unsigned n : {1u, 3u, 7u, 15u})
        for (double x : {0.1, 1.0, 4.5, 9.0})
            CHECK(laguerre(n, x) == Approx(laguerre_by_coefficients(n, x)).epsilon(1e-11));
    for (unsigned n = 0; n <= 200; ++n)
        CHECK(laguerre(n, 0) == 1);
}

TEST_CASE("scaled laguerre sequence")
{
    auto seq = scaled_laguerre_sequence(30, 6.5);
    REQUIRE(seq.size() == 31);
    for (unsigned n = 0; n <= 30; ++n)
        CHECK(seq[n] == Approx(std::exp(-3.25) * laguerre(n, 6.5)).epsilon(1e-12));
    // large argument stays finite where e^{x/2} alone would overflow
    auto far = scaled_laguerre_sequence(5, 2000);
    CHECK(std::isfinite(far[5]));
}

TEST_CASE("hermite polynomials")
{
    CHECK(hermite(0, 3.1) == 1);
    CHECK(hermite(2, 1) == 2);
    CHECK(hermite(3, 0.5) == Approx(8 * 0.125 - 12 * 0.5));
    for (unsigned m = 0; m <= 100; ++m)
        CHECK(hermite(2 * m + 1, 0) == 0);
    CHECK_THROWS_AS(hermite(400, 30), std::overflow_error);
}

TEST_CASE("oscillator eigenfunctions are normalized")
{
    // trapezoid rule is spectrally accurate for Gaussian-decaying integrands
    for (unsigned n : {0u, 1u, 7u, 20u, 30u})
    {
        for (double l : {0.5, 1.0, 2.0})
        {
            double edge = (std::sqrt(2.0 * n + 1) + 10) * l;
            int const steps = 8000;
            double h = 2 * edge / steps;
            double sum = 0;
            for (int i = 0; i <= steps; ++i)
            {
                double psi = oscillator_eigenfunction(n, -edge + i * h, l);
                sum += ((i == 0 || i == steps) ? 0.5 : 1.0) * psi * psi;
            }
            CHECK(sum * h == Approx(1).epsilon(1e-10));
        }
    }
}

TEST_CASE("eigenfunction matches the Hermite form")
{
    for (unsigned n : {0u, 2u, 5u})
    {
        double x = 0.7;
        double norm = 1 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)
                                    * std::sqrt(std::numbers::pi));
        CHECK(hermite_function(n, x)
              == Approx(norm * hermite(n, x) * std::exp(-x * x / 2)).epsilon(1e-13));
    }
}

TEST_CASE("zeta values")
{
    CHECK(zeta(2) == Approx(zeta2).epsilon(1e-15));
    CHECK(zeta(3) == Approx(zeta3).epsilon(1e-15));
    for (int s = 2; s <= 8; ++s)
        CHECK(zeta(s) == Approx(zeta_by_series(s)).epsilon(1e-13));
    CHECK_THROWS_AS(zeta(1), DomainError);
}

TEST_CASE("bose polylogarithm")
{
    CHECK(polylog(3, 0, PolylogKind::bose) == 0);
    CHECK(polylog(3, 1, PolylogKind::bose) == Approx(1.2020569).epsilon(1e-7));
    for (int j = 2; j <= 6; ++j)
        CHECK(std::abs(polylog(j, 1, PolylogKind::bose) - zeta_by_series(j)) < 1e-9);
    for (double z : {0.1, 0.45, 0.55, 0.9, 0.99})
        for (int j : {2, 3, 4, 5})
            CHECK(polylog(j, z, PolylogKind::bose)
                  == Approx(bose_series(j, z, 5000)).epsilon(1e-13));
    CHECK_THROWS_AS(polylog(3, 1.01, PolylogKind::bose), DomainError);
    CHECK_THROWS_AS(polylog(3, -0.1, PolylogKind::bose), DomainError);
}

TEST_CASE("bose polylogarithm is monotone up to z = 1")
{
    for (int j : {2, 3, 5})
    {
        double previous = 0;
        for (int i = 1; i <= 1000; ++i)
        {
            double v = polylog(j, i / 1000.0, PolylogKind::bose);
            CHECK(v > previous);
            previous = v;
        }
    }
}

TEST_CASE("fermi polylogarithm")
{
    CHECK(polylog(3, 1, PolylogKind::fermi) == Approx(0.75 * zeta3).epsilon(1e-13));
    CHECK(polylog(3, 1, PolylogKind::fermi) == Approx(0.9015427).epsilon(1e-7));
    for (double z : {0.2, 0.7})
        CHECK(polylog(4, z, PolylogKind::fermi)
              == Approx(-bose_series(4, -z, 400)).epsilon(1e-13));

    // inversion formulas relate −Li_j(−z) to the convergent series in 1/z
    for (double z : {1.5, 4.0, 30.0, 1e3})
    {
        double L = std::log(z);
        double li2 = zeta2 + 0.5 * L * L + bose_series(2, -1 / z, 200);
        CHECK(polylog(2, z, PolylogKind::fermi) == Approx(li2).epsilon(1e-11));
        double li3 = zeta2 * L + L * L * L / 6 - bose_series(3, -1 / z, 200);
        CHECK(polylog(3, z, PolylogKind::fermi) == Approx(li3).epsilon(1e-11));
    }
    CHECK(fermi_dirac_integral(3, 4.0) == polylog(3, 4.0, PolylogKind::fermi));
    CHECK_THROWS_AS(polylog(3, -1, PolylogKind::fermi), DomainError);
}

TEST_CASE("geometric laguerre sum")
{
    CHECK(laguerre_sum_geometric(0, 3.3) == 1);
    CHECK(laguerre_sum_geometric(0.5, 1) == Approx(2 * std::exp(-1.0)).epsilon(1e-15));
    CHECK(laguerre_sum_geometric(0.9, 2) == Approx(10 * std::exp(-18.0)).epsilon(1e-14));
    CHECK(laguerre_sum_geometric(0.9, 2) == Approx(1.523e-7).epsilon(1e-3));

    for (double s : {0.2, 0.5, 0.7})
    {
        for (double x : {0.0, 0.4, 1.0})
        {
            long double direct = 0;
            long double sn = 1;
            for (unsigned n = 0; n < 400; ++n, sn *= s)
                direct += sn * laguerre(n, x);
            CHECK(laguerre_sum_geometric(s, x)
                  == Approx(static_cast<double>(direct)).epsilon(1e-10));
        }
    }
    CHECK_THROWS_AS(laguerre_sum_geometric(1, 0.5), DomainError);
}

TEST_CASE("classical-limit trend of laguerre")
{
    // |L_n(x) − e^{−nx}| / e^{−nx} shrinks as x → 0 at fixed n
    for (unsigned n : {3u, 10u})
    {
        double previous = 1e300;
        for (double x : {0.1, 0.03, 0.01, 0.003})
        {
            double gap = std::abs(laguerre(n, x) - std::exp(-double(n) * x)) / std::exp(-double(n) * x);
            CHECK(gap < previous);
            previous = gap;
        }
    }
}
