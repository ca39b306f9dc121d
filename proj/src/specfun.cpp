#include "trapscat/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "trapscat/core.hpp"

namespace trapscat
{
namespace
{
// B_2 .. B_14
constexpr std::array<double, 7> bernoulli_even{1.0 / 6,
                                               -1.0 / 30,
                                               1.0 / 42,
                                               -1.0 / 30,
                                               5.0 / 66,
                                               -691.0 / 2730,
                                               7.0 / 6};

// ζ(1 − 2m) = (−1)^m 2 (2m−1)! ζ(2m) / (2π)^{2m}, m ≥ 1
double zeta_negative_odd(int m)
{
    double const log_mag = std::log(2.0) + std::lgamma(2.0 * m)
                           - 2.0 * m * std::log(2 * std::numbers::pi);
    double const sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_mag) * zeta(2 * m);
}

// ζ at any integer s ≠ 1
double zeta_any(int s)
{
    if (s >= 2)
        return zeta(s);
    if (s == 0)
        return -0.5;
    if ((-s) % 2 == 0)
        return 0.0;  // trivial zeros
    return zeta_negative_odd((1 - s) / 2);
}

double harmonic_number(int n)
{
    double h = 0;
    for (int i = 1; i <= n; ++i)
        h += 1.0 / i;
    return h;
}

double bose_series(int j, double z)
{
    double sum = 0;
    double zp = 1;
    for (int p = 1; p < 10'000; ++p)
    {
        zp *= z;
        double const term = zp / std::pow(p, j);
        sum += term;
        if (term < std::numeric_limits<double>::epsilon() * 0.1 * sum)
            break;
    }
    return sum;
}

// Li_j(e^μ) for μ ≤ 0 near zero: Σ_{k≠j−1} ζ(j−k) μ^k/k!
// + μ^{j−1}/(j−1)! (H_{j−1} − ln(−μ))
double bose_log_expansion(int j, double mu)
{
    if (mu == 0)
        return zeta(j);
    double sum = 0;
    double mu_pow = 1;  // μ^k / k!
    int small_terms = 0;
    for (int k = 0; k < 200; ++k)
    {
        if (k > 0)
            mu_pow *= mu / k;
        int const s = j - k;
        double term;
        if (s == 1)
            term = mu_pow * (harmonic_number(j - 1) - std::log(-mu));
        else
            term = zeta_any(s) * mu_pow;
        sum += term;
        if (k > j && s % 2 != 0
            && std::fabs(term) < 1e-17 * std::fabs(sum))
        {
            if (++small_terms == 2)
                break;
        }
    }
    return sum;
}

double bose_polylog(int j, double z)
{
    if (z == 0)
        return 0;
    if (z < 0.5)
        return bose_series(j, z);
    return bose_log_expansion(j, std::log(z));
}

}  // namespace

//---------------------------------------------------------------------------//
double zeta(int s)
{
    if (s < 2)
        throw DomainError("zeta(s) implemented for integer s >= 2");
    // Euler–Maclaurin with the direct sum carried to P − 1
    constexpr int P = 12;
    double sum = 0;
    for (int p = P - 1; p >= 1; --p)
        sum += std::pow(p, -s);
    double const Pd = P;
    sum += std::pow(Pd, 1 - s) / (s - 1) + 0.5 * std::pow(Pd, -s);
    // rising factorial s (s+1) ... (s+2k−2) / (2k)!
    double coeff = s;
    double power = std::pow(Pd, -s - 1);
    double factorial = 2;
    for (std::size_t k = 1; k <= bernoulli_even.size(); ++k)
    {
        sum += bernoulli_even[k - 1] / factorial * coeff * power;
        double const n2 = 2.0 * static_cast<double>(k);
        coeff *= (s + n2 - 1) * (s + n2);
        power /= Pd * Pd;
        factorial *= (n2 + 1) * (n2 + 2);
    }
    return sum;
}

//---------------------------------------------------------------------------//
double laguerre(unsigned n, double x)
{
    if (n == 0)
        return 1;
    double prev = 1;
    double cur = 1 - x;
    for (unsigned m = 1; m < n; ++m)
    {
        double const next = ((2 * m + 1 - x) * cur - m * prev) / (m + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> scaled_laguerre_sequence(unsigned n_max, double x)
{
    std::vector<double> out(n_max + 1);
    double const w = std::exp(-x / 2);
    out[0] = w;
    if (n_max == 0)
        return out;
    out[1] = (1 - x) * w;
    for (unsigned m = 1; m < n_max; ++m)
    {
        out[m + 1] = ((2 * m + 1 - x) * out[m] - m * out[m - 1]) / (m + 1);
    }
    return out;
}

double hermite(unsigned n, double x)
{
    double prev = 1;
    if (n == 0)
        return prev;
    double cur = 2 * x;
    for (unsigned m = 1; m < n; ++m)
    {
        double const next = 2 * x * cur - 2.0 * m * prev;
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur))
        throw std::overflow_error("Hermite polynomial overflows double range");
    return cur;
}

double hermite_function(unsigned n, double x)
{
    double prev = std::exp(-x * x / 2) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n == 0)
        return prev;
    double cur = std::sqrt(2.0) * x * prev;
    for (unsigned m = 1; m < n; ++m)
    {
        double const next = std::sqrt(2.0 / (m + 1)) * x * cur
                            - std::sqrt(static_cast<double>(m) / (m + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double oscillator_eigenfunction(unsigned n, double x0, double l)
{
    return hermite_function(n, x0 / l) / std::sqrt(l);
}

//---------------------------------------------------------------------------//
double polylog(int j, double z, PolylogKind kind)
{
    if (j < 2)
        throw DomainError("polylog order must be >= 2");
    if (!(z >= 0))
        throw DomainError("polylog argument must be non-negative");
    if (kind == PolylogKind::bose)
    {
        if (z > 1)
            throw DomainError("Bose polylog has no real value for z > 1");
        return bose_polylog(j, z);
    }
    if (z > 1)
        return fermi_dirac_integral(j, z);
    // Li_j(z) + Li_j(−z) = 2^{1−j} Li_j(z²)
    return bose_polylog(j, z) - std::ldexp(bose_polylog(j, z * z), 1 - j);
}

double fermi_dirac_integral(int j, double z)
{
    if (j < 1)
        throw DomainError("Fermi-Dirac integral order must be >= 1");
    if (!(z > 0))
        throw DomainError("Fermi-Dirac integral needs z > 0");
    using boost::math::quadrature::gauss_kronrod;
    double const eta = std::log(z);
    auto integrand = [j, eta](double x) {
        double const occ = (x > eta) ? std::exp(eta - x) / (1 + std::exp(eta - x))
                                     : 1 / (1 + std::exp(x - eta));
        return std::pow(x, j - 1) * occ;
    };
    double const edge = std::max(eta, 0.0);
    double err = 0;
    double total = 0;
    if (edge > 0)
        total += gauss_kronrod<double, 61>::integrate(
            integrand, 0.0, edge, 15, 1e-14, &err);
    total += gauss_kronrod<double, 61>::integrate(
        integrand, edge, edge + 60.0, 15, 1e-14, &err);
    return total / std::tgamma(j);
}

double laguerre_sum_geometric(double s, double x)
{
    if (!(s >= 0 && s < 1))
        throw DomainError("geometric Laguerre sum needs 0 <= s < 1");
    return std::exp(-x * s / (1 - s)) / (1 - s);
}

}  // namespace trapscat
