#include "trapscat/thermal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "trapscat/single.hpp"
#include "trapscat/specfun.hpp"

namespace trapscat
{
namespace
{
//---------------------------------------------------------------------------//
std::array<double, 3> spacings(TrapGeometry const& geom)
{
    return {geom.level_spacing(Axis::x),
            geom.level_spacing(Axis::y),
            geom.level_spacing(Axis::z)};
}

double min_spacing(TrapGeometry const& geom)
{
    auto const e = spacings(geom);
    return *std::min_element(e.begin(), e.end());
}

// Degeneracy of shell n in an isotropic 3-D oscillator
double shell_degeneracy(unsigned n)
{
    return 0.5 * (n + 1.0) * (n + 2.0);
}

//---------------------------------------------------------------------------//
// Fugacity series
//
// Each term of the j-series carries per-axis factors s_α = e^{−jε_α/t}.
// log_excess is ln Π_α h_α(j) where h_α = e^{−2Q_α s/(1−s)}/(1−s) is the
// Laguerre generating function normalized by its ground-state term; with
// Q = 0 it reduces to ln Π_α 1/(1−s_α). `bound` majorizes |expm1(log_excess)|
// and decays at least as fast as e^{−jε_min/t}.
struct SeriesTerm
{
    double log_excess{0};
    double bound{0};
};

SeriesTerm series_term(int j,
                       double t,
                       std::array<double, 3> const& eps,
                       std::array<double, 3> const& Q)
{
    SeriesTerm term;
    double majorant = 0;
    for (int a = 0; a < 3; ++a)
    {
        double const s = std::exp(-j * eps[a] / t);
        double const ratio = s / (-std::expm1(-j * eps[a] / t));
        term.log_excess += -2 * Q[a] * ratio - std::log1p(-s);
        majorant += (2 * Q[a] + 1) * ratio;
    }
    term.bound = std::expm1(majorant);
    return term;
}

/*!
 * Σ_{j≥1} σ^{j+1} e^{jη} expm1(L_j), σ = ±1.
 *
 * The ground-state contribution Σ σ^{j+1} e^{jη} is excluded; the caller
 * adds it in closed form. Returns NaN when the series does not settle
 * within the term cap.
 */
double excited_series(double eta,
                      double t,
                      std::array<double, 3> const& eps,
                      std::array<double, 3> const& Q,
                      double sign,
                      double scale,
                      long max_terms = 10'000'000)
{
    double const eps_min = *std::min_element(eps.begin(), eps.end());
    double const tail_factor = 1 / (-std::expm1(eta - eps_min / t));
    double sum = 0;
    double alternate = 1;
    for (long j = 1; j <= max_terms; ++j)
    {
        auto const term = series_term(static_cast<int>(j), t, eps, Q);
        double const weight = std::exp(j * eta);
        double const tol = 1e-17 * (std::fabs(sum) + scale) + 1e-300;
        if (j > 1 && weight * term.bound * tail_factor <= tol)
            return sum;
        sum += alternate * weight * std::expm1(term.log_excess);
        alternate *= sign;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

//---------------------------------------------------------------------------//
// Shell-ordered occupations for an isotropic trap. Entry n holds the mean
// occupation of one state in shell n; the list is cut where the
// occupation-weighted atom count remaining beyond it is below `tail`
// relative to the atoms counted.
std::vector<double> shell_occupations(EnsembleSpec const& spec,
                                      double tail,
                                      unsigned max_level)
{
    std::vector<double> occ{spec.ground_occupation()};
    double atoms = occ[0];
    double prev_atoms = occ[0];
    for (unsigned n = 1;; ++n)
    {
        if (n > max_level)
        {
            throw ConvergenceError(
                "direct thermal sum needs more than "
                + std::to_string(max_level)
                + " shells at t = " + std::to_string(spec.t)
                + "; use thermal_amplitude_fast");
        }
        double const o = occupation(static_cast<double>(n), spec);
        double const a = shell_degeneracy(n) * o;
        occ.push_back(o);
        atoms += a;
        // ratio of successive shell atom counts is non-increasing beyond
        // the Fermi edge, so a geometric tail bound applies once it is < 1
        double const edge = (spec.statistics == Statistics::fermi)
                                ? spec.t * spec.log_fugacity
                                : 0.0;
        if (n > edge && prev_atoms > 0)
        {
            double const ratio = a / prev_atoms;
            if (ratio < 1 && a * ratio / (1 - ratio) <= tail * atoms)
                break;
        }
        if (a == 0 && n > edge)
            break;
        prev_atoms = a;
    }
    return occ;
}

// C_n = Σ_{a+b+c=n} X_a Y_b Z_c, truncated at n_max
std::vector<double> shell_form_factors(unsigned n_max, MomentumTransfer const& q)
{
    auto const X = scaled_laguerre_sequence(n_max, 2 * q.scaled_square(Axis::x));
    auto const Y = scaled_laguerre_sequence(n_max, 2 * q.scaled_square(Axis::y));
    auto const Z = scaled_laguerre_sequence(n_max, 2 * q.scaled_square(Axis::z));
    std::vector<double> XY(n_max + 1, 0.0);
    for (unsigned a = 0; a <= n_max; ++a)
        for (unsigned b = 0; a + b <= n_max; ++b)
            XY[a + b] += X[a] * Y[b];
    std::vector<double> C(n_max + 1, 0.0);
    for (unsigned m = 0; m <= n_max; ++m)
        for (unsigned c = 0; m + c <= n_max; ++c)
            C[m + c] += XY[m] * Z[c];
    return C;
}

//---------------------------------------------------------------------------//
// Visit every state with E_rel ≤ e_cut; throws when the count exceeds the
// budget.
template<class F>
void for_each_state(TrapGeometry const& geom,
                    double e_cut,
                    std::size_t max_states,
                    F&& visit)
{
    auto const eps = spacings(geom);
    auto const nx_max = static_cast<unsigned>(std::floor(e_cut / eps[0] + 1e-9));
    std::size_t count = 0;
    for (unsigned nx = 0; nx <= nx_max; ++nx)
    {
        double const ex = nx * eps[0];
        auto const ny_max
            = static_cast<unsigned>(std::floor((e_cut - ex) / eps[1] + 1e-9));
        for (unsigned ny = 0; ny <= ny_max; ++ny)
        {
            double const exy = ex + ny * eps[1];
            count += static_cast<std::size_t>(
                         std::floor((e_cut - exy) / eps[2] + 1e-9))
                     + 1;
        }
    }
    if (count > max_states)
    {
        throw ConvergenceError("state enumeration needs "
                               + std::to_string(count)
                               + " states, over the budget of "
                               + std::to_string(max_states)
                               + "; use thermal_amplitude_fast");
    }
    for (unsigned nx = 0; nx <= nx_max; ++nx)
    {
        double const ex = nx * eps[0];
        auto const ny_max
            = static_cast<unsigned>(std::floor((e_cut - ex) / eps[1] + 1e-9));
        for (unsigned ny = 0; ny <= ny_max; ++ny)
        {
            double const exy = ex + ny * eps[1];
            auto const nz_max = static_cast<unsigned>(
                std::floor((e_cut - exy) / eps[2] + 1e-9));
            for (unsigned nz = 0; nz <= nz_max; ++nz)
                visit(nx, ny, nz, exy + nz * eps[2]);
        }
    }
}

// Energy window holding all but a negligible tail of the thermal atoms
double thermal_energy_cutoff(EnsembleSpec const& spec, TrapGeometry const& geom)
{
    double const edge = (spec.statistics == Statistics::fermi)
                            ? std::max(0.0, spec.t * spec.log_fugacity)
                            : 0.0;
    double const eps_min = min_spacing(geom);
    double e_cut = edge + 40 * spec.t;
    for (int iter = 0; iter < 3; ++iter)
    {
        double const states_near = (e_cut + 3) * (e_cut + 3) / (2 * eps_min * eps_min);
        e_cut = edge + spec.t * (40 + std::log1p(spec.t * states_near / eps_min));
    }
    return e_cut;
}

//---------------------------------------------------------------------------//
double fermi_number_shells(double eta, double t)
{
    EnsembleSpec spec;
    spec.statistics = Statistics::fermi;
    spec.t = t;
    spec.log_fugacity = eta;
    auto const occ = shell_occupations(spec, 1e-17, 1'000'000);
    double total = 0;
    for (std::size_t n = 0; n < occ.size(); ++n)
        total += shell_degeneracy(static_cast<unsigned>(n)) * occ[n];
    return total;
}

double fermi_number(double eta, double t, TrapGeometry const& geom)
{
    if (geom.is_isotropic())
        return fermi_number_shells(eta, t);
    auto const eps = spacings(geom);
    if (eta < std::log(0.9))
    {
        std::array<double, 3> const no_q{0, 0, 0};
        double const ground = std::exp(eta) / (1 + std::exp(eta));
        return ground
               + excited_series(eta, t, eps, no_q, -1.0, 1.0);
    }
    EnsembleSpec spec;
    spec.statistics = Statistics::fermi;
    spec.t = t;
    spec.log_fugacity = eta;
    double total = 0;
    for_each_state(geom,
                   thermal_energy_cutoff(spec, geom),
                   CutoffPolicy{}.max_states,
                   [&](unsigned, unsigned, unsigned, double e) {
                       total += occupation(e, spec);
                   });
    return total;
}

double bose_number(double eta, double t, TrapGeometry const& geom)
{
    return 1 / std::expm1(-eta) + excited_bose_number(eta, t, geom);
}

template<class F>
double find_root(F&& f, double lo, double hi, char const* what)
{
    boost::uintmax_t max_iter = 500;
    auto tol = boost::math::tools::eps_tolerance<double>(50);
    auto const [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, max_iter);
    if (max_iter >= 500)
        throw ConvergenceError(std::string(what) + ": root finder did not converge");
    return 0.5 * (a + b);
}

EnsembleSpec solve_exact(Statistics statistics,
                         double N,
                         double t,
                         TrapGeometry const& geom)
{
    EnsembleSpec spec;
    spec.statistics = statistics;
    spec.particles = N;
    spec.t = t;
    if (statistics == Statistics::boltzmann)
    {
        double log_z = 0;
        for (Axis a : all_axes)
            log_z -= std::log1p(-std::exp(-geom.level_spacing(a) / t));
        spec.partition_function = std::exp(log_z);
        return spec;
    }
    if (statistics == Statistics::bose)
    {
        // η = −e^v; N(v) decreases from +∞ as v grows
        auto residual = [&](double v) {
            return bose_number(-std::exp(v), t, geom) - N;
        };
        double lo = -60;
        double hi = 1;
        while (residual(hi) > 0)
        {
            lo = hi;
            hi += 4;
            if (hi > 60)
                throw ConvergenceError("Bose fugacity: could not bracket root");
        }
        double const v = find_root(residual, lo, hi, "Bose fugacity");
        spec.log_fugacity = -std::exp(v);
        return spec;
    }
    auto residual = [&](double eta) { return fermi_number(eta, t, geom) - N; };
    double lo = -1;
    double hi = 1;
    while (residual(lo) > 0)
        lo *= 2;
    while (residual(hi) < 0)
    {
        hi *= 2;
        if (hi > 1e9)
            throw ConvergenceError("Fermi fugacity: could not bracket root");
    }
    spec.log_fugacity = find_root(residual, lo, hi, "Fermi fugacity");
    return spec;
}

EnsembleSpec solve_bulk(Statistics statistics,
                        double N,
                        double t,
                        TrapGeometry const& geom)
{
    if (statistics == Statistics::boltzmann)
        return solve_exact(statistics, N, t, geom);
    EnsembleSpec spec;
    spec.statistics = statistics;
    spec.particles = N;
    spec.t = t;
    double const t3 = t * t * t;
    if (statistics == Statistics::bose)
    {
        if (N >= t3 * zeta3)
        {
            spec.log_fugacity = 0;
            spec.condensate = N - t3 * zeta3;
            return spec;
        }
        auto residual = [&](double z) {
            return t3 * polylog(3, z, PolylogKind::bose) - N;
        };
        spec.log_fugacity = std::log(find_root(residual, 0.0, 1.0, "bulk Bose fugacity"));
        return spec;
    }
    auto residual = [&](double eta) {
        return t3 * polylog(3, std::exp(eta), PolylogKind::fermi) - N;
    };
    double lo = -1;
    double hi = 1;
    while (residual(lo) > 0)
        lo *= 2;
    while (residual(hi) < 0)
        hi *= 2;
    spec.log_fugacity = find_root(residual, lo, hi, "bulk Fermi fugacity");
    return spec;
}

EnsembleSpec zero_temperature(Statistics statistics, double N, TrapGeometry const& geom)
{
    EnsembleSpec spec;
    spec.statistics = statistics;
    spec.particles = N;
    spec.t = 0;
    if (statistics == Statistics::bose)
        spec.condensate = N;
    if (statistics == Statistics::fermi)
    {
        if (N != std::floor(N))
            throw DomainError("Fermi filling needs an integer particle number");
        auto const levels = fermi_fill(static_cast<std::size_t>(N), geom);
        spec.fermi_level = levels.back().energy;
        spec.top_fraction = levels.back().filled_fraction;
    }
    return spec;
}

// e^{−Q} Σ_states n̄ Π L at t = 0
double zero_temperature_form_sum(EnsembleSpec const& spec,
                                 TrapGeometry const& geom,
                                 MomentumTransfer const& q)
{
    double const ground = std::exp(-q.quadratic_form());
    if (spec.statistics != Statistics::fermi)
        return spec.particles * ground;
    auto const levels
        = fermi_fill(static_cast<std::size_t>(spec.particles), geom);
    if (geom.is_isotropic())
    {
        auto const n_max = static_cast<unsigned>(std::lround(levels.back().energy));
        auto const C = shell_form_factors(n_max, q);
        double sum = 0;
        for (auto const& level : levels)
            sum += level.filled_fraction * C[static_cast<unsigned>(std::lround(level.energy))];
        return sum;
    }
    auto const eps = spacings(geom);
    double const top = levels.back().energy;
    std::array<std::vector<double>, 3> seq;
    for (int a = 0; a < 3; ++a)
    {
        seq[a] = scaled_laguerre_sequence(
            static_cast<unsigned>(std::floor(top / eps[a] + 1e-9)) + 1,
            2 * q.scaled_squares[a]);
    }
    double sum = 0;
    for_each_state(geom, top * (1 + 1e-12) + 1e-12, CutoffPolicy{}.max_states,
                   [&](unsigned nx, unsigned ny, unsigned nz, double e) {
                       sum += occupation(e, spec) * seq[0][nx] * seq[1][ny]
                              * seq[2][nz];
                   });
    return sum;
}

}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(Statistics s)
{
    switch (s)
    {
        case Statistics::bose:
            return "bose";
        case Statistics::fermi:
            return "fermi";
        case Statistics::boltzmann:
            return "boltzmann";
    }
    return "unknown";
}

double EnsembleSpec::fugacity() const
{
    return std::exp(log_fugacity);
}

double EnsembleSpec::ground_occupation() const
{
    if (t == 0)
    {
        if (statistics == Statistics::fermi)
            return occupation(0, *this);
        return particles;
    }
    if (statistics == Statistics::bose)
    {
        double n0 = condensate;
        if (log_fugacity < 0)
            n0 += 1 / std::expm1(-log_fugacity);
        return n0;
    }
    return occupation(0, *this);
}

double occupation(double e_rel, EnsembleSpec const& spec)
{
    if (!(e_rel >= 0))
        throw DomainError("energy must be measured upward from the ground state");
    if (spec.t == 0)
    {
        switch (spec.statistics)
        {
            case Statistics::bose:
            case Statistics::boltzmann:
                return e_rel == 0 ? spec.particles : 0.0;
            case Statistics::fermi: {
                double const tol = 1e-9 * (1 + spec.fermi_level);
                if (e_rel < spec.fermi_level - tol)
                    return 1.0;
                if (e_rel <= spec.fermi_level + tol)
                    return spec.top_fraction;
                return 0.0;
            }
        }
    }
    double const x = e_rel / spec.t;
    switch (spec.statistics)
    {
        case Statistics::bose: {
            double const arg = x - spec.log_fugacity;
            if (!(arg > 0))
            {
                throw DomainError(
                    "Bose occupation diverges: condensate must be handled "
                    "explicitly");
            }
            return 1 / std::expm1(arg);
        }
        case Statistics::fermi: {
            double const arg = x - spec.log_fugacity;
            return arg > 0 ? std::exp(-arg) / (1 + std::exp(-arg))
                           : 1 / (1 + std::exp(arg));
        }
        case Statistics::boltzmann:
            return spec.particles * std::exp(-x) / spec.partition_function;
    }
    return 0;
}

EnsembleSpec solve_fugacity(Statistics statistics,
                            double particles,
                            double t,
                            TrapGeometry const& geom,
                            FugacityRoute route)
{
    if (!(particles > 0))
        throw DomainError("particle number must be positive");
    if (!(t >= 0) || !std::isfinite(t))
        throw DomainError("temperature must be finite and non-negative");
    if (t == 0)
        return zero_temperature(statistics, particles, geom);
    if (route == FugacityRoute::thermodynamic_limit)
        return solve_bulk(statistics, particles, t, geom);
    return solve_exact(statistics, particles, t, geom);
}

double particle_number(EnsembleSpec const& spec, TrapGeometry const& geom)
{
    if (spec.t == 0)
    {
        if (spec.statistics != Statistics::fermi)
            return spec.particles;
        double total = 0;
        for (auto const& level :
             fermi_fill(static_cast<std::size_t>(spec.particles), geom))
            total += level.degeneracy * level.filled_fraction;
        return total;
    }
    switch (spec.statistics)
    {
        case Statistics::bose:
            return spec.ground_occupation()
                   + excited_bose_number(spec.log_fugacity, spec.t, geom);
        case Statistics::fermi:
            return fermi_number(spec.log_fugacity, spec.t, geom);
        case Statistics::boltzmann: {
            double z = 1;
            for (Axis a : all_axes)
                z /= -std::expm1(-geom.level_spacing(a) / spec.t);
            return spec.particles * z / spec.partition_function;
        }
    }
    return 0;
}

double excited_bose_number(double log_fugacity, double t, TrapGeometry const& geom)
{
    std::array<double, 3> const no_q{0, 0, 0};
    double const n = excited_series(log_fugacity, t, spacings(geom), no_q, 1.0, 0.0);
    if (std::isnan(n))
        throw ConvergenceError("excited-state Bose sum did not converge");
    return n;
}

double excited_bose_form_sum(double log_fugacity,
                             double t,
                             TrapGeometry const& geom,
                             MomentumTransfer const& q)
{
    double const s = excited_series(
        log_fugacity, t, spacings(geom), q.scaled_squares, 1.0, 0.0);
    if (std::isnan(s))
        throw ConvergenceError("excited-state Bose form sum did not converge");
    return std::exp(-q.quadratic_form()) * s;
}

//---------------------------------------------------------------------------//
std::vector<EnergyLevel> fermi_fill(std::size_t particles, TrapGeometry const& geom)
{
    if (particles == 0)
        throw DomainError("Fermi filling needs at least one particle");
    std::vector<EnergyLevel> levels;
    std::size_t filled = 0;
    if (geom.is_isotropic())
    {
        for (unsigned n = 0; filled < particles; ++n)
        {
            auto const g = static_cast<std::size_t>(shell_degeneracy(n));
            std::size_t const take = std::min(g, particles - filled);
            levels.push_back({static_cast<double>(n), g,
                              static_cast<double>(take) / static_cast<double>(g)});
            filled += take;
        }
        return levels;
    }
    auto const eps = spacings(geom);
    double e_cut = std::cbrt(6.0 * static_cast<double>(particles) * eps[0]
                             * eps[1] * eps[2])
                   + 2 * (eps[0] + eps[1] + eps[2]);
    std::vector<double> energies;
    while (true)
    {
        energies.clear();
        for_each_state(geom, e_cut, 4 * particles + 1'000'000,
                       [&](unsigned, unsigned, unsigned, double e) {
                           energies.push_back(e);
                       });
        if (energies.size() >= particles)
            break;
        e_cut *= 1.5;
    }
    std::sort(energies.begin(), energies.end());
    std::size_t i = 0;
    while (filled < particles)
    {
        double const e = energies[i];
        std::size_t g = 0;
        while (i < energies.size()
               && energies[i] <= e + 1e-9 * (1 + e))
        {
            ++g;
            ++i;
        }
        std::size_t const take = std::min(g, particles - filled);
        levels.push_back({e, g, static_cast<double>(take) / static_cast<double>(g)});
        filled += take;
    }
    return levels;
}

//---------------------------------------------------------------------------//
complex_type thermal_amplitude_direct(ScatteringContext const& ctx,
                                      TrapGeometry const& geom,
                                      EnsembleSpec const& spec,
                                      double theta,
                                      double phi,
                                      CutoffPolicy const& policy)
{
    auto const q = momentum_transfer(ctx.k(), theta, phi, geom);
    if (spec.t == 0)
        return -ctx.a_k() * zero_temperature_form_sum(spec, geom, q);

    double sum = 0;
    if (geom.is_isotropic())
    {
        auto const occ = shell_occupations(spec, 1e-4 * policy.relative_tail,
                                           policy.max_level);
        auto const C = shell_form_factors(static_cast<unsigned>(occ.size() - 1), q);
        for (std::size_t n = 0; n < occ.size(); ++n)
            sum += occ[n] * C[n];
    }
    else
    {
        auto const eps = spacings(geom);
        double const e_cut = thermal_energy_cutoff(spec, geom);
        std::array<std::vector<double>, 3> seq;
        for (int a = 0; a < 3; ++a)
        {
            seq[a] = scaled_laguerre_sequence(
                static_cast<unsigned>(std::floor(e_cut / eps[a] + 1e-9)) + 1,
                2 * q.scaled_squares[a]);
        }
        double const n0 = spec.ground_occupation();
        for_each_state(geom, e_cut, policy.max_states,
                       [&](unsigned nx, unsigned ny, unsigned nz, double e) {
                           double const o = (nx + ny + nz == 0) ? n0
                                                                : occupation(e, spec);
                           sum += o * seq[0][nx] * seq[1][ny] * seq[2][nz];
                       });
    }
    return -ctx.a_k() * sum;
}

ThermalAmplitude thermal_amplitude_fast(ScatteringContext const& ctx,
                                        TrapGeometry const& geom,
                                        EnsembleSpec const& spec,
                                        double theta,
                                        double phi)
{
    auto const q = momentum_transfer(ctx.k(), theta, phi, geom);
    if (spec.t == 0)
        return {-ctx.a_k() * zero_temperature_form_sum(spec, geom, q), false};

    auto const eps = spacings(geom);
    double const ground = std::exp(-q.quadratic_form());
    switch (spec.statistics)
    {
        case Statistics::boltzmann: {
            double exponent = 0;
            for (int a = 0; a < 3; ++a)
            {
                double const x = eps[a] / (2 * spec.t);
                exponent -= q.scaled_squares[a] / std::tanh(x);
            }
            return {-ctx.a_k() * spec.particles * std::exp(exponent), false};
        }
        case Statistics::bose: {
            double const n0 = spec.ground_occupation();
            double const s = excited_series(
                spec.log_fugacity, spec.t, eps, q.scaled_squares, 1.0, n0);
            if (std::isnan(s))
                break;
            return {-ctx.a_k() * ground * (n0 + s), false};
        }
        case Statistics::fermi: {
            constexpr double max_fugacity = 0.99;
            if (spec.fugacity() > max_fugacity)
                break;
            double const n0 = spec.ground_occupation();
            double const s = excited_series(
                spec.log_fugacity, spec.t, eps, q.scaled_squares, -1.0, n0);
            if (std::isnan(s))
                break;
            return {-ctx.a_k() * ground * (n0 + s), false};
        }
    }
    return {thermal_amplitude_direct(ctx, geom, spec, theta, phi), true};
}

double fermi_ground_profile(ScatteringContext const& ctx,
                            TrapGeometry const& geom,
                            std::size_t particles,
                            double theta,
                            double phi,
                            FermiProfileMode mode)
{
    if (particles == 0)
        throw DomainError("Fermi ground profile needs N >= 1");
    if (mode == FermiProfileMode::approx)
    {
        if (!geom.is_isotropic())
            throw DomainError("approximate Fermi profile needs an isotropic trap");
        auto const q = momentum_transfer(ctx.k(), theta, phi, geom);
        double const N = static_cast<double>(particles);
        return N * N * std::norm(ctx.a_k())
               * std::exp(-6 * q.quadratic_form() * std::cbrt(N));
    }
    auto const spec = zero_temperature(Statistics::fermi,
                                       static_cast<double>(particles), geom);
    return std::norm(thermal_amplitude_direct(ctx, geom, spec, theta, phi));
}

double classical_limit_profile(ScatteringContext const& ctx,
                               TrapGeometry const& geom,
                               unsigned n,
                               double theta,
                               double phi)
{
    return std::norm(
        amplitude_3d(ctx, geom, OscillatorState::three_d(n, n, n), theta, phi));
}

double half_width_at_half_maximum(std::function<double(double)> const& profile,
                                  double theta_max,
                                  int scan_points)
{
    double const half = profile(0.0) / 2;
    double prev = 0;
    for (int i = 1; i <= scan_points; ++i)
    {
        double const theta = theta_max * i / scan_points;
        if (profile(theta) <= half)
        {
            double lo = prev;
            double hi = theta;
            for (int it = 0; it < 100 && hi - lo > 1e-15; ++it)
            {
                double const mid = 0.5 * (lo + hi);
                (profile(mid) > half ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev = theta;
    }
    throw DomainError("profile never falls to half of its forward value");
}

}  // namespace trapscat
