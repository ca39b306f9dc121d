#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "trapscat/core.hpp"

namespace trapscat
{
enum class Statistics
{
    bose,
    fermi,
    boltzmann
};

std::string_view to_string(Statistics s);

//---------------------------------------------------------------------------//
/*!
 * Equilibrium ensemble of N scatterers in a harmonic trap.
 *
 * Energies are measured from the ground state E_000 in units of ħω (the
 * geometric-mean frequency), so the Bose fugacity z̃ = e^{(μ − E_000)/k_BT}
 * stays below one. The fugacity is stored through its logarithm to keep
 * 1 − z̃ accurate deep in the condensed regime.
 *
 * A Bose condensate may also be carried explicitly: with ln z̃ = 0 the
 * ground-state population is `condensate` and only excited states follow
 * the Bose–Einstein occupation. Boltzmann ensembles are N independent
 * particles weighted by e^{−E/t}/Z.
 */
struct EnsembleSpec
{
    Statistics statistics{Statistics::bose};
    double particles{1};
    double t{0};
    double log_fugacity{0};
    double condensate{0};
    double partition_function{1};

    // Zero-temperature Fermi filling: energy of the highest occupied level
    // and the fraction of its states that are filled.
    double fermi_level{0};
    double top_fraction{1};

    double fugacity() const;
    double ground_occupation() const;
};

//! Mean occupation of one single-particle state at energy e_rel above E_000
double occupation(double e_rel, EnsembleSpec const& spec);

enum class FugacityRoute
{
    exact,  //!< exact level sums of the finite trap
    thermodynamic_limit  //!< N = t³ Li₃(±z̃)(±1), condensate split below t_c
};

/*!
 * Resolve the fugacity (or partition function) that holds N particles.
 *
 * The exact route uses the discrete level structure of the trap; for bosons
 * the ground state is part of the grand-canonical sum, so a root with
 * z̃ < 1 exists for every t > 0. The thermodynamic-limit route reproduces
 * the bulk relation N = t³ Li₃(z̃) and splits off a condensate
 * N₀ = N − t³ζ(3) below t_c.
 */
EnsembleSpec solve_fugacity(Statistics statistics,
                            double particles,
                            double t,
                            TrapGeometry const& geom,
                            FugacityRoute route = FugacityRoute::exact);

//! Σ_n n̄_n computed from the level structure (number sum rule)
double particle_number(EnsembleSpec const& spec, TrapGeometry const& geom);

//! Σ_{n ≠ 0} of Bose occupations at the given fugacity (ln z̃ ≤ 0)
double excited_bose_number(double log_fugacity, double t, TrapGeometry const& geom);

/*!
 * Ground-excluded Bose form-factor sum Σ_{n≠0} n̄_n e^{−Q} Π_α L_{n_α}(2Q_α).
 *
 * Summed through the per-axis generating function, valid at ln z̃ = 0.
 */
double excited_bose_form_sum(double log_fugacity,
                             double t,
                             TrapGeometry const& geom,
                             MomentumTransfer const& q);

//---------------------------------------------------------------------------//
// Zero-temperature Fermi filling
//---------------------------------------------------------------------------//
struct EnergyLevel
{
    double energy;  //!< above E_000, units of ħω
    std::size_t degeneracy;
    double filled_fraction;
};

//! Fill the lowest N single-particle states; a partly filled top level is
//! occupied uniformly
std::vector<EnergyLevel> fermi_fill(std::size_t particles, TrapGeometry const& geom);

//---------------------------------------------------------------------------//
// Thermal amplitudes
//---------------------------------------------------------------------------//
struct CutoffPolicy
{
    double relative_tail{1e-12};
    unsigned max_level{10'000};
    std::size_t max_states{20'000'000};
};

//! Direct occupation-weighted sum over oscillator states
complex_type thermal_amplitude_direct(ScatteringContext const& ctx,
                                      TrapGeometry const& geom,
                                      EnsembleSpec const& spec,
                                      double theta,
                                      double phi,
                                      CutoffPolicy const& policy = {});

struct ThermalAmplitude
{
    complex_type value;
    bool fell_back{false};  //!< series not applicable; direct sum used
};

/*!
 * Thermal amplitude through the fugacity series of per-axis generating
 * functions, −a_k Σ_j (±1)^{j+1} z̃^j Π_α e^{−Q_α coth(jε_α/2t)}/(1 − e^{−jε_α/t}).
 */
ThermalAmplitude thermal_amplitude_fast(ScatteringContext const& ctx,
                                        TrapGeometry const& geom,
                                        EnsembleSpec const& spec,
                                        double theta,
                                        double phi);

enum class FermiProfileMode
{
    exact,
    approx
};

//! Zero-temperature Fermi differential cross-section
double fermi_ground_profile(ScatteringContext const& ctx,
                            TrapGeometry const& geom,
                            std::size_t particles,
                            double theta,
                            double phi,
                            FermiProfileMode mode);

//! Cross-section for the highly excited state (n, n, n)
double classical_limit_profile(ScatteringContext const& ctx,
                               TrapGeometry const& geom,
                               unsigned n,
                               double theta,
                               double phi);

//! Angle where a forward-peaked profile first drops to half its θ=0 value
double half_width_at_half_maximum(std::function<double(double)> const& profile,
                                  double theta_max = 3.141592653589793,
                                  int scan_points = 4096);

}  // namespace trapscat
