#pragma once

#include <functional>
#include <optional>

#include "trapscat/core.hpp"
#include "trapscat/specfun.hpp"

namespace trapscat
{
//! Condensation temperature k_B T_c / ħω = (N/ζ(3))^{1/3}
double critical_temperature(double particles);

//! |N a_k|² e^{−2Q}: all N bosons in the trap ground state
double bec_ground_profile(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          double particles,
                          double theta,
                          double phi);

struct CrossSection
{
    double value;
    double error;  //!< quadrature error estimate
};

//! ∫ dΩ D(θ, φ) by nested adaptive Gauss–Kronrod quadrature
CrossSection integrate_cross_section(std::function<double(double, double)> const& profile,
                                     double tolerance = 1e-10);

CrossSection total_cross_section(ScatteringContext const& ctx,
                                 TrapGeometry const& geom,
                                 double particles);

//! k → 0 limit 4π |N a_s m/μ̄|²
double low_energy_cross_section(ScatteringContext const& ctx, double particles);

//---------------------------------------------------------------------------//
// Bulk thermodynamics
//---------------------------------------------------------------------------//
struct Expansion
{
    double value;
    bool reliable;  //!< false when q² l̄² > 0.1
};

/*!
 * Small-momentum expansion of the thermal level sum for an isotropic trap,
 * S = t³Li₃ − 6 x t⁴Li₄ + x² (12 t⁵Li₅ + 3 t⁴Li₄), with x = q² l̄².
 */
Expansion expansion_S(double t,
                      double fugacity,
                      double q2l2,
                      PolylogKind kind = PolylogKind::bose);

/*!
 * Condensate fraction N₀/N, clamped at zero.
 *
 * With corrections, the finite-size term 3t²ζ(2)/(2t_c³ζ(3)) and the
 * lowest-order Hartree–Fock interaction term 4.932 t^{7/2} ã_s/(t_c³ζ(3) l̄)
 * are subtracted from the ideal 1 − (t/t_c)³.
 */
double condensate_fraction(double t,
                           double t_c,
                           double a_tilde_over_l,
                           bool corrections);

/*!
 * Width scale u = ℓ̃/l̄ of a repulsive condensate.
 *
 * Minimizes the Gaussian variational mean-field energy:
 * u⁵ − u = sqrt(2/π) N₀ ã_s/l̄ with u ≥ 1.
 */
double variational_width(double condensate, double a_tilde_over_l);

//---------------------------------------------------------------------------//
// Below-T_c composite
//---------------------------------------------------------------------------//
struct CondensateOptions
{
    bool corrections{false};
    std::optional<double> width_scale;  //!< override for the variational u
};

//! Quantities shared by every angle of a profile at fixed (N, t, ã_s)
struct CondensateState
{
    double particles{0};
    double t{0};
    double t_c{0};
    double condensate{0};  //!< N₀
    double width_scale{1};  //!< ℓ̃ / l̄
    double thermal_atoms{0};  //!< N − N₀
    double cloud_norm{0};  //!< ground-excluded level sum at z̃ = 1, Q = 0
};

CondensateState prepare_condensate(TrapGeometry const& geom,
                                   double particles,
                                   double t,
                                   double a_tilde_over_l,
                                   CondensateOptions const& options = {});

/*!
 * Coherent amplitude of a condensate of N₀ atoms with scaled width plus a
 * thermal cloud of N − N₀ atoms.
 *
 * The cloud has the angular shape of the ground-excluded level sum at
 * z̃ = 1 and is normalized to carry N − N₀ atoms in the forward direction.
 */
complex_type below_tc_amplitude(ScatteringContext const& ctx,
                                TrapGeometry const& geom,
                                CondensateState const& state,
                                double theta,
                                double phi);

double bec_below_tc_profile(ScatteringContext const& ctx,
                            TrapGeometry const& geom,
                            double particles,
                            double t,
                            double a_tilde_over_l,
                            double theta,
                            double phi,
                            CondensateOptions const& options = {});

//---------------------------------------------------------------------------//
// Condensate arrays
//---------------------------------------------------------------------------//
//! Wells spaced by d along x in the tight-binding regime
struct ArrayGeometry
{
    unsigned wells{2};
    double spacing{10};

    //! Tight binding assumes d ≫ l_x; flagged below 5 l_x
    bool tight_binding_valid(TrapGeometry const& geom) const
    {
        return spacing >= 5 * geom.length(Axis::x);
    }
};

/*!
 * Interference factor |Σ_w e^{2iwx}|² = [sin(N′x)/sin x]² with
 * x = π d sinθ / λ and λ = 2π/k.
 *
 * Near principal maxima the cosine-sum form is used so the factor is
 * continuous through the removable singularity.
 */
double array_factor(unsigned wells, double spacing, double k, double theta);

double double_well_profile(ScatteringContext const& ctx,
                           TrapGeometry const& geom,
                           double particles,
                           double spacing,
                           double theta,
                           double phi);

double lattice_profile(ScatteringContext const& ctx,
                       TrapGeometry const& geom,
                       double particles,
                       ArrayGeometry const& array,
                       double theta,
                       double phi);

enum class CloudCoherence
{
    coherent,  //!< each well's full amplitude interferes
    incoherent  //!< thermal clouds add in intensity across wells
};

double array_profile_finite_T(ScatteringContext const& ctx,
                              TrapGeometry const& geom,
                              CondensateState const& state,
                              ArrayGeometry const& array,
                              double theta,
                              double phi,
                              CloudCoherence coherence = CloudCoherence::coherent);

}  // namespace trapscat
