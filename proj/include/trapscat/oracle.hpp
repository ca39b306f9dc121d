#pragma once

#include <cstddef>
#include <vector>

#include "trapscat/core.hpp"
#include "trapscat/single.hpp"
#include "trapscat/thermal.hpp"

namespace trapscat::validation
{
//---------------------------------------------------------------------------//
/*!
 * Brute-force checks behind the closed forms. Not a performance path.
 */
//---------------------------------------------------------------------------//
enum class QuadratureRule
{
    adaptive,  //!< adaptive Gauss–Kronrod to the target tolerance
    fixed  //!< composite 20-point Gauss–Legendre on equal panels
};

struct QuadratureSpec
{
    QuadratureRule rule{QuadratureRule::adaptive};
    unsigned panels{64};  //!< fixed rule only
    double cutoff_margin{8};  //!< |x| ≤ (sqrt(2n+1) + margin) l
    double tolerance{1e-12};
};

struct QuadratureResult
{
    complex_type value;
    double error;
};

//! ∫ e^{−iκx} |ψ_n(x)|² dx for an oscillator of length l
QuadratureResult density_fourier_transform(unsigned n,
                                           double length,
                                           double kappa,
                                           QuadratureSpec const& spec = {});

//! ∫ |ψ_n|² dx
double eigenfunction_norm(unsigned n, double length, QuadratureSpec const& spec = {});

/*!
 * Scattering amplitude by direct quadrature of the phase factor against
 * |ψ_n|², axis by axis. Wavevectors per axis are κ_x = 2q_x, κ_y = 2q_y,
 * κ_z = −2q̄_z.
 */
QuadratureResult quadrature_amplitude(ScatteringContext const& ctx,
                                      TrapGeometry const& geom,
                                      OscillatorState const& state,
                                      double theta,
                                      double phi,
                                      QuadratureSpec const& spec = {});

struct SumCaps
{
    unsigned max_quantum{60};  //!< per-axis n ≤ max_quantum
    std::size_t max_states{2'000'000};
    double tail_tolerance{1e-13};  //!< occupation above the cap, relative to N
};

//! Literal triple sum Σ n̄ e^{−Q} Π L_{n_α}(2Q_α) with Laguerre values
//! from the three-term recurrence
complex_type direct_thermal_sum(ScatteringContext const& ctx,
                                TrapGeometry const& geom,
                                EnsembleSpec const& spec,
                                double theta,
                                double phi,
                                SumCaps const& caps = {});

//! Positive roots of L_n by scanning and bracketed refinement
std::vector<double> laguerre_roots(unsigned n);

}  // namespace trapscat::validation
