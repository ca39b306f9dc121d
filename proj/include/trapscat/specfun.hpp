#pragma once

#include <numbers>
#include <vector>

#include "trapscat/core.hpp"

namespace trapscat
{
//! ζ(2) = π²/6
inline constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6;
//! ζ(3), Apéry's constant
inline constexpr double zeta3 = 1.2020569031595943;

//! Riemann zeta at integer argument s ≥ 2
double zeta(int s);

//---------------------------------------------------------------------------//
// Orthogonal polynomials
//---------------------------------------------------------------------------//
//! Laguerre polynomial L_n(x) by three-term recurrence
double laguerre(unsigned n, double x);

/*!
 * Scaled Laguerre sequence e^{-x/2} L_m(x) for m = 0..n_max.
 *
 * The scaled values are bounded by one in magnitude for x ≥ 0, so the
 * sequence never overflows regardless of degree or argument.
 */
std::vector<double> scaled_laguerre_sequence(unsigned n_max, double x);

//! Physicists' Hermite polynomial H_n(x); throws std::overflow_error
double hermite(unsigned n, double x);

/*!
 * Normalized Hermite function h_n(x) = H_n(x) e^{-x²/2} / sqrt(2^n n! √π).
 *
 * Evaluated by the normalized upward recurrence, stable well past the
 * degree where H_n itself overflows.
 */
double hermite_function(unsigned n, double x);

//! Oscillator eigenfunction ψ_n(x₀) for oscillator length l
double oscillator_eigenfunction(unsigned n, double x0, double l);

//---------------------------------------------------------------------------//
// Polylogarithms
//---------------------------------------------------------------------------//
enum class PolylogKind
{
    bose,  //!< Li_j(z), 0 ≤ z ≤ 1
    fermi  //!< −Li_j(−z), z ≥ 0
};

double polylog(int j, double z, PolylogKind kind);

//! Complete Fermi–Dirac integral (1/Γ(j)) ∫ x^{j−1} / (e^x/z + 1) dx
double fermi_dirac_integral(int j, double z);

//! Σ_n s^n L_n(x) = exp(−x s/(1−s)) / (1−s), for 0 ≤ s < 1
double laguerre_sum_geometric(double s, double x);

}  // namespace trapscat
