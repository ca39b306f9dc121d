#pragma once

#include <array>
#include <optional>
#include <span>

#include "trapscat/core.hpp"

namespace trapscat
{
//---------------------------------------------------------------------------//
/*!
 * Energy eigenstate of a scatterer confined along one, two or three axes.
 *
 * Absent axes carry no quantum number: the scatterer is fixed along them and
 * contributes no form factor there. One-dimensional states oscillate along
 * x, two-dimensional states in the x–y plane.
 */
class OscillatorState
{
  public:
    static OscillatorState one_d(unsigned nx);
    static OscillatorState two_d(unsigned nx, unsigned ny);
    static OscillatorState three_d(unsigned nx, unsigned ny, unsigned nz);

    int dimensionality() const;
    std::optional<unsigned> quantum_number(Axis a) const
    {
        return numbers_[static_cast<int>(a)];
    }

    //! Σ_present (n_α + 1/2) ħω_α in units of ħω
    double energy(TrapGeometry const& geom) const;

    bool operator==(OscillatorState const&) const = default;

  private:
    std::array<std::optional<unsigned>, 3> numbers_;
};

/*!
 * Real form factor e^{−Σ Q_α} Π_α L_{n_α}(2 Q_α) over the state's axes.
 *
 * The scattering amplitude is −a_k times this value, so its sign changes mark
 * the zeros of the differential cross-section.
 */
double form_factor(OscillatorState const& state, MomentumTransfer const& q);

complex_type amplitude_1d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          unsigned nx,
                          double theta,
                          double phi);

complex_type amplitude_2d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          unsigned nx,
                          unsigned ny,
                          double theta,
                          double phi);

complex_type amplitude_3d(ScatteringContext const& ctx,
                          TrapGeometry const& geom,
                          OscillatorState const& state,
                          double theta,
                          double phi);

//! Dispatch on the state's dimensionality
complex_type amplitude(ScatteringContext const& ctx,
                       TrapGeometry const& geom,
                       OscillatorState const& state,
                       double theta,
                       double phi);

//! Coherent sum over scatterers frozen in the listed eigenstates
complex_type amplitude_fixed_configuration(ScatteringContext const& ctx,
                                           TrapGeometry const& geom,
                                           std::span<OscillatorState const> states,
                                           double theta,
                                           double phi);

//! Differential cross-section |f|²
inline double cross_section(complex_type f)
{
    return std::norm(f);
}

//! Number of strict sign changes in a sampled real function (zeros skipped)
int count_sign_changes(std::span<double const> values);

}  // namespace trapscat
