#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trapscat
{
//---------------------------------------------------------------------------//
// Error types shared by every module.
//---------------------------------------------------------------------------//
//! Input outside an operation's domain.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Iterative or quadrature procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

using complex_type = std::complex<double>;

enum class Axis
{
    x = 0,
    y = 1,
    z = 2
};

inline constexpr std::array<Axis, 3> all_axes{Axis::x, Axis::y, Axis::z};

//---------------------------------------------------------------------------//
/*!
 * Incident particle and contact interaction.
 *
 * Lengths are in units of the s-wave scattering length a_s, so the incident
 * wavenumber is stored as the product k a_s. The mass ratio is m/M, incident
 * over scatterer mass.
 */
class ScatteringContext
{
  public:
    ScatteringContext(double k_as, double mass_ratio);

    //! Incident wavenumber in units of 1/a_s
    double k() const { return k_as_; }
    double mass_ratio() const { return mass_ratio_; }

    //! m / reduced mass = 1 + m/M
    double reduced_mass_factor() const { return 1.0 + mass_ratio_; }

    //! Unitarized amplitude scale a_k = (m/μ̄) / (1 + i k m/μ̄), units of a_s
    complex_type a_k() const;

  private:
    double k_as_;
    double mass_ratio_;
};

//---------------------------------------------------------------------------//
/*!
 * Oscillator lengths of a (possibly anisotropic) harmonic trap, in a_s.
 *
 * Level spacings follow from the lengths: ω_α ∝ 1/l_α², so in units of the
 * geometric-mean frequency ω the spacing along α is (l̄/l_α)² with
 * l̄ = (l_x l_y l_z)^{1/3}.
 */
class TrapGeometry
{
  public:
    TrapGeometry(double lx, double ly, double lz);

    static TrapGeometry isotropic(double l) { return {l, l, l}; }

    double length(Axis a) const { return lengths_[static_cast<int>(a)]; }
    std::array<double, 3> const& lengths() const { return lengths_; }

    //! Geometric-mean oscillator length l̄
    double mean_length() const;

    //! Level spacing ħω_α in units of ħω (geometric mean)
    double level_spacing(Axis a) const;

    bool is_isotropic() const;

    //! Same trap with every length multiplied by a scale factor
    TrapGeometry scaled(double factor) const;

  private:
    std::array<double, 3> lengths_;
};

//---------------------------------------------------------------------------//
/*!
 * Momentum transfer for incidence along +z scattered into (θ, φ).
 *
 * q_x, q_y are half the transverse outgoing components; the longitudinal
 * component q̄_z = −k sin²(θ/2) is the obliquity factor. The per-axis
 * products Q_α = q_α² l_α² enter every form factor.
 */
struct MomentumTransfer
{
    double qx{0};
    double qy{0};
    double qz_bar{0};
    std::array<double, 3> scaled_squares{0, 0, 0};

    double scaled_square(Axis a) const
    {
        return scaled_squares[static_cast<int>(a)];
    }

    //! ‖q̄·l‖² = Σ_α q_α² l_α²
    double quadratic_form() const
    {
        return scaled_squares[0] + scaled_squares[1] + scaled_squares[2];
    }
};

MomentumTransfer
momentum_transfer(double k, double theta, double phi, TrapGeometry const& geom);

//! Amplitude of a fixed point scatterer, −a_k (isotropic)
complex_type fixed_scatterer_amplitude(ScatteringContext const& ctx);

//! Relative violation of the optical theorem for the fixed-scatterer amplitude
double optical_theorem_residual(ScatteringContext const& ctx);

//---------------------------------------------------------------------------//
/*!
 * Differential cross-section sampled on an angular grid.
 */
struct ProfileEntry
{
    double theta;
    double phi;
    double value;
};

class AngularProfile
{
  public:
    using Metadata = std::vector<std::pair<std::string, std::string>>;

    //! Append a sample; θ must increase within a run of equal φ
    void append(double theta, double phi, double value);

    void add_metadata(std::string key, std::string value);

    std::vector<ProfileEntry> const& entries() const { return entries_; }
    Metadata const& metadata() const { return metadata_; }

  private:
    std::vector<ProfileEntry> entries_;
    Metadata metadata_;
};

//---------------------------------------------------------------------------//
// SI bridge
//---------------------------------------------------------------------------//
namespace si
{
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J / K

//! Oscillator length sqrt(ħ / M ω) in metres
double oscillator_length(double omega, double mass_kg);

//! Angular frequency ħ / (M l²) reproducing an oscillator length in metres
double frequency_from_length(double length_m, double mass_kg);

//! Dimensionless temperature t = k_B T / ħ ω
double reduced_temperature(double kelvin, double omega);
}  // namespace si

}  // namespace trapscat
