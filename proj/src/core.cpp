#include "trapscat/core.hpp"

#include <cmath>
#include <numbers>

namespace trapscat
{
//---------------------------------------------------------------------------//
ScatteringContext::ScatteringContext(double k_as, double mass_ratio)
    : k_as_(k_as), mass_ratio_(mass_ratio)
{
    if (!(k_as >= 0) || !std::isfinite(k_as))
        throw DomainError("k a_s must be finite and non-negative");
    if (!(mass_ratio > 0) || !std::isfinite(mass_ratio))
        throw DomainError("mass ratio m/M must be finite and positive");
}

complex_type ScatteringContext::a_k() const
{
    double const scale = reduced_mass_factor();
    return scale / complex_type(1.0, k_as_ * scale);
}

//---------------------------------------------------------------------------//
TrapGeometry::TrapGeometry(double lx, double ly, double lz)
    : lengths_{lx, ly, lz}
{
    for (double l : lengths_)
    {
        if (!(l > 0) || !std::isfinite(l))
            throw DomainError("oscillator lengths must be finite and positive");
    }
}

double TrapGeometry::mean_length() const
{
    return std::cbrt(lengths_[0] * lengths_[1] * lengths_[2]);
}

double TrapGeometry::level_spacing(Axis a) const
{
    double const ratio = this->mean_length() / this->length(a);
    return ratio * ratio;
}

bool TrapGeometry::is_isotropic() const
{
    return lengths_[0] == lengths_[1] && lengths_[1] == lengths_[2];
}

TrapGeometry TrapGeometry::scaled(double factor) const
{
    return {lengths_[0] * factor, lengths_[1] * factor, lengths_[2] * factor};
}

//---------------------------------------------------------------------------//
MomentumTransfer
momentum_transfer(double k, double theta, double phi, TrapGeometry const& geom)
{
    if (!(k >= 0))
        throw DomainError("wavenumber must be non-negative");
    if (!(theta >= 0 && theta <= std::numbers::pi))
        throw DomainError("scattering angle theta must lie in [0, pi]");

    double const half_sin = std::sin(theta / 2);
    MomentumTransfer q;
    q.qx = k * std::sin(theta) * std::cos(phi) / 2;
    q.qy = k * std::sin(theta) * std::sin(phi) / 2;
    q.qz_bar = -k * half_sin * half_sin;

    std::array<double, 3> const comp{q.qx, q.qy, q.qz_bar};
    for (Axis a : all_axes)
    {
        auto i = static_cast<int>(a);
        double const ql = comp[i] * geom.length(a);
        q.scaled_squares[i] = ql * ql;
    }
    return q;
}

complex_type fixed_scatterer_amplitude(ScatteringContext const& ctx)
{
    return -ctx.a_k();
}

double optical_theorem_residual(ScatteringContext const& ctx)
{
    if (!(ctx.k() > 0))
        throw DomainError("optical theorem check needs k > 0");
    complex_type const f = fixed_scatterer_amplitude(ctx);
    double const total = 4 * std::numbers::pi * std::norm(f);
    double const forward = 4 * std::numbers::pi / ctx.k() * f.imag();
    return std::fabs(total - forward) / total;
}

//---------------------------------------------------------------------------//
void AngularProfile::append(double theta, double phi, double value)
{
    if (!(value >= 0))
        throw DomainError("differential cross-section must be non-negative");
    if (!entries_.empty() && entries_.back().phi == phi
        && !(theta > entries_.back().theta))
    {
        throw DomainError("theta must increase within a fixed-phi scan");
    }
    entries_.push_back({theta, phi, value});
}

void AngularProfile::add_metadata(std::string key, std::string value)
{
    metadata_.emplace_back(std::move(key), std::move(value));
}

//---------------------------------------------------------------------------//
namespace si
{
double oscillator_length(double omega, double mass_kg)
{
    if (!(omega > 0) || !(mass_kg > 0))
        throw DomainError("frequency and mass must be positive");
    return std::sqrt(hbar / (mass_kg * omega));
}

double frequency_from_length(double length_m, double mass_kg)
{
    if (!(length_m > 0) || !(mass_kg > 0))
        throw DomainError("length and mass must be positive");
    return hbar / (mass_kg * length_m * length_m);
}

double reduced_temperature(double kelvin, double omega)
{
    if (!(kelvin >= 0) || !(omega > 0))
        throw DomainError("temperature must be >= 0 and frequency > 0");
    return k_boltzmann * kelvin / (hbar * omega);
}
}  // namespace si

}  // namespace trapscat
