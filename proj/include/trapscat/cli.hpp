#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trapscat/condensate.hpp"
#include "trapscat/core.hpp"
#include "trapscat/thermal.hpp"

namespace trapscat::cli
{
//---------------------------------------------------------------------------//
// Output table shared by every subcommand
//---------------------------------------------------------------------------//
using Cell = std::variant<double, std::string>;

struct Table
{
    AngularProfile::Metadata meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format
{
    csv,
    json
};

//! `#key=value` header lines then comma-separated rows, numbers as %.17g
void write_csv(Table const& table, std::ostream& os);
//! {"meta": {...}, "columns": [...], "rows": [[...]]}
void write_json(Table const& table, std::ostream& os);
void write_table(Table const& table, Format format, std::ostream& os);

Table to_table(AngularProfile const& profile);

//---------------------------------------------------------------------------//
// Grids
//---------------------------------------------------------------------------//
//! Number or multiple of π: "0.3", "pi", "pi/2", "2pi", "0.5*pi"
double parse_angle(std::string_view text);

struct Grid
{
    double lo{0};
    double hi{0};
    unsigned count{2};

    std::vector<double> values() const;
};

//! "lo:hi:count" with count ≥ 2
Grid parse_grid(std::string_view text);

//---------------------------------------------------------------------------//
// Run configuration
//---------------------------------------------------------------------------//
struct RunConfig
{
    std::string subcommand;
    std::string mode;  //!< condensate: bec | double-well | lattice; xsection profile

    std::optional<double> k_as;
    double mass_ratio{0.1};
    std::optional<double> l;
    std::optional<double> lx, ly, lz;

    std::optional<double> particles;
    std::optional<double> t;
    std::optional<double> t_kelvin;
    std::optional<double> omega;
    std::optional<double> mass_kg;

    // single
    int dim{1};
    unsigned n{5};
    unsigned ny{0};
    unsigned nz{0};

    // thermal
    Statistics statistics{Statistics::boltzmann};
    bool statistics_set{false};
    bool sweep{false};
    std::optional<Grid> t_grid;
    FermiProfileMode fermi_mode{FermiProfileMode::exact};
    FugacityRoute route{FugacityRoute::exact};

    // condensate
    std::optional<double> a_tilde;
    std::optional<double> t_over_tc;
    bool corrections{true};
    std::optional<double> width_scale;
    std::optional<double> spacing;
    std::optional<unsigned> wells;
    CloudCoherence coherence{CloudCoherence::coherent};

    std::optional<Grid> theta_grid;
    double phi{0};
    Format format{Format::csv};
    std::string out;
    std::uint64_t seed{1};
};

Table run_single(RunConfig const& config);
Table run_thermal(RunConfig const& config);
Table run_condensate(RunConfig const& config);
Table run_xsection(RunConfig const& config);
//! Randomized oracle comparisons; the last column flags each check
Table run_validate(RunConfig const& config);

//! Dispatch on the subcommand
Table run(RunConfig const& config);

/*!
 * Full command-line entry point.
 *
 * Returns 0 on success, 2 on an argument error and 3 on a numerical
 * failure (including a failed validation check).
 */
int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trapscat::cli
