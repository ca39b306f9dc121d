#include "trapscat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trapscat/oracle.hpp"
#include "trapscat/single.hpp"
#include "trapscat/specfun.hpp"

namespace trapscat::cli
{
namespace
{
constexpr double pi = std::numbers::pi;
constexpr char const* version_tag = "trapscat 1.0.0";

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class ArgumentError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

TrapGeometry geometry(RunConfig const& c)
{
    double base = c.l.value_or(1.0);
    return {c.lx.value_or(base), c.ly.value_or(base), c.lz.value_or(base)};
}

void add_common_meta(Table& table, RunConfig const& c, double k_as, TrapGeometry const& geom)
{
    table.meta.emplace_back("generator", version_tag);
    table.meta.emplace_back("subcommand", c.subcommand);
    if (!c.mode.empty())
        table.meta.emplace_back("mode", c.mode);
    table.meta.emplace_back("k_as", num(k_as));
    table.meta.emplace_back("m_over_M", num(c.mass_ratio));
    table.meta.emplace_back("lx", num(geom.length(Axis::x)));
    table.meta.emplace_back("ly", num(geom.length(Axis::y)));
    table.meta.emplace_back("lz", num(geom.length(Axis::z)));
}

std::vector<double> theta_values(RunConfig const& c)
{
    return c.theta_grid.value_or(Grid{0, pi, 721}).values();
}

void add_grid_meta(Table& table, RunConfig const& c)
{
    auto g = c.theta_grid.value_or(Grid{0, pi, 721});
    table.meta.emplace_back("theta_grid",
                            num(g.lo) + ":" + num(g.hi) + ":" + std::to_string(g.count));
    table.meta.emplace_back("phi", num(c.phi));
}

// Dimensionless temperature from --t or the SI bridge
std::optional<double> resolve_temperature(RunConfig const& c, Table& table)
{
    if (c.t)
        return c.t;
    if (!c.t_kelvin)
        return std::nullopt;
    double omega = c.omega.value_or(1000.0);
    double t = si::reduced_temperature(*c.t_kelvin, omega);
    table.meta.emplace_back("T_kelvin", num(*c.t_kelvin));
    table.meta.emplace_back("omega", num(omega));
    if (c.mass_kg)
    {
        table.meta.emplace_back("mass_kg", num(*c.mass_kg));
        table.meta.emplace_back("l_metres", num(si::oscillator_length(omega, *c.mass_kg)));
    }
    return t;
}

std::vector<Cell> profile_row(double theta, double phi, double d)
{
    return {theta, phi, d};
}

//---------------------------------------------------------------------------//
// Thermal helpers
//---------------------------------------------------------------------------//
double thermal_profile_value(ScatteringContext const& ctx,
                             TrapGeometry const& geom,
                             Statistics stats,
                             double particles,
                             double t,
                             EnsembleSpec const* spec,
                             FermiProfileMode fermi_mode,
                             double theta,
                             double phi)
{
    if (t == 0)
    {
        if (stats == Statistics::fermi)
        {
            return fermi_ground_profile(
                ctx, geom, static_cast<std::size_t>(particles), theta, phi, fermi_mode);
        }
        return bec_ground_profile(ctx, geom, particles, theta, phi);
    }
    return std::norm(thermal_amplitude_fast(ctx, geom, *spec, theta, phi).value);
}

double relative_error(complex_type a, complex_type b, double floor)
{
    return std::abs(a - b) / std::max(std::abs(b), floor);
}

}  // namespace

//---------------------------------------------------------------------------//
// Output
//---------------------------------------------------------------------------//
void write_csv(Table const& table, std::ostream& os)
{
    for (auto const& [key, value] : table.meta)
        os << '#' << key << '=' << value << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (auto const& row : table.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                os << ',';
            if (auto const* d = std::get_if<double>(&row[i]))
                os << num(*d);
            else
                os << std::get<std::string>(row[i]);
        }
        os << '\n';
    }
}

void write_json(Table const& table, std::ostream& os)
{
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (auto const& [key, value] : table.meta)
        doc["meta"][key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (auto const& row : table.rows)
    {
        auto cells = nlohmann::ordered_json::array();
        for (auto const& cell : row)
        {
            if (auto const* d = std::get_if<double>(&cell))
                cells.push_back(*d);
            else
                cells.push_back(std::get<std::string>(cell));
        }
        doc["rows"].push_back(std::move(cells));
    }
    os << doc.dump(1) << '\n';
}

void write_table(Table const& table, Format format, std::ostream& os)
{
    if (format == Format::json)
        write_json(table, os);
    else
        write_csv(table, os);
}

Table to_table(AngularProfile const& profile)
{
    Table table;
    table.meta = profile.metadata();
    table.columns = {"theta", "phi", "D"};
    for (auto const& e : profile.entries())
        table.rows.push_back(profile_row(e.theta, e.phi, e.value));
    return table;
}

//---------------------------------------------------------------------------//
// Grids
//---------------------------------------------------------------------------//
double parse_angle(std::string_view text)
{
    std::string s(text);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    auto parse_number = [&](std::string const& part) {
        std::size_t used = 0;
        double value = 0;
        try
        {
            value = std::stod(part, &used);
        }
        catch (std::exception const&)
        {
            throw ArgumentError("cannot parse angle '" + std::string(text) + "'");
        }
        if (used != part.size())
            throw ArgumentError("cannot parse angle '" + std::string(text) + "'");
        return value;
    };

    auto pos = s.find("pi");
    if (pos == std::string::npos)
        return parse_number(s);

    std::string head = s.substr(0, pos);
    std::string tail = s.substr(pos + 2);
    if (!head.empty() && head.back() == '*')
        head.pop_back();
    double factor = 1;
    if (head == "-")
        factor = -1;
    else if (!head.empty())
        factor = parse_number(head);
    double divisor = 1;
    if (!tail.empty())
    {
        if (tail.front() != '/')
            throw ArgumentError("cannot parse angle '" + std::string(text) + "'");
        divisor = parse_number(tail.substr(1));
    }
    return factor * pi / divisor;
}

std::vector<double> Grid::values() const
{
    std::vector<double> v(count);
    for (unsigned i = 0; i < count; ++i)
        v[i] = (i + 1 == count) ? hi : lo + (hi - lo) * i / (count - 1);
    return v;
}

Grid parse_grid(std::string_view text)
{
    auto first = text.find(':');
    auto second = text.find(':', first == std::string_view::npos ? first : first + 1);
    if (first == std::string_view::npos || second == std::string_view::npos)
        throw ArgumentError("grid must be lo:hi:count");
    Grid g;
    g.lo = parse_angle(text.substr(0, first));
    g.hi = parse_angle(text.substr(first + 1, second - first - 1));
    std::string count(text.substr(second + 1));
    long n = 0;
    try
    {
        std::size_t used = 0;
        n = std::stol(count, &used);
        if (used != count.size())
            throw ArgumentError("bad grid count");
    }
    catch (std::exception const&)
    {
        throw ArgumentError("grid count must be an integer");
    }
    if (n < 2)
        throw ArgumentError("grid count must be at least 2");
    if (!(g.hi > g.lo))
        throw ArgumentError("grid upper bound must exceed the lower bound");
    g.count = static_cast<unsigned>(n);
    return g;
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//
Table run_single(RunConfig const& c)
{
    double k_as = c.k_as.value_or(5.0);
    ScatteringContext ctx(k_as, c.mass_ratio);
    auto geom = geometry(c);

    OscillatorState state = OscillatorState::one_d(c.n);
    if (c.dim == 2)
        state = OscillatorState::two_d(c.n, c.ny);
    else if (c.dim == 3)
        state = OscillatorState::three_d(c.n, c.ny, c.nz);
    else if (c.dim != 1)
        throw ArgumentError("--dim must be 1, 2 or 3");

    AngularProfile profile;
    for (double theta : theta_values(c))
        profile.append(theta, c.phi, cross_section(amplitude(ctx, geom, state, theta, c.phi)));

    Table table = to_table(profile);
    add_common_meta(table, c, k_as, geom);
    table.meta.emplace_back("dim", std::to_string(c.dim));
    table.meta.emplace_back("nx", std::to_string(c.n));
    if (c.dim >= 2)
        table.meta.emplace_back("ny", std::to_string(c.ny));
    if (c.dim == 3)
        table.meta.emplace_back("nz", std::to_string(c.nz));
    add_grid_meta(table, c);
    return table;
}

Table run_thermal(RunConfig const& c)
{
    double k_as = c.k_as.value_or(2.0);
    ScatteringContext ctx(k_as, c.mass_ratio);
    auto geom = geometry(c);
    Table table;
    add_common_meta(table, c, k_as, geom);

    if (c.sweep)
    {
        Statistics stats = c.statistics_set ? c.statistics : Statistics::bose;
        double particles = c.particles.value_or(1e4);
        Grid grid = c.t_grid.value_or(Grid{0.5, 40, 80});
        double t_c = critical_temperature(particles);
        table.meta.emplace_back("statistics", std::string(to_string(stats)));
        table.meta.emplace_back("N", num(particles));
        table.meta.emplace_back("route",
                                c.route == FugacityRoute::exact ? "exact" : "thermodynamic_limit");
        table.meta.emplace_back("t_grid",
                                num(grid.lo) + ":" + num(grid.hi) + ":"
                                    + std::to_string(grid.count));
        table.meta.emplace_back("t_c", num(t_c));
        table.meta.emplace_back("phi", num(c.phi));
        table.columns = {"t", "t_over_tc", "D_theta0", "D_theta90", "D_theta180"};
        for (double t : grid.values())
        {
            if (t < 0)
                throw ArgumentError("temperatures must be non-negative");
            std::optional<EnsembleSpec> spec;
            if (t > 0)
                spec = solve_fugacity(stats, particles, t, geom, c.route);
            std::vector<Cell> row{t, t / t_c};
            for (double theta : {0.0, pi / 2, pi})
            {
                row.emplace_back(thermal_profile_value(ctx,
                                                       geom,
                                                       stats,
                                                       particles,
                                                       t,
                                                       spec ? &*spec : nullptr,
                                                       c.fermi_mode,
                                                       theta,
                                                       c.phi));
            }
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    Statistics stats = c.statistics_set ? c.statistics : Statistics::boltzmann;
    double particles = c.particles.value_or(1.0);
    RunConfig bridged = c;
    if (!c.t && !c.t_kelvin)
        bridged.t_kelvin = 1e-7;
    double t = *resolve_temperature(bridged, table);
    if (t < 0)
        throw ArgumentError("temperature must be non-negative");
    table.meta.emplace_back("statistics", std::string(to_string(stats)));
    table.meta.emplace_back("N", num(particles));
    table.meta.emplace_back("t", num(t));
    if (stats == Statistics::fermi && t == 0)
        table.meta.emplace_back("fermi_mode",
                                c.fermi_mode == FermiProfileMode::exact ? "exact" : "approx");
    add_grid_meta(table, c);

    std::optional<EnsembleSpec> spec;
    if (t > 0)
    {
        spec = solve_fugacity(stats, particles, t, geom, c.route);
        table.meta.emplace_back("log_fugacity", num(spec->log_fugacity));
    }
    AngularProfile profile;
    for (double theta : theta_values(c))
    {
        profile.append(theta,
                       c.phi,
                       thermal_profile_value(ctx,
                                             geom,
                                             stats,
                                             particles,
                                             t,
                                             spec ? &*spec : nullptr,
                                             c.fermi_mode,
                                             theta,
                                             c.phi));
    }
    Table data = to_table(profile);
    table.columns = data.columns;
    table.rows = std::move(data.rows);
    return table;
}

Table run_condensate(RunConfig const& c)
{
    std::string mode = c.mode.empty() ? "bec" : c.mode;
    if (mode != "bec" && mode != "double-well" && mode != "lattice")
        throw ArgumentError("condensate mode must be bec, double-well or lattice");

    double k_as = c.k_as.value_or(2.0);
    ScatteringContext ctx(k_as, c.mass_ratio);
    auto geom = geometry(c);
    double particles = c.particles.value_or(1e4);
    double a_tilde = c.a_tilde.value_or(0.0056);
    double t_c = critical_temperature(particles);
    double t = c.t ? *c.t : c.t_over_tc.value_or(0.1) * t_c;
    if (t < 0)
        throw ArgumentError("temperature must be non-negative");

    ArrayGeometry array;
    array.wells = mode == "bec" ? 1u : mode == "double-well" ? 2u : c.wells.value_or(10u);
    array.spacing = c.spacing.value_or(10.0);
    if (mode == "double-well" && c.wells && *c.wells != 2)
        throw ArgumentError("double-well has exactly two wells");

    CondensateOptions options;
    options.corrections = c.corrections;
    options.width_scale = c.width_scale;
    auto state = prepare_condensate(geom, particles, t, a_tilde, options);

    Table table;
    RunConfig labelled = c;
    labelled.mode = mode;
    add_common_meta(table, labelled, k_as, geom);
    table.meta.emplace_back("N", num(particles));
    table.meta.emplace_back("a_tilde", num(a_tilde));
    table.meta.emplace_back("t", num(t));
    table.meta.emplace_back("t_c", num(t_c));
    table.meta.emplace_back("t_over_tc", num(t / t_c));
    table.meta.emplace_back("corrections", c.corrections ? "on" : "off");
    table.meta.emplace_back("N0", num(state.condensate));
    table.meta.emplace_back("width_scale", num(state.width_scale));
    if (mode != "bec")
    {
        table.meta.emplace_back("wells", std::to_string(array.wells));
        table.meta.emplace_back("d", num(array.spacing));
        table.meta.emplace_back("cloud",
                                c.coherence == CloudCoherence::coherent ? "coherent"
                                                                        : "incoherent");
        table.meta.emplace_back("array_plane", "sin(theta) as printed; plane containing x");
        if (!array.tight_binding_valid(geom))
            table.meta.emplace_back("warning", "d < 5 l_x: tight binding questionable");
    }
    add_grid_meta(table, c);

    bool plain = (t == 0 && a_tilde == 0 && !c.width_scale);
    table.columns = {"theta", "phi", "D"};
    AngularProfile profile;
    for (double theta : theta_values(c))
    {
        double d;
        if (mode != "bec" && c.coherence == CloudCoherence::incoherent)
        {
            d = array_profile_finite_T(ctx, geom, state, array, theta, c.phi, c.coherence);
        }
        else
        {
            double single = plain
                                ? bec_ground_profile(ctx, geom, particles, theta, c.phi)
                                : std::norm(below_tc_amplitude(ctx, geom, state, theta, c.phi));
            d = mode == "bec" ? single
                              : array_factor(array.wells, array.spacing, k_as, theta) * single;
        }
        profile.append(theta, c.phi, d);
    }
    table.rows = to_table(profile).rows;
    return table;
}

Table run_xsection(RunConfig const& c)
{
    std::string mode = c.mode.empty() ? "bec" : c.mode;
    double k_as = c.k_as.value_or(1e-4);
    ScatteringContext ctx(k_as, c.mass_ratio);
    auto geom = geometry(c);
    double particles = c.particles.value_or(1.0);

    std::function<double(double, double)> profile;
    if (mode == "bec")
    {
        profile = [&](double th, double ph) {
            return bec_ground_profile(ctx, geom, particles, th, ph);
        };
    }
    else if (mode == "double-well" || mode == "lattice")
    {
        ArrayGeometry array{mode == "double-well" ? 2u : c.wells.value_or(10u),
                            c.spacing.value_or(10.0)};
        profile = [&ctx, &geom, particles, array](double th, double ph) {
            return lattice_profile(ctx, geom, particles, array, th, ph);
        };
    }
    else
    {
        throw ArgumentError("xsection profile must be bec, double-well or lattice");
    }
    auto sigma = integrate_cross_section(profile);

    Table table;
    RunConfig labelled = c;
    labelled.mode = mode;
    add_common_meta(table, labelled, k_as, geom);
    table.meta.emplace_back("N", num(particles));
    if (mode != "bec")
    {
        table.meta.emplace_back("wells", std::to_string(mode == "double-well" ? 2u : c.wells.value_or(10u)));
        table.meta.emplace_back("d", num(c.spacing.value_or(10.0)));
    }
    table.meta.emplace_back("units", "a_s^2");
    table.columns = {"sigma", "error", "sigma_k0"};
    double wells = mode == "bec" ? 1 : mode == "double-well" ? 2 : c.wells.value_or(10u);
    table.rows.push_back({sigma.value, sigma.error, low_energy_cross_section(ctx, wells * particles)});
    return table;
}

Table run_validate(RunConfig const& c)
{
    std::mt19937_64 rng(c.seed);
    auto uniform = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    auto integer = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    Table table;
    table.meta.emplace_back("generator", version_tag);
    table.meta.emplace_back("subcommand", "validate");
    table.meta.emplace_back("seed", std::to_string(c.seed));
    table.columns = {"check", "cases", "max_error", "tolerance", "passed"};
    auto add = [&](std::string name, int cases, double worst, double tol) {
        table.rows.push_back(
            {std::move(name), double(cases), worst, tol, std::string(worst <= tol ? "yes" : "no")});
    };

    {
        double worst = 0;
        int const cases = 40;
        for (int i = 0; i < cases; ++i)
        {
            ScatteringContext ctx(uniform(0.5, 6), uniform(0.01, 1));
            TrapGeometry geom(uniform(0.5, 2), uniform(0.5, 2), uniform(0.5, 2));
            auto state = OscillatorState::three_d(integer(0, 8), integer(0, 8), integer(0, 8));
            double theta = uniform(0, pi);
            double phi = uniform(0, 2 * pi);
            auto closed = amplitude(ctx, geom, state, theta, phi);
            auto quad = validation::quadrature_amplitude(ctx, geom, state, theta, phi);
            // 1e-12 absolute floor expressed through the relative tolerance
            worst = std::max(worst, relative_error(closed, quad.value, 1e-12 / 1e-8));
        }
        add("closed_form_vs_quadrature", cases, worst, 1e-8);
    }

    double worst_fast = 0;
    double worst_number = 0;
    int const thermal_cases = 20;
    for (int i = 0; i < thermal_cases; ++i)
    {
        auto stats = static_cast<Statistics>(integer(0, 2));
        double t = uniform(0.2, 20);
        double particles = std::round(uniform(1, 2000));
        auto geom = TrapGeometry::isotropic(1);
        auto spec = solve_fugacity(stats, particles, t, geom);
        worst_number = std::max(worst_number,
                                std::abs(particle_number(spec, geom) - particles) / particles);
        // keep Q coth(1/2t) ≤ 6 so the sum is not lost to cancellation
        double q_target = uniform(0, 6) * std::tanh(0.5 / t);
        double theta = uniform(0.2, pi);
        double k = std::sqrt(q_target) / std::sin(theta / 2);
        ScatteringContext ctx(k, 0.1);
        double phi = uniform(0, 2 * pi);
        auto direct = thermal_amplitude_direct(ctx, geom, spec, theta, phi);
        auto fast = thermal_amplitude_fast(ctx, geom, spec, theta, phi).value;
        worst_fast = std::max(worst_fast, relative_error(fast, direct, 1e-300));
    }
    add("fast_vs_direct_thermal", thermal_cases, worst_fast, 1e-9);
    add("number_sum_rule", thermal_cases, worst_number, 1e-9);

    {
        double worst = 0;
        int const cases = 10;
        for (int i = 0; i < cases; ++i)
        {
            auto stats = static_cast<Statistics>(integer(0, 2));
            double t = uniform(0.2, 2);
            auto geom = TrapGeometry::isotropic(1);
            auto spec = solve_fugacity(stats, std::round(uniform(1, 50)), t, geom);
            ScatteringContext ctx(uniform(0.2, 3), 0.1);
            double theta = uniform(0, pi);
            double phi = uniform(0, 2 * pi);
            validation::SumCaps caps;
            caps.max_quantum = static_cast<unsigned>(std::ceil(45 * t)) + 10;
            auto literal = validation::direct_thermal_sum(ctx, geom, spec, theta, phi, caps);
            auto shells = thermal_amplitude_direct(ctx, geom, spec, theta, phi);
            worst = std::max(worst, relative_error(shells, literal, 1e-300));
        }
        add("shell_sum_vs_literal_sum", cases, worst, 1e-10);
    }

    {
        double worst = 0;
        for (unsigned n = 1; n <= 12; ++n)
        {
            auto roots = validation::laguerre_roots(n);
            if (roots.size() != n)
                worst = std::max(worst, 1.0);
            // Newton step L_n / L_n' with L_n'(r) = −n L_{n−1}(r) / r at a root
            for (double r : roots)
            {
                double step = laguerre(n, r) * r / (n * laguerre(n - 1, r));
                worst = std::max(worst, std::abs(step) / r);
            }
        }
        add("laguerre_roots", 12, worst, 1e-12);
    }
    return table;
}

Table run(RunConfig const& config)
{
    if (config.subcommand == "single")
        return run_single(config);
    if (config.subcommand == "thermal")
        return run_thermal(config);
    if (config.subcommand == "condensate")
        return run_condensate(config);
    if (config.subcommand == "xsection")
        return run_xsection(config);
    if (config.subcommand == "validate")
        return run_validate(config);
    throw ArgumentError("unknown subcommand '" + config.subcommand + "'");
}

//---------------------------------------------------------------------------//
// Command line
//---------------------------------------------------------------------------//
int main_entry(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Scattering by harmonically trapped quantum scatterers"};
    app.require_subcommand(1);
    RunConfig c;

    std::string theta_grid, t_grid, format = "csv", statistics, fermi_mode = "exact";
    std::string route = "exact", corrections = "on", cloud = "coherent", phi = "0";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--k-as", c.k_as, "incident wavenumber times a_s");
        sub->add_option("--m-over-M", c.mass_ratio, "incident over scatterer mass")
            ->check(CLI::PositiveNumber);
        sub->add_option("--l", c.l, "isotropic oscillator length (a_s)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--lx", c.lx, "oscillator length along x")->check(CLI::PositiveNumber);
        sub->add_option("--ly", c.ly, "oscillator length along y")->check(CLI::PositiveNumber);
        sub->add_option("--lz", c.lz, "oscillator length along z")->check(CLI::PositiveNumber);
        sub->add_option("--theta-grid", theta_grid, "lo:hi:count, pi allowed");
        sub->add_option("--phi", phi, "azimuth (radians, pi allowed)");
        sub->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--seed", c.seed, "seed for randomized validation");
    };
    auto many = [&](CLI::App* sub) {
        sub->add_option("--N", c.particles, "number of scatterers")->check(CLI::PositiveNumber);
        sub->add_option("--t", c.t, "k_B T / hbar omega")->check(CLI::NonNegativeNumber);
        sub->add_option("--T-kelvin", c.t_kelvin, "temperature (K)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--omega", c.omega, "trap angular frequency (rad/s)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--mass-kg", c.mass_kg, "scatterer mass (kg)")
            ->check(CLI::PositiveNumber);
    };

    auto* single = app.add_subcommand("single", "single trapped scatterer in one eigenstate");
    common(single);
    single->add_option("--dim", c.dim, "1, 2 or 3")->check(CLI::Range(1, 3));
    single->add_option("--n", c.n, "n_x");
    single->add_option("--ny", c.ny, "n_y (dim >= 2)");
    single->add_option("--nz", c.nz, "n_z (dim 3)");

    auto* thermal = app.add_subcommand("thermal", "thermal ensembles in an isotropic trap");
    common(thermal);
    many(thermal);
    thermal->add_option("--statistics", statistics, "bose, fermi or boltzmann")
        ->check(CLI::IsMember({"bose", "fermi", "boltzmann"}));
    thermal->add_flag("--sweep", c.sweep, "D(t) at theta = 0, pi/2, pi");
    thermal->add_option("--t-grid", t_grid, "lo:hi:count for --sweep");
    thermal->add_option("--fermi-mode", fermi_mode, "exact or approx at t = 0")
        ->check(CLI::IsMember({"exact", "approx"}));
    thermal->add_option("--route", route, "exact or thermodynamic")
        ->check(CLI::IsMember({"exact", "thermodynamic"}));

    auto* condensate = app.add_subcommand("condensate", "condensates in harmonic and array traps");
    common(condensate);
    many(condensate);
    condensate->add_option("mode", c.mode, "bec, double-well or lattice")
        ->check(CLI::IsMember({"bec", "double-well", "lattice"}));
    condensate->add_option("--a-tilde", c.a_tilde, "inter-scatterer length (units of l)")
        ->check(CLI::NonNegativeNumber);
    condensate->add_option("--t-over-tc", c.t_over_tc, "temperature relative to T_c")
        ->check(CLI::NonNegativeNumber);
    condensate->add_option("--corrections", corrections, "finite-size and interaction terms")
        ->check(CLI::IsMember({"on", "off"}));
    condensate->add_option("--width-scale", c.width_scale, "override for l~/l");
    condensate->add_option("--d", c.spacing, "well spacing (a_s)")
        ->check(CLI::NonNegativeNumber);
    condensate->add_option("--wells", c.wells, "number of wells")->check(CLI::PositiveNumber);
    condensate->add_option("--cloud", cloud, "thermal cloud across wells")
        ->check(CLI::IsMember({"coherent", "incoherent"}));

    auto* xsection = app.add_subcommand("xsection", "total cross-section of a condensate profile");
    common(xsection);
    xsection->add_option("--N", c.particles, "atoms per condensate")->check(CLI::PositiveNumber);
    xsection->add_option("--profile", c.mode, "bec, double-well or lattice")
        ->check(CLI::IsMember({"bec", "double-well", "lattice"}));
    xsection->add_option("--d", c.spacing, "well spacing (a_s)")
        ->check(CLI::NonNegativeNumber);
    xsection->add_option("--wells", c.wells, "number of wells")->check(CLI::PositiveNumber);

    auto* validate = app.add_subcommand("validate", "randomized oracle comparisons");
    common(validate);

    try
    {
        std::vector<std::string> args(argv + 1, argv + argc);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return 0;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try
    {
        for (auto* sub : app.get_subcommands())
            c.subcommand = sub->get_name();
        if (!theta_grid.empty())
            c.theta_grid = parse_grid(theta_grid);
        if (!t_grid.empty())
        {
            auto g = parse_grid(t_grid);
            if (g.lo < 0)
                throw ArgumentError("t-grid must be non-negative");
            c.t_grid = g;
        }
        c.phi = parse_angle(phi);
        c.format = format == "json" ? Format::json : Format::csv;
        if (!statistics.empty())
        {
            c.statistics_set = true;
            c.statistics = statistics == "bose"    ? Statistics::bose
                           : statistics == "fermi" ? Statistics::fermi
                                                   : Statistics::boltzmann;
        }
        c.fermi_mode = fermi_mode == "approx" ? FermiProfileMode::approx : FermiProfileMode::exact;
        c.route = route == "exact" ? FugacityRoute::exact : FugacityRoute::thermodynamic_limit;
        c.corrections = corrections == "on";
        c.coherence = cloud == "incoherent" ? CloudCoherence::incoherent
                                            : CloudCoherence::coherent;
        if (c.t && c.t_kelvin)
            throw ArgumentError("give either --t or --T-kelvin, not both");
        if (c.t && c.t_over_tc)
            throw ArgumentError("give either --t or --t-over-tc, not both");

        Table table = run(c);
        std::ostringstream buffer;
        write_table(table, c.format, buffer);
        if (c.out.empty())
        {
            out << buffer.str();
        }
        else
        {
            std::ofstream file(c.out, std::ios::binary);
            if (!file)
                throw ArgumentError("cannot open output file '" + c.out + "'");
            file << buffer.str();
        }

        if (c.subcommand == "validate")
        {
            for (auto const& row : table.rows)
            {
                if (std::get<std::string>(row.back()) != "yes")
                {
                    err << "validation failed: " << std::get<std::string>(row.front()) << '\n';
                    return 3;
                }
            }
        }
        return 0;
    }
    catch (ArgumentError const& e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (DomainError const& e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    catch (std::exception const& e)
    {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace trapscat::cli
