#include "interplab_tools/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "interplab_tools/acceptance.hpp"

namespace interplab::tools {

namespace {
constexpr std::array<std::pair<Command, std::string_view>, 9> kCommands{{
    {Command::Nodes, "nodes"},
    {Command::Lebesgue, "lebesgue"},
    {Command::Potential, "potential"},
    {Command::TrigVerify, "trig-verify"},
    {Command::Bernstein, "bernstein"},
    {Command::ResidueCheck, "residue-check"},
    {Command::Harmonic, "harmonic"},
    {Command::Optimize, "optimize"},
    {Command::VerifyAll, "verify-all"},
}};

constexpr std::array<std::string_view, 11> kGrids{
    "lebesgue.grid_points_per_gap", "lebesgue.quadrature_order", "trig.trials",        "trig.max_degree",
    "ds.trials",                    "ds.grid",                   "residue.points_per_edge", "residue.area_grid",
    "harmonic.series_order",        "harmonic.poisson_grid",     "optimize.grid_points_per_gap",
};

constexpr std::array<std::string_view, 2> kExtraTolerances{"optimize.certificate_slack", "potential.pderiv_slack"};
}  // namespace

std::string_view to_string(Command command) {
    for (const auto& [c, name] : kCommands) {
        if (c == command) return name;
    }
    return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [c, n] : kCommands) {
        if (n == name) return c;
    }
    return std::nullopt;
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
    const auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

std::size_t RunConfig::grid(const std::string& name, std::size_t fallback) const {
    const auto it = grids.find(name);
    return it == grids.end() ? fallback : static_cast<std::size_t>(it->second);
}

bool is_known_tolerance(std::string_view name) {
    const auto& table = acceptance_tolerances();
    return std::any_of(table.begin(), table.end(), [&](const auto& e) { return e.first == name; }) ||
           std::find(kExtraTolerances.begin(), kExtraTolerances.end(), name) != kExtraTolerances.end();
}

bool is_known_grid(std::string_view name) { return std::find(kGrids.begin(), kGrids.end(), name) != kGrids.end(); }

RunConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
    RunConfig cfg;
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") {
            if (!value.is_string()) throw ConfigError("config: command must be a string");
            const auto c = parse_command(value.get<std::string>());
            if (!c) throw ConfigError("config: unknown command " + value.get<std::string>());
            cfg.command = *c;
        } else if (key == "tolerances") {
            if (!value.is_object()) throw ConfigError("config: tolerances must be an object");
            for (const auto& [name, v] : value.items()) {
                if (!is_known_tolerance(name)) throw ConfigError("config: unknown tolerance " + name);
                if (!v.is_number()) throw ConfigError("config: tolerance " + name + " must be a number");
                const double t = v.get<double>();
                // 0 is accepted and simply makes the check unattainable
                if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("config: tolerance " + name + " must be >= 0");
                cfg.tolerances[name] = t;
            }
        } else if (key == "grids") {
            if (!value.is_object()) throw ConfigError("config: grids must be an object");
            for (const auto& [name, v] : value.items()) {
                if (!is_known_grid(name)) throw ConfigError("config: unknown grid " + name);
                if (!v.is_number_integer() || v.get<std::int64_t>() <= 0)
                    throw ConfigError("config: grid " + name + " must be a positive integer");
                cfg.grids[name] = v.get<std::int64_t>();
            }
        } else if (key == "seed") {
            if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) throw ConfigError("config: seed must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "output_path") {
            if (!value.is_string()) throw ConfigError("config: output_path must be a string");
            cfg.output_path = value.get<std::string>();
        } else {
            throw ConfigError("config: unknown key " + key);
        }
    }
    return cfg;
}

nlohmann::json config_to_json(const RunConfig& config) {
    return {{"command", to_string(config.command)},
            {"tolerances", config.tolerances},
            {"grids", config.grids},
            {"seed", config.seed},
            {"output_path", config.output_path}};
}

}  // namespace interplab::tools
