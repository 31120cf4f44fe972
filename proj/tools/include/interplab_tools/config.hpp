#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace interplab::tools {

enum class Command { Nodes, Lebesgue, Potential, TrigVerify, Bernstein, ResidueCheck, Harmonic, Optimize, VerifyAll };

std::string_view to_string(Command command);
std::optional<Command> parse_command(std::string_view name);

/// Settings shared by every subcommand; also the schema of --config files.
struct RunConfig {
    Command command = Command::VerifyAll;
    std::map<std::string, double> tolerances;
    std::map<std::string, std::int64_t> grids;
    std::uint64_t seed = 42;
    std::string output_path;

    /// Configured value, or `fallback` when the key is absent.
    [[nodiscard]] double tolerance(const std::string& name, double fallback) const;
    [[nodiscard]] std::size_t grid(const std::string& name, std::size_t fallback) const;
};

/// Tolerance and grid names accepted in a RunConfig.
bool is_known_tolerance(std::string_view name);
bool is_known_grid(std::string_view name);

/// Parses and validates a config document. Unknown keys, unknown tolerance or
/// grid names, negative tolerances and non-positive grids are rejected with
/// ConfigError.
RunConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const RunConfig& config);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace interplab::tools
