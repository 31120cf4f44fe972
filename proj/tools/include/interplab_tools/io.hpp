#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "interplab/nodes.hpp"

namespace interplab::tools {

/// Raised for unreadable or malformed input files (usage errors).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest text with 17 significant digits, "." as decimal separator.
std::string format_double(double value);

/// {"n": int, "label": string, "nodes": [decimal strings]}.
nlohmann::json nodes_to_json(const NodeSet& nodes);
NodeSet nodes_from_json(const nlohmann::json& doc);

NodeSet read_nodes(const std::filesystem::path& path);
void write_nodes(const std::filesystem::path& path, const NodeSet& nodes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// "x,<value_name>" header then one row per point, "\n" line endings.
void write_csv(const std::filesystem::path& path, std::string_view value_name, std::span<const double> xs,
               std::span<const double> values);

}  // namespace interplab::tools
