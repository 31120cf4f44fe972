#include "interplab_tools/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "interplab/error.hpp"

namespace interplab::tools {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

nlohmann::json nodes_to_json(const NodeSet& nodes) {
    nlohmann::json arr = nlohmann::json::array();
    for (double x : nodes.xs()) arr.push_back(format_double(x));
    return {{"n", nodes.size()}, {"label", nodes.label()}, {"nodes", std::move(arr)}};
}

NodeSet nodes_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array())
        throw InputError("node file: expected an object with a \"nodes\" array");
    std::vector<double> xs;
    for (const auto& item : doc["nodes"]) {
        if (!item.is_string()) throw InputError("node file: nodes must be decimal strings");
        const std::string text = item.get<std::string>();
        char* end = nullptr;
        errno = 0;
        const double x = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0' || errno == ERANGE) throw InputError("node file: bad number '" + text + "'");
        xs.push_back(x);
    }
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<std::size_t>() != xs.size()))
        throw InputError("node file: \"n\" does not match the node count");
    const std::string label = doc.value("label", std::string{});
    try {
        return NodeSet(std::move(xs), label);
    } catch (const InvalidArgument& e) {
        throw InputError(std::string("node file: ") + e.what());
    }
}

NodeSet read_nodes(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return nodes_from_json(doc);
}

void write_nodes(const std::filesystem::path& path, const NodeSet& nodes) { write_file(path, nodes_to_json(nodes).dump(2) + "\n"); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw InputError("write failed: " + path.string());
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_csv(const std::filesystem::path& path, std::string_view value_name, std::span<const double> xs,
               std::span<const double> values) {
    if (xs.size() != values.size()) throw InvalidArgument("write_csv: column lengths differ");
    std::string out = "x,";
    out += value_name;
    out += '\n';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i]);
        out += ',';
        out += format_double(values[i]);
        out += '\n';
    }
    write_file(path, out);
}

}  // namespace interplab::tools
