#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swinglat/json_io.hpp"

namespace swinglat {

enum class GenerateKind { Slim, Planar, Good };
std::optional<GenerateKind> parse_generate_kind(std::string_view name);

struct GeneratedFile {
    std::string name;  // file name, e.g. good-0003.json
    Json content;      // {"kind", "diagram", "recipe"}
};

/// Item i depends only on (seed, i). Planar adds 0-3 eyes to a slim diagram.
std::vector<GeneratedFile> generate_diagrams(int count, int length, GenerateKind kind, std::uint64_t seed);

/// Predicate a generated diagram of the given kind must satisfy.
bool satisfies_kind(const Diagram& d, GenerateKind kind, int length);

struct VerifyInput {
    std::string name;
    Diagram diagram;
    // Optional "reachable" fixture: SL-reachable sets to check instead of computing.
    std::optional<std::map<PrimeInterval, std::vector<PrimeInterval>>> stored_reachable;
};

/// Accepts a bare diagram object or {"diagram": ..., "reachable": [{"from": e, "to": [e...]}]}.
/// Throws ArgumentError (including InvalidDiagram) on bad input.
VerifyInput verify_input_from_json(std::string name, const Json& j);
VerifyInput load_verify_input(const std::filesystem::path& path);

struct VerifyReport {
    Json json;
    std::string text;
    bool ok = true;
};

/// Runs the named property suites on every input. A stored "reachable"
/// fixture adds the stored_reachable suite for that input.
VerifyReport verify_inputs(const std::vector<VerifyInput>& inputs, const std::vector<std::string>& properties);

} // namespace swinglat
