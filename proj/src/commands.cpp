#include "swinglat/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "swinglat/properties.hpp"

namespace swinglat {

std::optional<GenerateKind> parse_generate_kind(std::string_view name) {
    if (name == "slim") return GenerateKind::Slim;
    if (name == "planar") return GenerateKind::Planar;
    if (name == "good") return GenerateKind::Good;
    return std::nullopt;
}

namespace {

std::string_view kind_name(GenerateKind kind) {
    switch (kind) {
    case GenerateKind::Slim: return "slim";
    case GenerateKind::Planar: return "planar";
    case GenerateKind::Good: return "good";
    }
    return "?";
}

// The lattices all generators produce are semimodular; is_slim rejects the rest.
bool slim_or_false(const Diagram& d) {
    try {
        return is_slim(d);
    } catch (const ArgumentError&) {
        return false;
    }
}

} // namespace

bool satisfies_kind(const Diagram& d, GenerateKind kind, int length) {
    if (d.length() != length || !validate(d.cover_data()).empty()) return false;
    switch (kind) {
    case GenerateKind::Slim: return slim_or_false(d);
    case GenerateKind::Planar: {
        if (!is_semimodular(d)) return false;
        const Diagram slim = full_slimming(d).diagram;
        return d.size() - slim.size() <= 3 && slim_or_false(slim);
    }
    case GenerateKind::Good: return slim_or_false(d) && is_good(d);
    }
    return false;
}

std::vector<GeneratedFile> generate_diagrams(int count, int length, GenerateKind kind, std::uint64_t seed) {
    if (count < 0) throw ArgumentError("generate: count must be non-negative");
    if (length < 2) throw ArgumentError("generate: length must be at least 2");
    std::vector<GeneratedFile> out;
    for (int i = 0; i < count; ++i) {
        const std::uint64_t item_seed = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i);
        Rng rng(item_seed);
        Generated g = [&] {
            switch (kind) {
            case GenerateKind::Good: return random_good(length, rng);
            case GenerateKind::Planar: {
                const int forks = rng.uniform_int(0, length - 2);
                return random_planar(length, forks, rng.uniform_int(0, 3), rng.uniform_int(0, 3), rng);
            }
            case GenerateKind::Slim: break;
            }
            const int forks = rng.uniform_int(0, length - 2);
            return random_slim(length, forks, rng.uniform_int(0, 3), rng);
        }();
        g.recipe.seed = item_seed;
        std::ostringstream name;
        name << kind_name(kind) << '-' << std::setw(4) << std::setfill('0') << i << ".json";
        out.push_back({name.str(), Json{{"kind", kind_name(kind)},
                                        {"diagram", diagram_to_json(g.diagram)},
                                        {"recipe", recipe_to_json(g.recipe)}}});
    }
    return out;
}

VerifyInput verify_input_from_json(std::string name, const Json& j) {
    if (!j.is_object()) throw ArgumentError("malformed JSON: input must be an object");
    const bool wrapped = j.contains("diagram");
    VerifyInput in{std::move(name), diagram_from_json(wrapped ? j["diagram"] : j), std::nullopt};
    if (wrapped && j.contains("reachable")) {
        const Json& r = j["reachable"];
        if (!r.is_array()) throw ArgumentError("malformed JSON: reachable must be an array");
        std::map<PrimeInterval, std::vector<PrimeInterval>> stored;
        for (const auto& entry : r) {
            if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") || !entry["to"].is_array())
                throw ArgumentError("malformed JSON: reachable entries need from and to");
            auto& targets = stored[edge_from_json(entry["from"])];
            for (const auto& e : entry["to"]) targets.push_back(edge_from_json(e));
        }
        in.stored_reachable = std::move(stored);
    }
    return in;
}

VerifyInput load_verify_input(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw ArgumentError("cannot read " + path.string());
    const Json j = Json::parse(file, nullptr, false);
    if (j.is_discarded()) throw ArgumentError(path.string() + ": not valid JSON");
    return verify_input_from_json(path.filename().string(), j);
}

VerifyReport verify_inputs(const std::vector<VerifyInput>& inputs, const std::vector<std::string>& properties) {
    const auto& known = property_names();
    for (const auto& p : properties)
        if (std::find(known.begin(), known.end(), p) == known.end())
            throw ArgumentError("unknown property " + p);

    struct Totals {
        long checks = 0;
        long failures = 0;
        int skipped = 0;
        int inputs = 0;
    };
    std::map<std::string, Totals> totals;
    VerifyReport report;
    Json results = Json::array();
    std::ostringstream text;

    for (const auto& in : inputs) {
        const SwingAnalysis analysis(in.diagram);
        std::vector<PropertyResult> runs;
        for (const auto& p : properties) runs.push_back(run_property(p, analysis));
        if (in.stored_reachable) runs.push_back(check_stored_reachable(analysis, *in.stored_reachable));

        Json props = Json::object();
        for (const auto& r : runs) {
            auto& t = totals[r.name];
            ++t.inputs;
            t.checks += r.checks;
            t.failures += static_cast<long>(r.failures.size());
            t.skipped += r.skipped ? 1 : 0;
            props[r.name] = {{"checks", r.checks}, {"skipped", r.skipped}, {"failures", r.failures}};
            if (!r.ok()) {
                report.ok = false;
                const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
                for (std::size_t i = 0; i < shown; ++i)
                    text << "FAIL " << in.name << " " << r.name << ": " << r.failures[i] << '\n';
                if (shown < r.failures.size())
                    text << "FAIL " << in.name << " " << r.name << ": ... " << r.failures.size() - shown << " more\n";
            }
        }
        results.push_back({{"name", in.name},
                           {"size", in.diagram.size()},
                           {"edges", in.diagram.edges().size()},
                           {"properties", props}});
    }

    Json summary = Json::object();
    text << "verified " << inputs.size() << " diagram(s)\n";
    for (const auto& [name, t] : totals) {
        summary[name] = {{"inputs", t.inputs}, {"checks", t.checks}, {"failures", t.failures}, {"skipped", t.skipped}};
        text << "  " << std::left << std::setw(18) << name << (t.failures == 0 ? "ok  " : "FAIL") << "  checks "
             << t.checks << ", failures " << t.failures << ", skipped " << t.skipped << '\n';
    }
    text << (report.ok ? "all properties hold\n" : "discrepancies found\n");
    report.json = Json{{"inputs", inputs.size()}, {"properties", properties}, {"ok", report.ok},
                       {"summary", summary}, {"results", results}};
    report.text = text.str();
    return report;
}

} // namespace swinglat
