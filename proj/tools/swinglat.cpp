// Command-line front end: generate | verify | simulate | serve.
// Exit codes: 0 ok, 1 property or invariant failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/asio/io_context.hpp>
#include <boost/asio/signal_set.hpp>
#include <spdlog/cfg/env.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "swinglat/commands.hpp"
#include "swinglat/corpus.hpp"
#include "swinglat/game_json.hpp"
#include "swinglat/properties.hpp"
#include "swinglat/server.hpp"
#include "swinglat/simulation.hpp"

#ifndef SWINGLAT_WEB_ROOT
#define SWINGLAT_WEB_ROOT "web"
#endif

using namespace swinglat;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream in(list);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write " + path.string());
    out << text;
}

GameConfig load_config(const std::string& path, GameConfig base) {
    if (path.empty()) return base;
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read " + path);
    const Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ArgumentError(path + ": not valid JSON");
    return config_from_json(j, base);
}

struct GenerateArgs {
    int count = 10;
    int length = 6;
    std::string kind = "good";
    std::uint64_t seed = 1;
    std::string out = "corpus";
};

int run_generate(const GenerateArgs& a) {
    const auto kind = parse_generate_kind(a.kind);
    if (!kind) throw ArgumentError("unknown kind " + a.kind + " (slim, planar, good)");
    const auto files = generate_diagrams(a.count, a.length, *kind, a.seed);
    std::filesystem::create_directories(a.out);
    for (const auto& f : files) write_file(std::filesystem::path(a.out) / f.name, f.content.dump() + "\n");
    spdlog::info("wrote {} {} diagram(s) of length {} to {}", files.size(), a.kind, a.length, a.out);
    return kOk;
}

struct VerifyArgs {
    std::vector<std::string> paths;
    int random = 0;
    std::uint64_t seed = 1;
    int max_eyes = 4;
    bool named = false;
    std::string properties;
    std::string report;
    bool json = false;
};

int run_verify(const VerifyArgs& a) {
    std::vector<VerifyInput> inputs;
    for (const auto& p : a.paths) inputs.push_back(load_verify_input(p));
    if (a.named)
        for (auto& e : named_lattices()) inputs.push_back({e.name, e.diagram, std::nullopt});
    if (a.random > 0) {
        CorpusOptions options;
        options.count = a.random;
        options.seed = a.seed;
        options.max_eyes = a.max_eyes;
        for (auto& e : random_corpus(options)) inputs.push_back({e.name, e.diagram, std::nullopt});
    }
    if (inputs.empty()) throw ArgumentError("verify: no inputs (give paths, --random N or --named)");
    const auto properties = a.properties.empty() ? property_names() : split_list(a.properties);
    const auto report = verify_inputs(inputs, properties);
    if (!a.report.empty()) write_file(a.report, report.json.dump(2) + "\n");
    if (a.json)
        std::cout << report.json.dump(2) << '\n';
    else
        std::cout << report.text;
    return report.ok ? kOk : kFailure;
}

struct SimulateArgs {
    std::uint64_t seed = 1;
    long events = 1000;
    std::string policy = "autoplay";
    std::string out;
    std::string config;
    int length = 6;
};

int run_simulate(const SimulateArgs& a) {
    if (a.policy != "autoplay") throw ArgumentError("unknown policy " + a.policy + " (autoplay)");
    GameConfig config;
    config.board_length = a.length;
    config.rng_seed = a.seed;
    config = load_config(a.config, config);
    const auto result = simulate(config, a.events, a.seed);
    const std::string log = effect_log(result.effects);
    if (a.out.empty())
        std::cout << log;
    else
        write_file(a.out, log);
    if (result.violation) {
        spdlog::error("invariant violated {}", *result.violation);
        std::cerr << snapshot_to_json(snapshot(result.final_state)).dump(2) << '\n';
        return kFailure;
    }
    const auto audit = audit_effects(result.effects, config.initial_lives, result.final_state.lives);
    for (const auto& f : audit) spdlog::error("effect log: {}", f);
    spdlog::info("{} events, {} moves, {} lives, phase {}", result.events, result.final_state.move_count,
                 result.final_state.lives, to_string(result.final_state.phase));
    return audit.empty() ? kOk : kFailure;
}

struct ServeArgs {
    std::string address = "127.0.0.1";
    unsigned short port = 8080;
    std::string web_root = SWINGLAT_WEB_ROOT;
    std::uint64_t seed = 1;
    int length = 6;
    std::string config;
};

int run_serve(const ServeArgs& a) {
    ServerOptions options;
    options.address = a.address;
    options.port = a.port;
    options.web_root = a.web_root;
    options.config.board_length = a.length;
    options.config.rng_seed = a.seed;
    options.config = load_config(a.config, options.config);
    boost::asio::io_context ioc(1);
    Server server(ioc, options);
    boost::asio::signal_set signals(ioc, SIGINT, SIGTERM);
    signals.async_wait([&](auto, int) {
        spdlog::info("shutting down");
        ioc.stop();
    });
    ioc.run();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    auto logger = spdlog::stderr_color_mt("swinglat");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::info);
    spdlog::cfg::load_env_levels();  // SPDLOG_LEVEL=debug etc.

    CLI::App app{"Planar semimodular lattices: swing lemma verification and the swing lattice game"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write random diagrams with their build recipes");
    generate->add_option("--count", gen.count, "number of diagrams")->check(CLI::NonNegativeNumber);
    generate->add_option("--length", gen.length, "lattice length")->check(CLI::Range(2, 64));
    generate->add_option("--kind", gen.kind, "slim | planar | good");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--out", gen.out, "output directory");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check the swing lemma and related properties");
    verify->add_option("paths", ver.paths, "diagram JSON files");
    verify->add_option("--random", ver.random, "also verify N seeded random lattices")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", ver.seed, "seed for --random");
    verify->add_option("--max-eyes", ver.max_eyes, "eyes per random lattice, 0 for slim only");
    verify->add_flag("--named", ver.named, "also verify the built-in named lattices");
    verify->add_option("--properties", ver.properties, "comma-separated subset of the property suites");
    verify->add_option("--report", ver.report, "write the JSON report to this file");
    verify->add_flag("--json", ver.json, "print the JSON report instead of text");

    SimulateArgs sim;
    auto* simulate_cmd = app.add_subcommand("simulate", "headless autoplay, JSON-lines effect log");
    simulate_cmd->add_option("--seed", sim.seed, "game and policy seed");
    simulate_cmd->add_option("--events", sim.events, "number of events")->check(CLI::NonNegativeNumber);
    simulate_cmd->add_option("--policy", sim.policy, "autoplay");
    simulate_cmd->add_option("--length", sim.length, "board length");
    simulate_cmd->add_option("--config", sim.config, "JSON file overriding game config keys");
    simulate_cmd->add_option("--out", sim.out, "log file (default stdout)");

    ServeArgs srv;
    auto* serve = app.add_subcommand("serve", "game server: static UI and WebSocket sessions");
    serve->add_option("--address", srv.address, "bind address");
    serve->add_option("--port", srv.port, "TCP port");
    serve->add_option("--web-root", srv.web_root, "directory of static UI files");
    serve->add_option("--seed", srv.seed, "base seed; each connection derives its own");
    serve->add_option("--length", srv.length, "board length");
    serve->add_option("--config", srv.config, "JSON file overriding game config keys");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*verify) return run_verify(ver);
        if (*simulate_cmd) return run_simulate(sim);
        if (*serve) return run_serve(srv);
    } catch (const ArgumentError& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    } catch (const GenerationError& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    } catch (const boost::system::system_error& e) {
        spdlog::error("{}", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        return kFailure;
    }
    return kOk;
}
