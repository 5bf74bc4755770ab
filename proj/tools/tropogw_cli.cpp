// Command line front end.  Every subcommand turns its flags and optional
// JSON input into one query for tgw_run_json and prints the JSON result.
//
// Exit codes: 0 success, 2 validation error (error object on stdout),
// 1 internal failure.

#include "tropogw/tropogw.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

using nlohmann::json;

namespace {

struct Flags {
    std::string input;
    std::string preset;
    bool emit_diagrams = false;
    int threads = 0;
    std::optional<std::int64_t> g, w, k;
    std::optional<std::string> chamber;
    std::string preset_name;  // positional argument of the preset subcommand
};

json read_input(const std::string& path) {
    if (path.empty()) return json::object();
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

int emit_error(const std::string& code, const std::string& message, int exit_code) {
    std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
    return exit_code;
}

int run(const std::string& command, const Flags& f) {
    json payload;
    try {
        payload = read_input(f.input);
    } catch (const std::invalid_argument& e) {
        return emit_error("InvalidArgument", e.what(), 2);
    }
    if (!payload.is_object()) return emit_error("InvalidArgument", "input must be a JSON object", 2);
    // A query file may itself name the command: {"command": ..., "payload": {...}}.
    std::string cmd = command;
    if (payload.contains("command") && payload.contains("payload")) {
        if (!payload["command"].is_string()) return emit_error("InvalidArgument", "'command' must be a string", 2);
        if (command != "query" && payload["command"] != command)
            return emit_error("InvalidArgument", "query names a different command", 2);
        cmd = payload["command"].get<std::string>();
        json inner = payload["payload"];
        payload = std::move(inner);
    } else if (command == "query") {
        return emit_error("InvalidArgument", "query input needs 'command' and 'payload'", 2);
    }
    if (!payload.is_object()) return emit_error("InvalidArgument", "payload must be a JSON object", 2);
    if (!f.preset.empty()) payload["preset"] = f.preset;
    if (!f.preset_name.empty()) payload["name"] = f.preset_name;
    if (f.g) payload["g"] = *f.g;
    if (f.w) payload["w"] = *f.w;
    if (f.k) payload["k"] = *f.k;
    if (f.chamber) payload["chamber"] = *f.chamber;

    const int threads = f.threads > 0 ? f.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    char* result = nullptr;
    tgw_status st = tgw_run_json(cmd.c_str(), payload.dump().c_str(), threads, f.emit_diagrams ? 1 : 0, &result);
    if (st != TGW_OK) {
        std::string msg = tgw_last_error();
        const std::string prefix = std::string(tgw_status_name(st)) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        return emit_error(tgw_status_name(st), msg, st == TGW_INTERNAL ? 1 : 2);
    }
    std::cout << result << "\n";
    tgw_string_free(result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double Gromov-Witten invariants of h-transverse toric surfaces via floor diagrams"};
    app.require_subcommand(1);
    Flags flags;
    std::string chosen;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", flags.input, "JSON payload file, or - for standard input");
        sub->add_option("--preset", flags.preset, "named preset: example-64, sec33, fig1, fig2");
        sub->add_flag("--emit-diagrams", flags.emit_diagrams, "include every weighted diagram in the output");
        sub->add_option("--threads", flags.threads, "worker threads (default: available cores)")->check(CLI::NonNegativeNumber);
        sub->add_option("--g", flags.g, "genus");
        sub->callback([&, sub] { chosen = sub->get_name(); });
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"invariant", "connected invariant (or F when d_t is absent; thickened count with \"disconnected\": true)"},
        {"chamber", "wall arrangement, chamber signature and named label"},
        {"fit", "fit and validate the polynomial on a chamber"},
        {"fock-check", "compare the Fock matrix element with the thickened diagram count"},
        {"gamma", "Gamma_g(w), or Gamma_g(|w + k|) when --k is given"},
        {"reciprocity", "weighted Ehrhart reciprocity on flow polytopes"},
        {"preset", "run a named preset"},
        {"query", "run {\"command\": ..., \"payload\": ...} read from --input"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub);
        if (name == "gamma") sub->add_option("--w", flags.w, "argument");
        if (name != "reciprocity" && name != "query") {
            sub->add_option("--k", flags.k, name == "gamma" ? "shift: evaluate Gamma_g(|w + k|)"
                                                            : "slope parameter of the sec33 preset");
            if (name != "gamma")
                sub->add_option("--chamber", flags.chamber, "chamber label of the sec33 preset, e.g. ++-");
        }
        if (name == "preset") sub->add_option("name", flags.preset_name, "preset name")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("InvalidArgument", e.what(), 2);
    }
    try {
        return run(chosen, flags);
    } catch (const std::exception& e) {
        return emit_error("Internal", e.what(), 1);
    }
}
