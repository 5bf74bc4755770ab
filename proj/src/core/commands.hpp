#pragma once

#include <json.hpp>

#include <string>

namespace tropogw {

struct CommandOptions {
    int threads = 1;
    bool emit_diagrams = false;
    std::int64_t max_mass = 64;  // cap on sum |x| + sum |y|
};

// Reads TROPOGW_MAX_MASS (default 64).
std::int64_t max_mass_from_environment();

// Fills the payload of a named preset; InvalidArgument for unknown names.
// Keys already present in `overrides` win (e.g. k, g, chamber for sec33).
nlohmann::json preset_payload(const std::string& command, const std::string& name,
                              const nlohmann::json& overrides = nlohmann::json::object());

// Dispatches one query.  Commands: invariant, chamber, fit, fock-check,
// gamma, reciprocity, preset.  Big integers are decimal strings.  Throws
// tropogw::Error on validation failures.
nlohmann::json run_command(const std::string& command, const nlohmann::json& payload,
                           const CommandOptions& options = {});

// Machine-readable error object {"error": {"code": ..., "message": ...}}.
nlohmann::json error_json(const std::string& code, const std::string& message);

}  // namespace tropogw
