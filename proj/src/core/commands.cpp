#include "core/commands.hpp"

#include "core/chambers.hpp"
#include "core/examples.hpp"
#include "core/fitting.hpp"
#include "core/invariants.hpp"
#include "core/matrix_element.hpp"
#include "core/polynomials.hpp"
#include "core/thickened.hpp"

#include <cstdlib>

namespace tropogw {

using nlohmann::json;

namespace {

Error invalid(const std::string& msg) { return Error(ErrorCode::InvalidArgument, msg); }

IntVec int_list(const json& p, const char* key, bool required = true) {
    if (!p.contains(key)) {
        if (required) throw invalid(std::string("missing field '") + key + "'");
        return {};
    }
    const auto& v = p.at(key);
    if (!v.is_array()) throw invalid(std::string("field '") + key + "' must be an array of integers");
    IntVec out;
    for (const auto& e : v) {
        if (!e.is_number_integer()) throw invalid(std::string("field '") + key + "' must contain integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::int64_t int_field(const json& p, const char* key, std::optional<std::int64_t> fallback = std::nullopt) {
    if (!p.contains(key)) {
        if (fallback) return *fallback;
        throw invalid(std::string("missing field '") + key + "'");
    }
    if (!p.at(key).is_number_integer()) throw invalid(std::string("field '") + key + "' must be an integer");
    return p.at(key).get<std::int64_t>();
}

bool bool_field(const json& p, const char* key, bool fallback) {
    if (!p.contains(key)) return fallback;
    if (!p.at(key).is_boolean()) throw invalid(std::string("field '") + key + "' must be a boolean");
    return p.at(key).get<bool>();
}

std::string str(const Int& v) { return v.get_str(); }
std::string str(const Rat& v) { return v.get_str(); }

json int_array(const IntVec& v) { return json(v); }

PolygonShape shape_of(const json& p) {
    PolygonShape s{int_list(p, "c_r"), int_list(p, "c_l"), int_list(p, "d_r"), int_list(p, "d_l")};
    s.validate();
    return s;
}

void check_mass(const IntVec& x, const IntVec& y, const CommandOptions& opt) {
    const auto mass = abs_mass(x) + abs_mass(y);
    if (mass > opt.max_mass)
        throw Error(ErrorCode::MassLimitExceeded, "total divergence mass " + std::to_string(mass) +
                                                      " exceeds the limit " + std::to_string(opt.max_mass) +
                                                      " (TROPOGW_MAX_MASS)");
}

const char* color_name(Color c) { return c == Color::Black ? "black" : c == Color::White ? "white" : "grey"; }
const char* region_name(Region r) { return r == Region::L ? "L" : r == Region::C ? "C" : "R"; }

json diagram_json(const FloorDiagram& d) {
    json vs = json::array(), es = json::array();
    for (const auto& v : d.vertices)
        vs.push_back({{"color", color_name(v.color)},
                      {"region", region_name(v.region)},
                      {"position", v.position},
                      {"divergence", v.divergence},
                      {"label", v.label}});
    for (const auto& e : d.edges) es.push_back({{"tail", e.tail}, {"head", e.head}, {"weight", e.weight}});
    return {{"vertices", vs}, {"edges", es}, {"multiplicity", str(multiplicity(d))}};
}

json polygon_json(const Polygon& P) {
    auto [Dr, Dl] = boundary_multisets(P.shape);
    return {{"c_r", int_array(P.c_r())}, {"c_l", int_array(P.c_l())}, {"d_r", int_array(P.d_r())},
            {"d_l", int_array(P.d_l())}, {"d_t", P.d_t},  {"d_b", P.d_b},
            {"a", P.a},                  {"K", P.shape.lambda_constant()},
            {"D_r", int_array(Dr)},      {"D_l", int_array(Dl)}};
}

json polynomial_json(const MultivariatePolynomial& p) {
    json terms = json::object();
    for (const auto& [exp, c] : p.terms) {
        std::string key;
        for (std::size_t i = 0; i < exp.size(); ++i) key += (i ? "," : "") + std::to_string(exp[i]);
        terms[key] = str(c);
    }
    return {{"variables", p.variables}, {"terms", terms}, {"text", p.to_string()}};
}

json cmd_invariant(const json& p, const CommandOptions& opt) {
    const auto shape = shape_of(p);
    const int g = static_cast<int>(int_field(p, "g", 0));
    DivergenceData data{int_list(p, "x"), int_list(p, "y", false)};
    check_mass(data.x, data.y, opt);
    const bool disconnected = bool_field(p, "disconnected", false);
    json out;
    if (disconnected) {
        check_lambda(shape, data);
        if (p.contains("d_t")) check_degrees(build_polygon(shape.c_r, shape.c_l, shape.d_r, shape.d_l, int_field(p, "d_t")), data);
        auto res = disconnected_invariant(shape, g, data.x, data.y);
        out = {{"value", str(res.value)}, {"connected", false}, {"connected_part", str(res.connected_value)}};
        if (opt.emit_diagrams) {
            std::int64_t count = 0;
            enumerate_thickened(shape, g, data.x, data.y, [&](const ThickenedDiagram&) { ++count; });
            out["diagram_count"] = count;
        }
        return out;
    }
    InvariantOptions io;
    io.threads = opt.threads;
    json diagrams = json::array();
    if (opt.emit_diagrams) io.on_diagram = [&](const FloorDiagram& d) { diagrams.push_back(diagram_json(d)); };
    InvariantResult res;
    if (p.contains("d_t")) {
        auto P = build_polygon(shape.c_r, shape.c_l, shape.d_r, shape.d_l, int_field(p, "d_t"));
        res = connected_invariant(P, g, data, io);
    } else {
        check_lambda(shape, data);
        res = function_F_detailed(shape, g, data.x, data.y, io);
    }
    out = {{"value", str(res.value)}, {"connected", true}, {"diagram_count", res.diagram_count}};
    if (opt.emit_diagrams) out["diagrams"] = diagrams;
    return out;
}

json cmd_chamber(const json& p, const CommandOptions&) {
    const auto shape = shape_of(p);
    const IntVec x = int_list(p, "x"), y = int_list(p, "y", false);
    const bool extended = bool_field(p, "extended", false);
    check_lambda(shape, DivergenceData{x, y});
    const int n1 = static_cast<int>(x.size()), n2 = static_cast<int>(y.size());
    Arrangement arr = extended ? extended_walls(shape, n1, n2) : walls(shape, n1, n2);
    std::string sig = extended ? extended_signature(shape, x, y) : chamber_signature(shape, x, y);
    json ws = json::array();
    for (const auto& w : arr.walls) ws.push_back(w.describe(arr.chart_names()));
    json out = {{"signature", sig}, {"walls", ws}, {"wall_count", arr.walls.size()},
                {"raw_wall_count", arr.raw_count}, {"chart", arr.chart_names()}};
    auto label = named_label(shape, x, y);
    if (!label.empty()) out["label"] = label;
    return out;
}

json cmd_fit(const json& p, const CommandOptions& opt) {
    FitConfig cfg;
    cfg.shape = shape_of(p);
    cfg.g = static_cast<int>(int_field(p, "g", 0));
    cfg.x = int_list(p, "x");
    cfg.y = int_list(p, "y", false);
    cfg.extended = bool_field(p, "extended", false);
    cfg.radius = int_field(p, "radius", cfg.radius);
    cfg.seed = static_cast<std::uint64_t>(int_field(p, "seed", 1));
    cfg.extra = static_cast<std::size_t>(int_field(p, "extra", 4));
    cfg.holdout = static_cast<std::size_t>(int_field(p, "holdout", 6));
    cfg.threads = opt.threads;
    check_mass(cfg.x, cfg.y, opt);
    auto rep = fit_chamber(cfg);
    json out = {{"polynomial", polynomial_json(rep.polynomial)},
                {"signature", rep.signature},
                {"report",
                 {{"degree_bound", rep.degree_bound},
                  {"degree", rep.parity.degree},
                  {"degree_attained", rep.parity.attains},
                  {"parity_pass", rep.parity.pass},
                  {"xy_parity_pass", rep.xy_parity_ok},
                  {"fit_samples", rep.fit_samples},
                  {"holdout_checked", rep.holdout_checked},
                  {"holdout_failures", rep.holdout_failures},
                  {"holdout_pass", rep.holdout_ok()}}}};
    if (p.contains("chamber") && p.contains("k") && !cfg.extended) {
        // Compare with the tabulated Gamma expansion on every evaluated point.
        const std::string label = p.at("chamber").get<std::string>();
        const auto k = int_field(p, "k");
        for (const auto* table : {&reference_table(), &corrected_expansions()})
            for (const auto& row : *table) {
                if (row.label != label) continue;
                bool agree = true;
                for (std::size_t i = 0; i < rep.points.size(); ++i)
                    if (expansion_value(row, cfg.g, k, rep.points[i]) != rep.values[i]) agree = false;
                out[table == &reference_table() ? "table_expansion_agrees" : "corrected_expansion_agrees"] = agree;
            }
    }
    return out;
}

json cmd_fock_check(const json& p, const CommandOptions& opt) {
    const auto shape = shape_of(p);
    const int g = static_cast<int>(int_field(p, "g", 0));
    const IntVec x = int_list(p, "x"), y = int_list(p, "y", false);
    check_mass(x, y, opt);
    check_lambda(shape, DivergenceData{x, y});
    auto me = matrix_element(shape, g, x, y);
    auto dis = disconnected_invariant(shape, g, x, y);
    return {{"matrix_element", str(me.value)}, {"disconnected", str(dis.value)},
            {"agree", me.value == Rat(dis.value)}, {"u_power", me.u_power}, {"energy_cap", me.energy_cap}};
}

json cmd_gamma(const json& p, const CommandOptions&) {
    const auto g = int_field(p, "g");
    const auto w = int_field(p, "w");
    if (g < 0) throw invalid("g must be nonnegative");
    if (p.contains("k")) return {{"value", str(gamma_shifted(static_cast<int>(g), int_field(p, "k"), w))}};
    if (w < 0) throw invalid("w must be nonnegative");
    return {{"value", str(gamma(static_cast<int>(g), w))}};
}

FlowSystem flow_system_of(const json& p) {
    FlowSystem s;
    s.num_vertices = static_cast<int>(int_field(p, "num_vertices"));
    if (!p.contains("edges") || !p.at("edges").is_array()) throw invalid("missing field 'edges'");
    for (const auto& e : p.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw invalid("edges must be [tail, head] pairs");
        s.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    s.k = int_list(p, "k");
    if (p.contains("internal")) {
        for (const auto& b : p.at("internal")) s.internal.push_back(b.get<bool>());
    } else {
        s.internal.assign(s.edges.size(), true);
    }
    s.validate();
    return s;
}

json reciprocity_json(const ReciprocityReport& r) {
    json ext = json::array(), rec = json::array();
    for (const auto& v : r.extended) ext.push_back(str(v));
    for (const auto& v : r.reciprocal) rec.push_back(str(v));
    return {{"pass", r.pass}, {"dimension", r.dimension}, {"degree_bound", r.degree_bound},
            {"extended", ext}, {"reciprocal", rec}};
}

json cmd_reciprocity(const json& p, const CommandOptions&) {
    if (p.contains("edges")) return reciprocity_json(ehrhart_extend_and_check(flow_system_of(p)));
    // Otherwise: every core skeleton for (a, g, y) with the given black targets.
    const int a = static_cast<int>(int_field(p, "a"));
    const int g = static_cast<int>(int_field(p, "g", 0));
    const IntVec y = int_list(p, "y", false), targets = int_list(p, "targets");
    if (static_cast<int>(targets.size()) != a) throw Error(ErrorCode::LengthMismatch, "need one target per black");
    std::vector<int> signs;
    for (auto v : y) {
        if (v == 0) throw Error(ErrorCode::ZeroEntry, "y entries must be nonzero");
        signs.push_back(v < 0 ? -1 : 1);
    }
    json systems = json::array();
    bool all = true;
    for (const auto& core : enumerate_cores(a, g, static_cast<int>(y.size()), signs)) {
        auto sys = core_flow_system(core, targets, y);
        if (polytope_dimension(sys) < 0) continue;
        auto r = ehrhart_extend_and_check(sys);
        all = all && r.pass;
        auto j = reciprocity_json(r);
        j["skeleton"] = core.canonical();
        systems.push_back(j);
    }
    return {{"pass", all}, {"systems", systems}};
}

json cmd_preset(const json& p, const CommandOptions& opt) {
    if (!p.contains("name") || !p.at("name").is_string()) throw invalid("missing field 'name'");
    const std::string name = p.at("name").get<std::string>();
    if (name == "fig1" || name == "fig2") {
        auto P = name == "fig1" ? hirzebruch_polygon() : four_floor_polygon();
        return {{"name", name}, {"polygon", polygon_json(P)}};
    }
    const std::string cmd = name == "example-64" ? "invariant" : "fit";
    auto payload = preset_payload(cmd, name, p);
    json out = run_command(cmd, payload, opt);
    out["name"] = name;
    return out;
}

json instance_payload(const WorkedInstance& w) {
    const auto& P = w.polygon;
    return {{"c_r", P.c_r()}, {"c_l", P.c_l()}, {"d_r", P.d_r()}, {"d_l", P.d_l()}, {"d_t", P.d_t},
            {"g", w.g},       {"x", w.data.x},  {"y", w.data.y}};
}

}  // namespace

std::int64_t max_mass_from_environment() {
    const char* v = std::getenv("TROPOGW_MAX_MASS");
    if (!v || !*v) return 64;
    char* end = nullptr;
    long long m = std::strtoll(v, &end, 10);
    if (*end != '\0' || m < 0) throw invalid("TROPOGW_MAX_MASS must be a nonnegative integer");
    return m;
}

json preset_payload(const std::string& command, const std::string& name, const json& overrides) {
    json base;
    if (name == "example-64") {
        base = instance_payload(sixty_four_instance());
    } else if (name == "sec33") {
        const auto k = int_field(overrides, "k", 2);
        if (k < 1) throw invalid("k must be positive");
        const std::string label =
            overrides.contains("chamber") ? overrides.at("chamber").get<std::string>() : std::string("++-");
        auto rep = chamber_representative(k, label);
        if (!rep) throw Error(ErrorCode::InsufficientSamples, "chamber " + label + " has no lattice point for k = " + std::to_string(k));
        const auto s = two_floor_shape(k);
        base = {{"c_r", s.c_r}, {"c_l", s.c_l}, {"d_r", s.d_r}, {"d_l", s.d_l}, {"g", 0},
                {"x", IntVec{(*rep)[0], (*rep)[1]}}, {"y", IntVec{(*rep)[2]}}, {"k", k}, {"chamber", label}};
        if (command == "fit") base["radius"] = 12;
    } else if (name == "fig1" || name == "fig2") {
        auto P = name == "fig1" ? hirzebruch_polygon() : four_floor_polygon();
        base = {{"c_r", P.c_r()}, {"c_l", P.c_l()}, {"d_r", P.d_r()}, {"d_l", P.d_l()}, {"d_t", P.d_t}};
    } else {
        throw invalid("unknown preset '" + name + "' (known: example-64, sec33, fig1, fig2)");
    }
    for (auto it = overrides.begin(); it != overrides.end(); ++it)
        if (it.key() != "name") base[it.key()] = it.value();
    return base;
}

json run_command(const std::string& command, const json& payload, const CommandOptions& options) {
    if (!payload.is_object()) throw invalid("payload must be a JSON object");
    if (command != "preset" && payload.contains("preset")) {
        if (!payload.at("preset").is_string()) throw invalid("field 'preset' must be a string");
        json rest = payload;
        rest.erase("preset");
        return run_command(command, preset_payload(command, payload.at("preset").get<std::string>(), rest), options);
    }
    try {
        if (command == "invariant") return cmd_invariant(payload, options);
        if (command == "chamber") return cmd_chamber(payload, options);
        if (command == "fit") return cmd_fit(payload, options);
        if (command == "fock-check") return cmd_fock_check(payload, options);
        if (command == "gamma") return cmd_gamma(payload, options);
        if (command == "reciprocity") return cmd_reciprocity(payload, options);
        if (command == "preset") return cmd_preset(payload, options);
    } catch (const json::exception& e) {
        throw invalid(std::string("malformed payload: ") + e.what());
    }
    throw invalid("unknown command '" + command + "'");
}

json error_json(const std::string& code, const std::string& message) {
    return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace tropogw
