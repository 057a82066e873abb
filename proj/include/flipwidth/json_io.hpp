#pragma once

// JSON wire formats. Graphs: {"n":…, "edges":[[u,v],…], "roles":…?, "colors":…?}
// with each edge listed once as u < v. Interchanges add lanes, a "i,j"-keyed
// ramp map, and the mode. Everything round-trips byte-identically.

#include <string>
#include <vector>

#include <json.hpp>

#include "flipwidth/game.hpp"
#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"

namespace flipwidth {

using json = nlohmann::ordered_json;

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.roles()) {
        json roles = json::array();
        for (Role r : *g.roles()) roles.push_back(role_name(r));
        j["roles"] = std::move(roles);
    }
    if (g.colors()) j["colors"] = *g.colors();
    return j;
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph JSON needs \"n\" and \"edges\"");
    std::size_t n = j.at("n").get<std::size_t>();
    Graph g(n);
    std::size_t idx = 0;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw parse_error("edge must be a pair", "edges[" + std::to_string(idx) + "]");
        vertex_t u = e[0].get<vertex_t>(), v = e[1].get<vertex_t>();
        if (u >= v) throw parse_error("edges must be listed once with u < v",
                                      "edges[" + std::to_string(idx) + "]");
        try {
            g.add_edge(u, v);
        } catch (const domain_error& err) {
            throw parse_error(err.what(), "edges[" + std::to_string(idx) + "]");
        }
        ++idx;
    }
    g.finish();
    if (j.contains("roles")) {
        std::vector<Role> roles;
        idx = 0;
        for (const auto& r : j.at("roles")) {
            auto role = role_from_name(r.get<std::string>());
            if (!role) throw parse_error("unknown role", "roles[" + std::to_string(idx) + "]");
            roles.push_back(*role);
            ++idx;
        }
        if (roles.size() != n) throw parse_error("roles must cover every vertex", "roles");
        g.set_roles(std::move(roles));
    }
    if (j.contains("colors")) {
        auto colors = j.at("colors").get<std::vector<int>>();
        if (colors.size() != n) throw parse_error("colors must cover every vertex", "colors");
        g.set_colors(std::move(colors));
    }
    return g;
}

inline std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(); }

inline Graph parse_graph(const std::string& text) {
    try {
        return graph_from_json(json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what(), "byte " + std::to_string(e.byte));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what());
    }
}

inline json interchange_to_json(const Interchange& ic) {
    json j = graph_to_json(ic.graph);
    j["lanes"] = ic.lanes;
    json ramps = json::object();
    for (auto [pair, v] : ic.ramps)
        ramps[std::to_string(pair.first) + "," + std::to_string(pair.second)] = v;
    j["ramps"] = std::move(ramps);
    j["mode"] = mode_name(ic.mode);
    return j;
}

inline Interchange interchange_from_json(const json& j) {
    Interchange ic;
    ic.graph = graph_from_json(j);
    if (!j.contains("lanes") || !j.contains("ramps") || !j.contains("mode"))
        throw parse_error("interchange JSON needs \"lanes\", \"ramps\", \"mode\"");
    ic.lanes = j.at("lanes").get<std::vector<vertex_t>>();
    for (const auto& [key, val] : j.at("ramps").items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) throw parse_error("ramp key must be \"i,j\"", key);
        int i = std::stoi(key.substr(0, comma));
        int jj = std::stoi(key.substr(comma + 1));
        ic.ramps[{i, jj}] = val.get<vertex_t>();
    }
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "weak") ic.mode = InterchangeMode::weak;
    else if (mode == "strong") ic.mode = InterchangeMode::strong;
    else throw parse_error("mode must be weak or strong", "mode");
    return ic;
}

inline json flips_to_json(const FlipCollection& f) {
    json out = json::array();
    for (const auto& flip : f.flips) out.push_back(flip.members);
    return out;
}

inline FlipCollection flips_from_json(const json& j) {
    FlipCollection f;
    for (const auto& flip : j) f.flips.push_back(FlipSet(flip.get<std::vector<vertex_t>>()));
    return f;
}

inline json transcript_to_json(const Transcript& t) {
    json j;
    json cfg;
    if (t.config.radius == kInfiniteRadius) cfg["r"] = "inf";
    else cfg["r"] = t.config.radius;
    cfg["t"] = t.config.flip_budget;
    cfg["max_rounds"] = t.config.max_rounds;
    j["config"] = std::move(cfg);
    j["start"] = t.start;
    json rounds = json::array();
    for (const auto& rec : t.rounds) {
        json r;
        r["announce"] = flips_to_json(rec.announced);
        r["path"] = rec.path;
        rounds.push_back(std::move(r));
    }
    j["rounds"] = std::move(rounds);
    j["outcome"] = t.outcome == Outcome::cops ? "cops" : "robber";
    j["round"] = t.decided_round;
    return j;
}

inline Transcript transcript_from_json(const json& j) {
    Transcript t;
    const auto& cfg = j.at("config");
    if (cfg.at("r").is_string()) t.config.radius = kInfiniteRadius;
    else t.config.radius = cfg.at("r").get<std::uint32_t>();
    t.config.flip_budget = cfg.at("t").get<std::size_t>();
    t.config.max_rounds = cfg.at("max_rounds").get<std::size_t>();
    t.start = j.at("start").get<vertex_t>();
    for (const auto& rec : j.at("rounds")) {
        RoundRecord r;
        r.announced = flips_from_json(rec.at("announce"));
        r.path = rec.at("path").get<std::vector<vertex_t>>();
        t.rounds.push_back(std::move(r));
    }
    t.outcome = j.at("outcome").get<std::string>() == "cops" ? Outcome::cops : Outcome::robber;
    t.decided_round = j.at("round").get<std::size_t>();
    return t;
}

// Colored subgraph: graph JSON plus members and a per-member coloring.
inline json colored_subgraph_to_json(const Graph& g, const std::vector<vertex_t>& members,
                                     const std::vector<int>& coloring) {
    json j = graph_to_json(g);
    j["members"] = members;
    j["coloring"] = coloring;
    return j;
}

} // namespace flipwidth
