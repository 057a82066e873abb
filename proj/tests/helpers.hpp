#pragma once

// Shared test fixtures: tiny named graphs, seeded random graphs, and naive
// reference implementations used as oracles against the bit-twiddling paths.

#include <random>
#include <set>
#include <vector>

#include "flipwidth/graph.hpp"

namespace fwtest {

using namespace flipwidth;

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (vertex_t i = 0; i + 1 < n; ++i) e.push_back({i, static_cast<vertex_t>(i + 1)});
    return Graph::from_edges(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (vertex_t i = 0; i < n; ++i) {
        vertex_t j = static_cast<vertex_t>((i + 1) % n);
        e.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(e.begin(), e.end());
    return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> e;
    for (vertex_t i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph::from_edges(leaves + 1, e);
}

inline Graph edgeless_graph(std::size_t n) { return Graph::from_edges(n, {}); }

inline Graph hypercube_graph(unsigned d) {
    std::size_t n = std::size_t{1} << d;
    std::vector<Edge> e;
    for (vertex_t v = 0; v < n; ++v)
        for (unsigned b = 0; b < d; ++b) {
            vertex_t u = v ^ (1u << b);
            if (v < u) e.push_back({v, u});
        }
    return Graph::from_edges(n, e);
}

inline Graph random_graph(std::uint64_t seed, std::size_t n, double p = 0.5) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = i + 1; j < n; ++j)
            if (coin(rng)) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

inline FlipCollection random_flips(std::uint64_t seed, std::size_t n, std::size_t count) {
    std::mt19937_64 rng(seed);
    FlipCollection f;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<vertex_t> members;
        for (vertex_t v = 0; v < n; ++v)
            if (rng() & 1u) members.push_back(v);
        f.flips.push_back(FlipSet(std::move(members)));
    }
    return f;
}

// Reference flip semantics straight from the definition: adjacency xor parity
// of flips containing both endpoints.
inline Graph naive_apply_flips(const Graph& g, const FlipCollection& flips) {
    Graph out(g.n());
    for (vertex_t u = 0; u < g.n(); ++u)
        for (vertex_t v = u + 1; v < g.n(); ++v) {
            bool adj = g.adjacent(u, v);
            for (const auto& f : flips.flips)
                if (f.contains(u) && f.contains(v)) adj = !adj;
            if (adj) out.add_edge(u, v);
        }
    out.finish();
    if (g.roles()) out.set_roles(*g.roles());
    if (g.colors()) out.set_colors(*g.colors());
    return out;
}

// All 2^(n choose 2) labeled graphs on n vertices; only sane for n <= 4.
inline std::vector<Graph> all_labeled_graphs(std::size_t n) {
    std::vector<Edge> pairs;
    for (vertex_t i = 0; i < n; ++i)
        for (vertex_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<Graph> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1u) e.push_back(pairs[b]);
        out.push_back(Graph::from_edges(n, e));
    }
    return out;
}

} // namespace fwtest
