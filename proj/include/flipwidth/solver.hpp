#pragma once

// Exact radius-r flip-width on tiny graphs, by attractor computation over
// (active flips, robber vertex) states with the cops to move. Flip
// collections are canonicalized as sorted sets of vertex subsets; empty and
// singleton subsets never change adjacency and are left out of the state
// space.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flipwidth/graph.hpp"

namespace flipwidth {

struct SolveLimits {
    // Collections x vertices. The fixpoint is quadratic in the collection
    // count, so this also caps runtime; the default admits n <= 8 at t <= 1
    // and n <= 6 at t <= 2.
    std::size_t max_states = 200'000;
};

namespace detail {

struct FlipGame {
    std::size_t n = 0;
    std::uint32_t full = 0;
    std::vector<std::uint32_t> base_rows;
    std::vector<std::vector<std::uint32_t>> collections; // sorted distinct subsets, popcount>=2

    // Per collection: flipped adjacency rows, isolated-vertex mask, and the
    // robber's reach mask per vertex at the given radius.
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> iso;
    std::vector<std::vector<std::uint32_t>> reach;

    FlipGame(const Graph& g, std::uint32_t radius, std::size_t budget, const SolveLimits& lim) {
        n = g.n();
        if (n > 16) throw resource_error("exact solver limited to 16 vertices");
        full = n == 32 ? ~0u : ((1u << n) - 1);
        base_rows.assign(n, 0);
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v : g.neighbors(u)) base_rows[u] |= 1u << v;

        std::vector<std::uint32_t> subsets;
        for (std::uint32_t s = 0; s <= full; ++s)
            if (std::popcount(s) >= 2) subsets.push_back(s);

        double count = 0, choose = 1;
        for (std::size_t k = 0; k <= budget; ++k) {
            count += choose;
            choose = choose * (double(subsets.size()) - double(k)) / double(k + 1);
        }
        if (count * double(n) > double(lim.max_states))
            throw resource_error("flip-width state space exceeds configured bound");

        std::vector<std::uint32_t> cur;
        build_collections(subsets, 0, budget, cur);

        rows.resize(collections.size());
        iso.assign(collections.size(), 0);
        reach.resize(collections.size());
        for (std::size_t f = 0; f < collections.size(); ++f) {
            auto& r = rows[f];
            r = base_rows;
            for (std::uint32_t s : collections[f])
                for (vertex_t v = 0; v < n; ++v)
                    if ((s >> v) & 1u) r[v] ^= s & ~(1u << v);
            for (vertex_t v = 0; v < n; ++v)
                if (r[v] == 0) iso[f] |= 1u << v;
            reach[f].assign(n, 0);
            for (vertex_t v = 0; v < n; ++v) {
                std::uint32_t seen = 1u << v, frontier = seen;
                for (std::uint32_t step = 0; frontier && step < radius; ++step) {
                    std::uint32_t next = 0;
                    for (vertex_t u = 0; u < n; ++u)
                        if ((frontier >> u) & 1u) next |= r[u];
                    frontier = next & ~seen;
                    seen |= next;
                }
                reach[f][v] = seen;
            }
        }
    }

    void build_collections(const std::vector<std::uint32_t>& subsets, std::size_t from,
                           std::size_t room, std::vector<std::uint32_t>& cur) {
        collections.push_back(cur);
        if (room == 0) return;
        for (std::size_t k = from; k < subsets.size(); ++k) {
            cur.push_back(subsets[k]);
            build_collections(subsets, k + 1, room - 1, cur);
            cur.pop_back();
        }
    }
};

// True iff the cops win with the given budget: for every robber start, the
// (no active flips, start) state lies in the cop attractor.
inline bool cops_win(const Graph& g, std::uint32_t radius, std::size_t budget,
                     const SolveLimits& lim) {
    FlipGame game(g, radius, budget, lim);
    const std::size_t F = game.collections.size();
    const std::size_t n = game.n;
    std::vector<std::uint32_t> win(F, 0); // per collection: mask of cop-winning robber spots
    std::vector<std::uint32_t> kill(F, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t f2 = 0; f2 < F; ++f2) kill[f2] = game.iso[f2] | win[f2];
        for (std::size_t f = 0; f < F; ++f) {
            for (vertex_t v = 0; v < n; ++v) {
                if ((win[f] >> v) & 1u) continue;
                std::uint32_t r = game.reach[f][v];
                for (std::size_t f2 = 0; f2 < F; ++f2) {
                    if ((r & ~kill[f2]) == 0) {
                        win[f] |= 1u << v;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    return win[0] == game.full; // collections[0] is the empty collection
}

} // namespace detail

// Least t <= t_max with which the cops catch a radius-r robber; nullopt when
// even t_max flips per move do not suffice.
inline std::optional<std::size_t> exact_flip_width(const Graph& g, std::uint32_t radius,
                                                   std::size_t t_max,
                                                   const SolveLimits& lim = {}) {
    if (g.n() == 0) throw domain_error("empty graph");
    for (std::size_t t = 0; t <= t_max; ++t)
        if (detail::cops_win(g, radius, t, lim)) return t;
    return std::nullopt;
}

} // namespace flipwidth
