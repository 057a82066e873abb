#pragma once

// Diversity measures for the radius-1 escape: minimum symmetric difference of
// open neighborhoods inside an induced subgraph, its colored variant over
// properly-colored (bichromatic) edges, and the tilted-grid ramp selection
// that makes dense interchanges diverse.

#include <cstdint>
#include <limits>
#include <vector>

#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"

namespace flipwidth {

// Sentinel for "no same-color pair constrains the measure".
inline constexpr std::size_t kUnconstrainedDiversity = std::numeric_limits<std::size_t>::max();

struct ColoredSubgraph {
    const Graph* base = nullptr;
    std::vector<vertex_t> members;
    std::vector<int> coloring; // 1..chi per member; chi = 1 means uncolored
};

namespace detail {

// Neighborhood bitmasks of the members inside the induced (and, with a
// coloring, properly-colored) subgraph, indexed by member position.
inline std::vector<std::vector<std::uint64_t>> member_neighborhoods(
    const Graph& g, const std::vector<vertex_t>& members, const std::vector<int>* coloring) {
    std::size_t m = members.size();
    std::size_t words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m, std::vector<std::uint64_t>(words, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            if (!g.adjacent(members[a], members[b])) continue;
            if (coloring && (*coloring)[a] == (*coloring)[b]) continue; // improper edge dropped
            rows[a][b / 64] |= 1ull << (b % 64);
            rows[b][a / 64] |= 1ull << (a % 64);
        }
    return rows;
}

inline std::size_t symmetric_difference(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] ^ b[w]);
    return c;
}

} // namespace detail

// Symmetric difference of the open neighborhoods of members[a] and members[b]
// inside the induced subgraph on S. Exposed for the per-pair examples.
inline std::size_t pair_neighborhood_difference(const Graph& g, const std::vector<vertex_t>& S,
                                                std::size_t a, std::size_t b) {
    auto rows = detail::member_neighborhoods(g, S, nullptr);
    return detail::symmetric_difference(rows[a], rows[b]);
}

// Minimum over vertex pairs of S of the neighborhood symmetric difference
// within the induced subgraph.
inline std::size_t diversity(const Graph& g, const std::vector<vertex_t>& S) {
    if (S.size() < 2) throw domain_error("diversity needs at least two vertices");
    auto rows = detail::member_neighborhoods(g, S, nullptr);
    std::size_t best = kUnconstrainedDiversity;
    for (std::size_t a = 0; a < S.size(); ++a)
        for (std::size_t b = a + 1; b < S.size(); ++b)
            best = std::min(best, detail::symmetric_difference(rows[a], rows[b]));
    return best;
}

// Colored variant: improperly colored (same-color) edges are removed and the
// minimum runs over same-color pairs only. chi = 1 keeps every edge and
// compares all pairs, matching the uncolored measure. Returns
// kUnconstrainedDiversity when every color class is a singleton.
inline std::size_t chi_diversity(const ColoredSubgraph& cs) {
    if (!cs.base) throw domain_error("colored subgraph without base graph");
    if (cs.members.size() < 2) throw domain_error("chi_diversity needs at least two members");
    if (cs.coloring.size() != cs.members.size())
        throw domain_error("coloring must cover the members");
    int chi = *std::max_element(cs.coloring.begin(), cs.coloring.end());
    auto rows = detail::member_neighborhoods(*cs.base, cs.members,
                                             chi == 1 ? nullptr : &cs.coloring);
    std::size_t best = kUnconstrainedDiversity;
    for (std::size_t a = 0; a < cs.members.size(); ++a)
        for (std::size_t b = a + 1; b < cs.members.size(); ++b) {
            if (chi != 1 && cs.coloring[a] != cs.coloring[b]) continue;
            best = std::min(best, detail::symmetric_difference(rows[a], rows[b]));
        }
    return best;
}

// All lane pairs (x, y), x < y < n, with y - x >= k and x ≡ ky (mod k²+1).
// As grid points these are pairwise L1-separated by at least k+1.
inline std::vector<LanePair> tilted_grid_ramps(int n, int k) {
    if (k < 1) throw domain_error("tilted grid needs k >= 1");
    if (n <= k) return {};
    std::vector<LanePair> out;
    long long mod = static_cast<long long>(k) * k + 1;
    for (int y = 0; y < n; ++y) {
        long long rem = (static_cast<long long>(k) * y) % mod;
        for (long long x = rem; x <= y - k; x += mod)
            out.push_back({static_cast<int>(x), y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The two-colored diverse subgraph of a dense interchange: every lane plus
// the tilted-grid ramps, lanes colored 1 and ramps 2.
inline ColoredSubgraph diverse_interchange_subgraph(const Interchange& ic, int k) {
    ColoredSubgraph cs;
    cs.base = &ic.graph;
    for (vertex_t lane : ic.lanes) {
        cs.members.push_back(lane);
        cs.coloring.push_back(1);
    }
    for (auto [i, j] : tilted_grid_ramps(ic.order(), k)) {
        cs.members.push_back(ic.ramp_at(i, j));
        cs.coloring.push_back(2);
    }
    return cs;
}

} // namespace flipwidth
