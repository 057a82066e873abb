#pragma once

// Encoding arbitrary graphs into colored sparse interchanges and recovering
// them with fixed first-order formulas: phi decodes marked ramps back into
// edges, psi recovers the lane order of a dense interchange, and gamma turns
// a dense interchange into the matching sparse one. The formulas are
// evaluated as literal quantifier loops; there are only three of them.

#include <vector>

#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"

namespace flipwidth {

// A strong interchange with the three monadic predicates of the appendix
// construction: A marks chosen ramps, R holds on every ramp, F on the first
// lane.
struct ColoredInterchange {
    Interchange ic;
    std::vector<bool> A; // over graph vertices; only ramps may be marked

    bool ramp_pred(vertex_t v) const { return ramp_mask_[v]; }
    bool first_pred(vertex_t v) const { return v == ic.lanes.front(); }
    bool marked(vertex_t v) const { return A[v]; }

    void rebuild_predicates() {
        ramp_mask_.assign(ic.graph.n(), false);
        for (auto [pair, r] : ic.ramps) ramp_mask_[r] = true;
        for (vertex_t v = 0; v < ic.graph.n(); ++v)
            if (A[v] && !ramp_mask_[v]) throw domain_error("marking outside the ramps");
    }

private:
    std::vector<bool> ramp_mask_;
};

// Represents G inside a sparse strong interchange of order |G|: lanes are
// identified with G's vertices in id order and the ramp of pair (u,v) is
// marked iff uv is an edge.
inline ColoredInterchange encode_graph(const Graph& g) {
    if (g.n() < 2) throw domain_error("encode_graph needs at least two vertices");
    ColoredInterchange ci;
    ci.ic = build_abstract(static_cast<int>(g.n()), InterchangeMode::strong,
                           OptionalPolicy::none());
    ci.A.assign(ci.ic.graph.n(), false);
    for (auto [pair, ramp] : ci.ic.ramps)
        if (g.adjacent(static_cast<vertex_t>(pair.first), static_cast<vertex_t>(pair.second)))
            ci.A[ramp] = true;
    ci.rebuild_predicates();
    return ci;
}

// phi(x,y) = exists z: x~z and y~z and A(z). Returns the graph induced on the
// given lanes by the decoded edge relation; vertex k of the result is
// lane_subset[k].
inline Graph decode_phi(const ColoredInterchange& ci, const std::vector<int>& lane_subset) {
    const Graph& g = ci.ic.graph;
    Graph out(lane_subset.size());
    for (std::size_t a = 0; a < lane_subset.size(); ++a)
        for (std::size_t b = a + 1; b < lane_subset.size(); ++b) {
            vertex_t x = ci.ic.lanes.at(lane_subset[a]);
            vertex_t y = ci.ic.lanes.at(lane_subset[b]);
            bool edge = false;
            for (vertex_t z = 0; z < g.n() && !edge; ++z)
                edge = ci.marked(z) && g.adjacent(x, z) && g.adjacent(y, z);
            if (edge) out.add_edge(static_cast<vertex_t>(a), static_cast<vertex_t>(b));
        }
    out.finish();
    return out;
}

// psi(x,y) = (F(x) and x != y) or exists w,z: F(w) and R(z) and w~z and x~z
// and not y~z. On a dense strong interchange this recovers the lane order.
inline bool psi_order(const ColoredInterchange& ci, vertex_t x, vertex_t y) {
    const Graph& g = ci.ic.graph;
    if (ci.first_pred(x) && x != y) return true;
    for (vertex_t z = 0; z < g.n(); ++z) {
        if (!ci.ramp_pred(z) || !g.adjacent(x, z) || g.adjacent(y, z)) continue;
        for (vertex_t w = 0; w < g.n(); ++w)
            if (ci.first_pred(w) && g.adjacent(w, z)) return true;
    }
    return false;
}

// gamma(x,z) = not R(x) and R(z) and x~z and there are no lanes u,v adjacent
// to z with psi(u,x) and psi(x,v); i.e. x is the smallest or largest lane
// among z's neighbors.
inline bool gamma_incidence(const ColoredInterchange& ci, vertex_t x, vertex_t z) {
    const Graph& g = ci.ic.graph;
    if (ci.ramp_pred(x) || !ci.ramp_pred(z) || !g.adjacent(x, z)) return false;
    for (vertex_t u = 0; u < g.n(); ++u) {
        if (ci.ramp_pred(u) || !g.adjacent(u, z) || !psi_order(ci, u, x)) continue;
        for (vertex_t v = 0; v < g.n(); ++v)
            if (!ci.ramp_pred(v) && g.adjacent(v, z) && psi_order(ci, x, v)) return false;
    }
    return true;
}

// Applies gamma to every (vertex, ramp) pair of a dense strong interchange.
// The result is the edge set of the sparse strong interchange with the same
// lanes and ramps.
inline Graph dense_to_sparse(const ColoredInterchange& ci) {
    const Graph& g = ci.ic.graph;
    // psi restricted to lanes, memoized; gamma only consults lane pairs.
    std::size_t n = g.n();
    std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
    for (vertex_t x = 0; x < n; ++x)
        for (vertex_t y = 0; y < n; ++y)
            if (!ci.ramp_pred(x) && !ci.ramp_pred(y)) before[x][y] = psi_order(ci, x, y);

    Graph out(n);
    for (vertex_t z = 0; z < n; ++z) {
        if (!ci.ramp_pred(z)) continue;
        for (vertex_t x = 0; x < n; ++x) {
            if (ci.ramp_pred(x) || !g.adjacent(x, z)) continue;
            bool extremal = true;
            for (vertex_t u = 0; u < n && extremal; ++u) {
                if (ci.ramp_pred(u) || !g.adjacent(u, z) || !before[u][x]) continue;
                for (vertex_t v = 0; v < n; ++v)
                    if (!ci.ramp_pred(v) && g.adjacent(v, z) && before[x][v]) {
                        extremal = false;
                        break;
                    }
            }
            if (extremal) out.add_edge(x, z);
        }
    }
    out.finish();
    if (g.roles()) out.set_roles(*g.roles());
    return out;
}

// Dresses a dense strong interchange with the R/F coloring (no marks).
inline ColoredInterchange color_interchange(Interchange ic) {
    ColoredInterchange ci;
    ci.ic = std::move(ic);
    ci.A.assign(ci.ic.graph.n(), false);
    ci.rebuild_predicates();
    return ci;
}

} // namespace flipwidth
