#pragma once

// Geometric realizations of interchanges: intervals and their containment
// order, the matching chord diagram, axis-aligned segments, unit squares,
// unit-distance and unit-disk point sets, plus the hypercube and subdivision
// structures. Every generator also records the lane/ramp designation so the
// computed graph can be validated as an interchange.

#include <cmath>
#include <vector>

#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"
#include "flipwidth/scene.hpp"

namespace flipwidth {

namespace detail {

// Shared designation bookkeeping: lanes 0..n-1 first, ramp objects following
// in lexicographic pair order with distinct tie-break rationals eps in (0, 1/2).
struct LaneRampLayout {
    int n;
    std::vector<LanePair> pairs;
    std::vector<Rat> eps;

    explicit LaneRampLayout(int order, InterchangeMode mode = InterchangeMode::weak) : n(order) {
        pairs = required_ramp_pairs(n, mode);
        for (std::size_t q = 0; q < pairs.size(); ++q)
            eps.push_back(Rat(static_cast<int>(q) + 1, 2 * (static_cast<int>(pairs.size()) + 1)));
    }

    void stamp(Scene& s) const {
        s.roles.assign(static_cast<std::size_t>(n) + pairs.size(), Role::ramp);
        for (int i = 0; i < n; ++i) s.roles[i] = Role::lane;
        for (int i = 0; i < n; ++i) s.lanes.push_back(static_cast<vertex_t>(i));
        for (std::size_t q = 0; q < pairs.size(); ++q)
            s.ramp_map[pairs[q]] = static_cast<vertex_t>(n + q);
    }
};

inline Graph graph_from_predicate(const Scene& s, auto&& adjacent) {
    std::size_t m = s.object_count();
    Graph g(m);
    for (vertex_t a = 0; a < m; ++a)
        for (vertex_t b = a + 1; b < m; ++b)
            if (adjacent(a, b)) g.add_edge(a, b);
    g.finish();
    if (!s.roles.empty()) g.set_roles(s.roles);
    return g;
}

} // namespace detail

// Wraps a scene's designation into an Interchange over the given graph.
inline Interchange scene_interchange(const Scene& s, Graph g,
                                     InterchangeMode mode = InterchangeMode::weak) {
    Interchange ic;
    ic.graph = std::move(g);
    ic.lanes = s.lanes;
    ic.ramps = s.ramp_map;
    ic.mode = mode;
    return ic;
}

// ------------------------------------------------------------- intervals

// Lane i occupies [3i, 3i+1]; the ramp of pair (i,j) spans all its lanes with
// a pair-specific margin so every endpoint is distinct.
inline Scene gen_intervals(int n) {
    if (n < 4) throw domain_error("interval construction needs order >= 4");
    detail::LaneRampLayout layout(n);
    Scene s;
    s.kind = SceneKind::intervals;
    for (int i = 0; i < n; ++i) s.intervals.push_back({Rat(3 * i), Rat(3 * i + 1)});
    for (std::size_t q = 0; q < layout.pairs.size(); ++q) {
        auto [i, j] = layout.pairs[q];
        s.intervals.push_back({Rat(3 * i) - layout.eps[q], Rat(3 * j + 1) + layout.eps[q]});
    }
    layout.stamp(s);
    return s;
}

inline Graph interval_intersection_graph(const Scene& s) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        const Interval &u = s.intervals[a], &v = s.intervals[b];
        return u.lo <= v.hi && v.lo <= u.hi;
    });
}

inline Graph interval_containment_graph(const Scene& s) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        const Interval &u = s.intervals[a], &v = s.intervals[b];
        return (u.lo <= v.lo && v.hi <= u.hi) || (v.lo <= u.lo && u.hi <= v.hi);
    });
}

// --------------------------------------------------------------- chords

// Two-arc diagram of the containment order: chord endpoints sit on a circle
// with the upper arc ordered by left endpoint and the lower arc by right
// endpoint, so chords cross exactly when one interval contains the other.
inline Scene permutation_to_chords(const Scene& intervals) {
    std::size_t m = intervals.intervals.size();
    std::vector<std::size_t> by_lo(m), by_hi(m);
    std::iota(by_lo.begin(), by_lo.end(), 0);
    by_hi = by_lo;
    std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
        return intervals.intervals[a].lo < intervals.intervals[b].lo;
    });
    std::sort(by_hi.begin(), by_hi.end(), [&](std::size_t a, std::size_t b) {
        return intervals.intervals[a].hi < intervals.intervals[b].hi;
    });
    std::vector<int> lo_rank(m), hi_rank(m);
    for (std::size_t r = 0; r < m; ++r) {
        lo_rank[by_lo[r]] = static_cast<int>(r);
        hi_rank[by_hi[r]] = static_cast<int>(r);
    }
    Scene s;
    s.kind = SceneKind::chords;
    for (std::size_t k = 0; k < m; ++k)
        s.chords.push_back({lo_rank[k], 2 * static_cast<int>(m) - 1 - hi_rank[k]});
    s.roles = intervals.roles;
    s.lanes = intervals.lanes;
    s.ramp_map = intervals.ramp_map;
    return s;
}

inline Graph chord_intersection_graph(const Scene& s) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        int lo = std::min(s.chords[a].a, s.chords[a].b);
        int hi = std::max(s.chords[a].a, s.chords[a].b);
        bool in1 = s.chords[b].a > lo && s.chords[b].a < hi;
        bool in2 = s.chords[b].b > lo && s.chords[b].b < hi;
        return in1 != in2;
    });
}

// -------------------------------------------------------------- segments

// Lanes are tall vertical segments, ramps horizontal segments at distinct
// heights spanning exactly their lanes.
inline Scene gen_segments(int n) {
    if (n < 4) throw domain_error("segment construction needs order >= 4");
    detail::LaneRampLayout layout(n);
    Scene s;
    s.kind = SceneKind::segments;
    for (int i = 0; i < n; ++i) {
        Rat x = Rat(6 * i + 1, 2);
        s.segments.push_back({{x, Rat(0)}, {x, Rat(3)}});
    }
    int p = static_cast<int>(layout.pairs.size());
    for (std::size_t q = 0; q < layout.pairs.size(); ++q) {
        auto [i, j] = layout.pairs[q];
        Rat y = Rat(1) + Rat(static_cast<int>(q) + 1, p + 1);
        s.segments.push_back({{Rat(3 * i) - layout.eps[q], y}, {Rat(3 * j + 1) + layout.eps[q], y}});
    }
    layout.stamp(s);
    return s;
}

// Closed intersection of axis-aligned segments: box overlap is exact because
// parallel distinct lines never share a box.
inline Graph segment_intersection_graph(const Scene& s) {
    auto box_overlap = [](const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2) {
        return std::min(a1, a2) <= std::max(b1, b2) && std::min(b1, b2) <= std::max(a1, a2);
    };
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        const SegmentObj &u = s.segments[a], &v = s.segments[b];
        return box_overlap(u.p.x, u.q.x, v.p.x, v.q.x) && box_overlap(u.p.y, u.q.y, v.p.y, v.q.y);
    });
}

// --------------------------------------------------------------- squares

// The interval construction placed on the main diagonal, scaled so the whole
// configuration has x-extent below one: lanes become unit squares under the
// diagonal, ramps unit squares above it.
inline Scene gen_unit_squares(int n) {
    Scene base = gen_intervals(n);
    Rat scale(1, 3 * n);
    Scene s;
    s.kind = SceneKind::squares;
    for (std::size_t k = 0; k < base.intervals.size(); ++k) {
        Rat a = base.intervals[k].lo * scale;
        Rat b = base.intervals[k].hi * scale;
        if (b - a >= 1) throw construction_error("interval too long for a unit square");
        if (base.roles[k] == Role::lane)
            s.squares.push_back({{a, b - 1}});
        else
            s.squares.push_back({{b - 1, a}});
    }
    s.roles = base.roles;
    s.lanes = base.lanes;
    s.ramp_map = base.ramp_map;
    return s;
}

inline Graph square_intersection_graph(const Scene& s) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        const RatPt &u = s.squares[a].corner, &v = s.squares[b].corner;
        Rat dx = u.x - v.x, dy = u.y - v.y;
        if (dx < 0) dx = -dx;
        if (dy < 0) dy = -dy;
        return dx <= 1 && dy <= 1;
    });
}

// ---------------------------------------------------- unit distance/disks

// Lanes equally spaced on a segment of length 19/10 < 2; the ramp of (i,j)
// sits at the upper crossing of the unit circles around its lanes.
inline Scene gen_unit_distance(int n) {
    if (n < 4) throw domain_error("unit-distance construction needs order >= 4");
    detail::LaneRampLayout layout(n);
    Scene s;
    s.kind = SceneKind::points2d;
    double delta = 19.0 / (10.0 * (n - 1));
    for (int i = 0; i < n; ++i) s.points2f.push_back({i * delta, 0.0});
    for (auto [i, j] : layout.pairs) {
        double mid = (i + j) * delta / 2.0;
        double q = (j - i) * delta / 2.0;
        s.points2f.push_back({mid, std::sqrt(1.0 - q * q)});
    }
    layout.stamp(s);
    return s;
}

inline Scene gen_unit_disks(int n) {
    Scene s = gen_unit_distance(n);
    for (auto& p : s.points2f) {
        p.x *= 2.0;
        p.y *= 2.0;
    }
    return s;
}

inline Graph unit_distance_graph(const Scene& s, double tol = 1e-9) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        double dx = s.points2f[a].x - s.points2f[b].x;
        double dy = s.points2f[a].y - s.points2f[b].y;
        return std::abs(std::hypot(dx, dy) - 1.0) <= tol;
    });
}

inline Graph unit_disk_graph(const Scene& s, double tol = 1e-9) {
    return detail::graph_from_predicate(s, [&](vertex_t a, vertex_t b) {
        double dx = s.points2f[a].x - s.points2f[b].x;
        double dy = s.points2f[a].y - s.points2f[b].y;
        return std::hypot(dx, dy) <= 2.0 + tol;
    });
}

// ------------------------------------------- hypercubes and subdivisions

inline Graph gen_hypercube(unsigned d) {
    std::size_t n = std::size_t{1} << d;
    Graph g(n);
    for (vertex_t v = 0; v < n; ++v)
        for (unsigned b = 0; b < d; ++b) {
            vertex_t u = v ^ (1u << b);
            if (v < u) g.add_edge(v, u);
        }
    g.finish();
    return g;
}

// Singletons as lanes, two-element sets as ramps: a strong sparse interchange
// of order d living inside the hypercube.
inline Interchange hypercube_interchange(unsigned d) {
    if (d < 2) throw domain_error("hypercube interchange needs dimension >= 2");
    Interchange ic;
    ic.mode = InterchangeMode::strong;
    ic.graph = gen_hypercube(d);
    std::vector<Role> roles(ic.graph.n(), Role::plain);
    for (unsigned i = 0; i < d; ++i) {
        ic.lanes.push_back(1u << i);
        roles[1u << i] = Role::lane;
    }
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = i + 1; j < d; ++j) {
            vertex_t r = (1u << i) | (1u << j);
            ic.ramps[{static_cast<int>(i), static_cast<int>(j)}] = r;
            roles[r] = Role::ramp;
        }
    ic.graph.set_roles(std::move(roles));
    return ic;
}

// K_n with every edge subdivided once: originals are lanes, subdivision
// points ramps; a strong sparse interchange of order n.
inline Interchange gen_subdivided_complete(int n) {
    if (n < 2) throw domain_error("subdivided complete graph needs n >= 2");
    Interchange ic;
    ic.mode = InterchangeMode::strong;
    std::size_t total = n + static_cast<std::size_t>(n) * (n - 1) / 2;
    ic.graph = Graph(total);
    std::vector<Role> roles(total, Role::lane);
    for (int i = 0; i < n; ++i) ic.lanes.push_back(static_cast<vertex_t>(i));
    vertex_t next = static_cast<vertex_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ic.ramps[{i, j}] = next;
            roles[next] = Role::ramp;
            ic.graph.add_edge(next, static_cast<vertex_t>(i));
            ic.graph.add_edge(next, static_cast<vertex_t>(j));
            ++next;
        }
    ic.graph.finish();
    ic.graph.set_roles(std::move(roles));
    return ic;
}

// K_{a,b} with every edge subdivided once. Vertex layout: a left originals,
// b right originals, then the a*b subdivision points row by row.
inline Graph gen_subdivided_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw domain_error("bipartite sides must be positive");
    std::size_t total = static_cast<std::size_t>(a) + b + static_cast<std::size_t>(a) * b;
    Graph g(total);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            vertex_t mid = static_cast<vertex_t>(a + b + i * b + j);
            g.add_edge(mid, static_cast<vertex_t>(i));
            g.add_edge(mid, static_cast<vertex_t>(a + j));
        }
    g.finish();
    return g;
}

} // namespace flipwidth
