#pragma once

// Visibility-polygon realization. Lanes sit on y = 0; each consecutive-pair
// ramp is a triangle apex above, each farther pair a triangle apex on the
// common line y = -H below, x-staggered so no two apexes align. Every
// triangle's base is on y = 0, so the union below the lane line is
// x-monotone and its boundary is the exact lower envelope of the triangle
// "tents"; the top boundary is the zigzag of the consecutive-ramp triangles.
// Every lane and every apex is a vertex of the resulting simple polygon.

#include <map>
#include <vector>

#include "flipwidth/exact.hpp"
#include "flipwidth/scene.hpp"

namespace flipwidth {

namespace detail {

struct Tent {
    HomoPt left, apex, right; // base points on y = 0, apex below
};

// Unnormalized fraction with positive denominator; comparisons by
// cross-multiplication, no gcd work.
struct Frac {
    BigInt num, den;
    Frac(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
    }
    bool operator<(const Frac& o) const { return num * o.den < o.num * den; }
};

// Projective line coefficients through two points: Lx*X + Ly*Y + Lw*W = 0.
struct LineCoeffs {
    BigInt lx, ly, lw;
    LineCoeffs(const HomoPt& a, const HomoPt& b)
        : lx(a.y * b.w - a.w * b.y), ly(a.w * b.x - a.x * b.w), lw(a.x * b.y - a.y * b.x) {}

    // y value at abscissa xn/xd (the line must not be vertical).
    Frac value_at(const BigInt& xn, const BigInt& xd) const {
        return Frac(-(lx * xn + lw * xd), ly * xd);
    }
};

} // namespace detail

struct VisibilityScene {
    Scene scene; // kind == polygon, objects = designated vertices
};

// Builds the polygon for an order-n interchange. Needs n >= 5: at order 4
// only consecutive ramps exist and the triangle union pinches at the lanes
// instead of forming a simple polygon.
inline Scene gen_visibility_polygon(int n) {
    if (n < 5)
        throw construction_error(
            "visibility construction needs order >= 5 (no below-line ramps at order 4)");
    auto pairs = required_ramp_pairs(n, InterchangeMode::weak);
    const Rat H(3); // depth of the below line

    // Designated coordinates.
    std::vector<RatPt> lane_pt(n);
    for (int i = 0; i < n; ++i) lane_pt[i] = {Rat(4 * i), Rat(0)};
    std::map<LanePair, RatPt> ramp_pt;
    std::vector<LanePair> below;
    {
        std::size_t rank = 0;
        for (auto [i, j] : pairs) {
            if (j == i + 1) {
                ramp_pt[{i, j}] = {Rat(4 * i + 2), Rat(2)};
            } else {
                Rat stagger(static_cast<int>(rank) + 1, 2 * (static_cast<int>(pairs.size()) + 1));
                ramp_pt[{i, j}] = {Rat(2 * (i + j)) + stagger, -H};
                below.push_back({i, j});
            }
            ++rank;
        }
    }

    // Tents of the below triangles.
    std::vector<detail::Tent> tents;
    for (auto [i, j] : below)
        tents.push_back({HomoPt(lane_pt[i]), HomoPt(ramp_pt[{i, j}]), HomoPt(lane_pt[j])});

    // Candidate abscissas: tent corners plus all boundary-segment crossings.
    std::vector<Rat> xs;
    for (const auto& t : tents) {
        xs.push_back(Rat(t.left.x, t.left.w));
        xs.push_back(Rat(t.apex.x, t.apex.w));
        xs.push_back(Rat(t.right.x, t.right.w));
    }
    std::vector<std::array<HomoPt, 2>> segs;
    for (const auto& t : tents) {
        segs.push_back({t.left, t.apex});
        segs.push_back({t.apex, t.right});
    }
    for (std::size_t a = 0; a < segs.size(); ++a)
        for (std::size_t b = a + 1; b < segs.size(); ++b) {
            const auto& [p, q] = segs[a];
            const auto& [r, s] = segs[b];
            int o1 = orient(p, q, r), o2 = orient(p, q, s);
            int o3 = orient(r, s, p), o4 = orient(r, s, q);
            if (o1 != o2 && o3 != o4) {
                HomoPt x = line_intersection(p, q, r, s);
                if (within_box(p, q, x) && within_box(r, s, x)) xs.push_back(Rat(x.x, x.w));
            }
        }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    // March the envelope: per interval the owning tent side is constant.
    struct Owner {
        std::size_t tent;
        int side;
    };
    std::vector<std::array<detail::LineCoeffs, 2>> sides;
    std::vector<std::pair<Rat, Rat>> spans;
    for (const auto& t : tents) {
        sides.push_back({detail::LineCoeffs(t.left, t.apex), detail::LineCoeffs(t.apex, t.right)});
        spans.push_back({Rat(t.left.x, t.left.w), Rat(t.right.x, t.right.w)});
    }
    std::vector<Owner> owners;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        Rat mid = (xs[k] + xs[k + 1]) / 2;
        BigInt xn = boost::multiprecision::numerator(mid);
        BigInt xd = boost::multiprecision::denominator(mid);
        bool found = false;
        detail::Frac best(0, 1);
        Owner who{0, 0};
        for (std::size_t t = 0; t < tents.size(); ++t) {
            if (mid < spans[t].first || mid > spans[t].second) continue;
            detail::Frac lv = sides[t][0].value_at(xn, xd);
            detail::Frac rv = sides[t][1].value_at(xn, xd);
            int side = lv < rv ? 1 : 0; // tent bound is the larger line value
            detail::Frac v = side == 1 ? std::move(rv) : std::move(lv);
            if (!found || v < best) {
                found = true;
                best = std::move(v);
                who = {t, side};
            }
        }
        if (!found) throw construction_error("below-line coverage gap between lanes");
        if (best.num >= 0) throw construction_error("below envelope reaches the lane line");
        if (owners.empty() || owners.back().tent != who.tent || owners.back().side != who.side)
            owners.push_back(who);
    }

    auto side_seg = [&](const Owner& o) -> std::array<HomoPt, 2> {
        const auto& t = tents[o.tent];
        return o.side == 0 ? std::array<HomoPt, 2>{t.left, t.apex}
                           : std::array<HomoPt, 2>{t.apex, t.right};
    };

    // Bottom chain from lane 0 to lane n-1: a vertex at every owner change.
    std::vector<RatPt> bottom{lane_pt[0]};
    for (std::size_t k = 0; k + 1 < owners.size(); ++k) {
        auto [p, q] = side_seg(owners[k]);
        auto [r, s] = side_seg(owners[k + 1]);
        HomoPt v = (q.same_point(r)) ? q : line_intersection(p, q, r, s);
        bottom.push_back(v.to_rat());
    }
    bottom.push_back(lane_pt[n - 1]);

    // Assemble counterclockwise: bottom left-to-right, then the top zigzag
    // right-to-left (interior lies above the bottom chain).
    Polygon poly;
    std::map<std::pair<std::string, std::string>, std::size_t> index_of;
    auto push = [&](const RatPt& p) {
        poly.boundary.push_back(p);
        index_of[{rat_to_string(p.x), rat_to_string(p.y)}] = poly.boundary.size() - 1;
    };
    for (const auto& p : bottom) push(p);
    for (int i = n - 2; i >= 1; --i) {
        push(ramp_pt[{i, i + 1}]);
        push(lane_pt[i]);
    }
    push(ramp_pt[{0, 1}]);

    // Every designated vertex must have survived onto the boundary.
    auto locate = [&](const RatPt& p) {
        auto it = index_of.find({rat_to_string(p.x), rat_to_string(p.y)});
        if (it == index_of.end())
            throw construction_error("designated vertex swallowed by the union");
        return it->second;
    };

    Scene s;
    s.kind = SceneKind::polygon;
    s.polygon = std::move(poly);
    for (int i = 0; i < n; ++i) {
        s.designated.push_back(locate(lane_pt[i]));
        s.roles.push_back(Role::lane);
        s.lanes.push_back(static_cast<vertex_t>(i));
    }
    std::size_t obj = n;
    for (auto [i, j] : pairs) {
        s.designated.push_back(locate(ramp_pt[{i, j}]));
        s.roles.push_back(Role::ramp);
        s.ramp_map[{i, j}] = static_cast<vertex_t>(obj++);
    }
    return s;
}

// Visibility among the designated vertices: an edge whenever the closed
// segment stays inside the closed polygon (grazing a reflex vertex or
// sliding along an edge counts as seeing).
inline Graph visibility_graph(const Polygon& poly, const std::vector<std::size_t>& designated) {
    auto hp = detail::homogenize(poly);
    std::size_t m = designated.size();
    Graph g(m);
    for (vertex_t a = 0; a < m; ++a)
        for (vertex_t b = a + 1; b < m; ++b)
            if (segment_in_polygon(hp, hp[designated[a]], hp[designated[b]])) g.add_edge(a, b);
    g.finish();
    return g;
}

inline Graph visibility_graph(const Scene& s) {
    Graph g = visibility_graph(s.polygon, s.designated);
    if (!s.roles.empty()) g.set_roles(s.roles);
    return g;
}

} // namespace flipwidth
