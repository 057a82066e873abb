#pragma once

// Exact plane arithmetic for the rational constructions. Points are kept in
// homogeneous integer form (x/w, y/w) with w > 0, so every predicate is an
// integer determinant and derived points (line crossings, midpoints) never
// need gcd normalization.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "flipwidth/errors.hpp"

namespace flipwidth {

// Expression templates stay off: deduced return types and lambdas would
// otherwise capture references to dead temporaries.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// boost::rational over an unbounded integer rejects negative denominators
// outright; normalize the sign first.
inline Rat make_rat(BigInt num, BigInt den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception& e) {
        throw parse_error(std::string("bad rational: ") + s);
    }
}

inline std::string rat_to_string(const Rat& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

struct RatPt {
    Rat x, y;
    bool operator==(const RatPt&) const = default;
};

struct HomoPt {
    BigInt x, y, w; // (x/w, y/w), w > 0

    HomoPt() : x(0), y(0), w(1) {}
    HomoPt(BigInt px, BigInt py, BigInt pw) : x(std::move(px)), y(std::move(py)), w(std::move(pw)) {
        if (w < 0) {
            x = -x;
            y = -y;
            w = -w;
        }
        if (w == 0) throw domain_error("homogeneous point at infinity");
    }
    explicit HomoPt(const RatPt& p) {
        BigInt dx = boost::multiprecision::denominator(p.x);
        BigInt dy = boost::multiprecision::denominator(p.y);
        x = boost::multiprecision::numerator(p.x) * dy;
        y = boost::multiprecision::numerator(p.y) * dx;
        w = dx * dy;
    }

    RatPt to_rat() const { return {Rat(x, w), Rat(y, w)}; }

    bool same_point(const HomoPt& o) const {
        return x * o.w == o.x * w && y * o.w == o.y * w;
    }
};

// Sign of the signed area of (a, b, c): positive for a left turn.
inline int orient(const HomoPt& a, const HomoPt& b, const HomoPt& c) {
    BigInt det = a.x * (b.y * c.w - b.w * c.y) - a.y * (b.x * c.w - b.w * c.x) +
                 a.w * (b.x * c.y - b.y * c.x);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

inline int sign(const BigInt& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
inline int sign(const Rat& v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// Collinearity-respecting 1D comparison: is q within the closed axis-aligned
// bounding box of a and b? Only meaningful once orient(a,b,q) == 0.
inline bool within_box(const HomoPt& a, const HomoPt& b, const HomoPt& q) {
    BigInt qa_x = q.x * a.w - a.x * q.w; // q - a, scaled by positive a.w*q.w
    BigInt qb_x = q.x * b.w - b.x * q.w;
    BigInt qa_y = q.y * a.w - a.y * q.w;
    BigInt qb_y = q.y * b.w - b.y * q.w;
    return sign(qa_x) * sign(qb_x) <= 0 && sign(qa_y) * sign(qb_y) <= 0;
}

inline bool on_segment(const HomoPt& a, const HomoPt& b, const HomoPt& q) {
    return orient(a, b, q) == 0 && within_box(a, b, q);
}

// Intersection point of the (infinite) lines ab and cd; requires them not to
// be parallel.
inline HomoPt line_intersection(const HomoPt& a, const HomoPt& b, const HomoPt& c,
                                const HomoPt& d) {
    // Projective line through two points, then line-line meet.
    BigInt l1x = a.y * b.w - a.w * b.y;
    BigInt l1y = a.w * b.x - a.x * b.w;
    BigInt l1w = a.x * b.y - a.y * b.x;
    BigInt l2x = c.y * d.w - c.w * d.y;
    BigInt l2y = c.w * d.x - c.x * d.w;
    BigInt l2w = c.x * d.y - c.y * d.x;
    BigInt px = l1y * l2w - l1w * l2y;
    BigInt py = l1w * l2x - l1x * l2w;
    BigInt pw = l1x * l2y - l1y * l2x;
    if (pw == 0) throw domain_error("parallel lines do not meet");
    return HomoPt(std::move(px), std::move(py), std::move(pw));
}

// Fraction of the way from a to b at which q lies; a, b, q must be collinear.
inline Rat segment_parameter(const HomoPt& a, const HomoPt& b, const HomoPt& q) {
    BigInt dx = b.x * a.w - a.x * b.w; // (b - a) scaled by a.w*b.w
    BigInt dy = b.y * a.w - a.y * b.w;
    bool use_x = boost::multiprecision::abs(dx) >= boost::multiprecision::abs(dy);
    // t = (q - a)/(b - a) on the dominant axis.
    if (use_x) {
        if (dx == 0) throw domain_error("degenerate segment");
        return make_rat((q.x * a.w - a.x * q.w) * b.w, dx * q.w);
    }
    if (dy == 0) throw domain_error("degenerate segment");
    return make_rat((q.y * a.w - a.y * q.w) * b.w, dy * q.w);
}

// A simple closed chain of rational points, counterclockwise.
struct Polygon {
    std::vector<RatPt> boundary;

    std::size_t size() const { return boundary.size(); }
};

namespace detail {

inline std::vector<HomoPt> homogenize(const Polygon& poly) {
    std::vector<HomoPt> out;
    out.reserve(poly.boundary.size());
    for (const auto& p : poly.boundary) out.emplace_back(p);
    return out;
}

} // namespace detail

// Twice the signed area; positive for counterclockwise boundaries.
inline Rat polygon_signed_area2(const Polygon& poly) {
    Rat acc = 0;
    std::size_t n = poly.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RatPt& p = poly.boundary[i];
        const RatPt& q = poly.boundary[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    return acc;
}

inline bool polygon_is_simple(const std::vector<HomoPt>& q) {
    std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const HomoPt &a = q[i], &b = q[(i + 1) % n];
            const HomoPt &c = q[j], &d = q[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            int o1 = orient(a, b, c), o2 = orient(a, b, d);
            int o3 = orient(c, d, a), o4 = orient(c, d, b);
            if (adjacent) {
                // Shared endpoint only; any other contact is a defect.
                if (o1 == 0 && o2 == 0) return false; // collinear neighbors overlap
                continue;
            }
            if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return false; // proper cross
            if ((o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
                (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b)))
                return false; // touching elsewhere
        }
    return true;
}

enum class PointSide { outside, boundary, inside };

inline PointSide point_in_polygon(const std::vector<HomoPt>& poly, const HomoPt& p) {
    std::size_t n = poly.size();
    // Crossing number with a half-open vertical rule: an upward edge counts
    // when p is strictly left of it, a downward edge when strictly right.
    std::vector<std::int8_t> ys(n);
    for (std::size_t i = 0; i < n; ++i)
        ys[i] = static_cast<std::int8_t>(sign(BigInt(poly[i].y * p.w - p.y * poly[i].w)));
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const HomoPt& a = poly[i];
        const HomoPt& b = poly[(i + 1) % n];
        int ya = ys[i], yb = ys[(i + 1) % n];
        if (ya * yb > 0) continue; // strictly above or strictly below
        int o = orient(a, b, p);
        if (o == 0 && within_box(a, b, p)) return PointSide::boundary;
        if (ya <= 0 && yb > 0) {
            if (o > 0) inside = !inside;
        } else if (yb <= 0 && ya > 0) {
            if (o < 0) inside = !inside;
        }
    }
    return inside ? PointSide::inside : PointSide::outside;
}

// Whether the closed segment pq lies entirely inside the closed polygon.
// Grazing contacts with the boundary (vertices, collinear edge overlaps) are
// allowed; the segment is split at every boundary touch and each open piece
// must stay inside. A proper boundary crossing exits immediately.
inline bool segment_in_polygon(const std::vector<HomoPt>& poly, const HomoPt& p,
                               const HomoPt& q) {
    std::size_t n = poly.size();
    // Cheap rejection: the midpoint has to be inside or on the boundary.
    HomoPt mid(p.x * q.w + q.x * p.w, p.y * q.w + q.y * p.w, 2 * p.w * q.w);
    if (point_in_polygon(poly, mid) == PointSide::outside) return false;
    std::vector<Rat> params{Rat(0), Rat(1)};
    std::vector<std::int8_t> vo(n, 2); // cached orient(p, q, vertex); 2 = unset
    auto vorient = [&](std::size_t i) {
        if (vo[i] == 2) vo[i] = static_cast<std::int8_t>(orient(p, q, poly[i]));
        return static_cast<int>(vo[i]);
    };
    for (std::size_t i = 0; i < n; ++i) {
        const HomoPt& a = poly[i];
        const HomoPt& b = poly[(i + 1) % n];
        int o1 = vorient(i), o2 = vorient((i + 1) % n);
        if (o1 * o2 > 0) continue; // edge strictly on one side of line pq
        int o3 = orient(a, b, p), o4 = orient(a, b, q);
        if (o1 && o2 && o3 && o4 && o1 != o2 && o3 != o4) return false; // proper crossing
        if (o1 == 0 && o2 == 0) { // collinear edge: clip it onto pq
            for (const HomoPt* e : {&a, &b}) {
                if (!within_box(p, q, *e)) continue;
                params.push_back(segment_parameter(p, q, *e));
            }
            continue;
        }
        if (o1 != o2 && o3 != o4) { // straddle (possibly at an endpoint)
            if (o3 == 0 || o4 == 0) {
                // p or q on the edge's line: record the touching endpoint.
                if (o3 == 0 && within_box(a, b, p)) params.push_back(Rat(0));
                if (o4 == 0 && within_box(a, b, q)) params.push_back(Rat(1));
                if (o3 != 0 && o4 != 0) params.push_back(segment_parameter(p, q, line_intersection(p, q, a, b)));
            } else if (o1 == 0 || o2 == 0) {
                const HomoPt& v = o1 == 0 ? a : b;
                if (within_box(p, q, v)) params.push_back(segment_parameter(p, q, v));
            } else {
                params.push_back(segment_parameter(p, q, line_intersection(p, q, a, b)));
            }
        } else if (o1 == 0 && within_box(p, q, a)) {
            params.push_back(segment_parameter(p, q, a));
        } else if (o2 == 0 && within_box(p, q, b)) {
            params.push_back(segment_parameter(p, q, b));
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    // Probe the midpoint of every piece (and the endpoints themselves).
    auto probe = [&](const Rat& t) {
        // point p + t (q - p), homogeneous
        BigInt tn = boost::multiprecision::numerator(t);
        BigInt td = boost::multiprecision::denominator(t);
        BigInt w = p.w * q.w * td;
        BigInt x = p.x * q.w * td + tn * (q.x * p.w - p.x * q.w);
        BigInt y = p.y * q.w * td + tn * (q.y * p.w - p.y * q.w);
        return point_in_polygon(poly, HomoPt(std::move(x), std::move(y), std::move(w))) !=
               PointSide::outside;
    };
    if (!probe(0) || !probe(1)) return false;
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        if (params[i] < 0 || params[i] > 1) continue;
        Rat hi = std::min(params[i + 1], Rat(1));
        if (params[i] >= hi) continue;
        if (!probe((params[i] + hi) / 2)) return false;
    }
    return true;
}

} // namespace flipwidth
