#pragma once

// Typed geometric object sets. Each generator returns a Scene whose objects
// correspond one-to-one with the vertices of the graph computed from it;
// lanes/ramp_map tie the scene to an interchange designation when there is
// one. Exact kinds carry rationals (serialized as "p/q"), the rest doubles.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "flipwidth/exact.hpp"
#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"

namespace flipwidth {

enum class SceneKind : std::uint8_t {
    intervals,
    chords,
    segments,
    squares,
    points2d,
    points3d,
    points4d,
    polygon,
};

inline const char* scene_kind_name(SceneKind k) {
    switch (k) {
        case SceneKind::intervals: return "intervals";
        case SceneKind::chords: return "chords";
        case SceneKind::segments: return "segments";
        case SceneKind::squares: return "squares";
        case SceneKind::points2d: return "points2d";
        case SceneKind::points3d: return "points3d";
        case SceneKind::points4d: return "points4d";
        default: return "polygon";
    }
}

struct Interval {
    Rat lo, hi;
};

struct ChordObj {
    int a, b; // positions on a circle with 2*count slots
};

struct SegmentObj {
    RatPt p, q;
};

struct SquareObj {
    RatPt corner; // lower-left; unit side
};

struct Vec2 {
    double x, y;
};
struct Vec3 {
    double x, y, z;
};
struct Vec4 {
    double x, y, z, w;
};

struct Scene {
    SceneKind kind = SceneKind::intervals;

    std::vector<Interval> intervals;
    std::vector<ChordObj> chords;
    std::vector<SegmentObj> segments;
    std::vector<SquareObj> squares;
    std::vector<RatPt> points2q; // exact kinds reuse points2d with rationals
    std::vector<Vec2> points2f;
    std::vector<Vec3> points3f;
    std::vector<Vec4> points4f;
    Polygon polygon;                      // kind == polygon
    std::vector<std::size_t> designated;  // polygon: boundary index per object

    std::vector<Role> roles; // per object
    std::vector<vertex_t> lanes;
    std::map<LanePair, vertex_t> ramp_map;

    std::size_t object_count() const {
        switch (kind) {
            case SceneKind::intervals: return intervals.size();
            case SceneKind::chords: return chords.size();
            case SceneKind::segments: return segments.size();
            case SceneKind::squares: return squares.size();
            case SceneKind::points2d: return points2q.empty() ? points2f.size() : points2q.size();
            case SceneKind::points3d: return points3f.size();
            case SceneKind::points4d: return points4f.size();
            default: return designated.size();
        }
    }
};

inline nlohmann::ordered_json scene_to_json(const Scene& s) {
    using json = nlohmann::ordered_json;
    json j;
    j["kind"] = scene_kind_name(s.kind);
    json objs = json::array();
    switch (s.kind) {
        case SceneKind::intervals:
            for (const auto& iv : s.intervals)
                objs.push_back({{"lo", rat_to_string(iv.lo)}, {"hi", rat_to_string(iv.hi)}});
            break;
        case SceneKind::chords:
            for (const auto& c : s.chords) objs.push_back({{"a", c.a}, {"b", c.b}});
            break;
        case SceneKind::segments:
            for (const auto& sg : s.segments)
                objs.push_back({{"x1", rat_to_string(sg.p.x)},
                                {"y1", rat_to_string(sg.p.y)},
                                {"x2", rat_to_string(sg.q.x)},
                                {"y2", rat_to_string(sg.q.y)}});
            break;
        case SceneKind::squares:
            for (const auto& sq : s.squares)
                objs.push_back({{"x", rat_to_string(sq.corner.x)},
                                {"y", rat_to_string(sq.corner.y)}});
            break;
        case SceneKind::points2d:
            if (!s.points2q.empty())
                for (const auto& p : s.points2q)
                    objs.push_back({rat_to_string(p.x), rat_to_string(p.y)});
            else
                for (const auto& p : s.points2f) objs.push_back({p.x, p.y});
            break;
        case SceneKind::points3d:
            for (const auto& p : s.points3f) objs.push_back({p.x, p.y, p.z});
            break;
        case SceneKind::points4d:
            for (const auto& p : s.points4f) objs.push_back({p.x, p.y, p.z, p.w});
            break;
        case SceneKind::polygon:
            for (std::size_t idx : s.designated) {
                const RatPt& p = s.polygon.boundary[idx];
                objs.push_back({rat_to_string(p.x), rat_to_string(p.y)});
            }
            break;
    }
    j["objects"] = std::move(objs);
    if (s.kind == SceneKind::polygon) {
        json b = json::array();
        for (const auto& p : s.polygon.boundary)
            b.push_back({rat_to_string(p.x), rat_to_string(p.y)});
        j["boundary"] = std::move(b);
        j["designated"] = s.designated;
    }
    if (!s.roles.empty()) {
        json roles = json::array();
        for (Role r : s.roles) roles.push_back(role_name(r));
        j["roles"] = std::move(roles);
    }
    if (!s.lanes.empty()) {
        j["lanes"] = s.lanes;
        json ramps = nlohmann::ordered_json::object();
        for (auto [pair, v] : s.ramp_map)
            ramps[std::to_string(pair.first) + "," + std::to_string(pair.second)] = v;
        j["ramps"] = std::move(ramps);
    }
    return j;
}

} // namespace flipwidth
