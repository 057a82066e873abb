#include <catch2/catch_amalgamated.hpp>

#include "flipwidth/geometry.hpp"
#include "helpers.hpp"

using namespace flipwidth;
using namespace fwtest;

namespace {

// Every optional interior lane-ramp edge present and nothing forbidden.
void check_dense_lane_ramp(const Graph& g, const Scene& s) {
    for (auto [pair, ramp] : s.ramp_map)
        for (int z = 0; z < static_cast<int>(s.lanes.size()); ++z) {
            bool expect = z >= pair.first && z <= pair.second;
            INFO("ramp (" << pair.first << "," << pair.second << ") lane " << z);
            CHECK(g.adjacent(ramp, s.lanes[z]) == expect);
        }
}

void check_valid(const Graph& g, const Scene& s) {
    auto v = validate(g, s.lanes, s.ramp_map, InterchangeMode::weak);
    INFO((v.empty() ? "" : v.front().code + " " + v.front().detail));
    CHECK(v.empty());
}

} // namespace

TEST_CASE("interval construction") {
    Scene s = gen_intervals(5);
    CHECK(s.intervals.size() == 12);

    Graph g = interval_intersection_graph(s);
    check_valid(g, s);
    check_dense_lane_ramp(g, s);

    SECTION("ramp(0,2) touches exactly lanes 0,1,2, by direct overlap") {
        vertex_t r = s.ramp_map.at({0, 2});
        for (int z = 0; z < 5; ++z) {
            bool overlap =
                s.intervals[r].lo <= s.intervals[z].hi && s.intervals[z].lo <= s.intervals[r].hi;
            CHECK(overlap == (z <= 2));
            CHECK(g.adjacent(r, static_cast<vertex_t>(z)) == overlap);
        }
    }
    SECTION("disjoint intervals never meet") {
        CHECK_FALSE(g.adjacent(0, 1));
        CHECK_FALSE(g.adjacent(0, 4));
    }
    SECTION("endpoints are pairwise distinct") {
        std::vector<Rat> ends;
        for (const auto& iv : s.intervals) {
            ends.push_back(iv.lo);
            ends.push_back(iv.hi);
        }
        std::sort(ends.begin(), ends.end());
        CHECK(std::adjacent_find(ends.begin(), ends.end()) == ends.end());
    }
    CHECK_THROWS_AS(gen_intervals(3), domain_error);
}

TEST_CASE("interval containment graph") {
    Scene s = gen_intervals(5);
    Graph g = interval_containment_graph(s);
    check_valid(g, s);
    check_dense_lane_ramp(g, s);
    // Equal-length disjoint lanes contain nothing.
    for (vertex_t a = 0; a < 5; ++a)
        for (vertex_t b = a + 1; b < 5; ++b) CHECK_FALSE(g.adjacent(a, b));
}

TEST_CASE("chord diagram crosses exactly on containment") {
    SECTION("hand pairs") {
        Scene nested;
        nested.kind = SceneKind::intervals;
        nested.intervals = {{Rat(0), Rat(10)}, {Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
        Scene chords = permutation_to_chords(nested);
        Graph g = chord_intersection_graph(chords);
        CHECK(g.adjacent(0, 1));      // containment
        CHECK(g.adjacent(0, 2));      // containment
        CHECK_FALSE(g.adjacent(1, 2)); // disjoint
    }
    SECTION("matches the containment graph on the full construction") {
        for (int n : {5, 9}) {
            Scene s = gen_intervals(n);
            Graph byChords = chord_intersection_graph(permutation_to_chords(s));
            Graph byContainment = interval_containment_graph(s);
            REQUIRE(byChords == byContainment);
        }
    }
}

TEST_CASE("segment construction") {
    Scene s = gen_segments(5);
    Graph g = segment_intersection_graph(s);
    check_valid(g, s);
    check_dense_lane_ramp(g, s);

    SECTION("ramp(0,2) crosses lanes 0,1,2 only") {
        vertex_t r = s.ramp_map.at({0, 2});
        for (vertex_t z = 0; z < 5; ++z) CHECK(g.adjacent(r, z) == (z <= 2));
    }
    SECTION("parallel horizontals never meet") {
        for (auto [p1, r1] : s.ramp_map)
            for (auto [p2, r2] : s.ramp_map)
                if (r1 < r2) CHECK_FALSE(g.adjacent(r1, r2));
    }
    SECTION("crossing pair, hand-made") {
        Scene tiny;
        tiny.kind = SceneKind::segments;
        tiny.segments = {{{Rat(0), Rat(-1)}, {Rat(0), Rat(1)}},
                         {{Rat(-1), Rat(0)}, {Rat(1), Rat(0)}},
                         {{Rat(-1), Rat(5)}, {Rat(1), Rat(5)}}};
        Graph t = segment_intersection_graph(tiny);
        CHECK(t.adjacent(0, 1));
        CHECK_FALSE(t.adjacent(0, 2));
        CHECK_FALSE(t.adjacent(1, 2));
    }
    SECTION("no two segments collinear") {
        for (std::size_t a = 0; a < s.segments.size(); ++a)
            for (std::size_t b = a + 1; b < s.segments.size(); ++b) {
                bool a_vert = s.segments[a].p.x == s.segments[a].q.x;
                bool b_vert = s.segments[b].p.x == s.segments[b].q.x;
                if (a_vert && b_vert) CHECK(s.segments[a].p.x != s.segments[b].p.x);
                if (!a_vert && !b_vert) CHECK(s.segments[a].p.y != s.segments[b].p.y);
            }
    }
}

TEST_CASE("unit square construction") {
    Scene s = gen_unit_squares(5);
    Graph g = square_intersection_graph(s);
    check_valid(g, s);
    check_dense_lane_ramp(g, s);

    SECTION("corner touch counts as intersection") {
        Scene tiny;
        tiny.kind = SceneKind::squares;
        tiny.squares = {{{Rat(0), Rat(0)}}, {{Rat(1), Rat(1)}}, {{Rat(2), Rat(0)}}};
        Graph t = square_intersection_graph(tiny);
        CHECK(t.adjacent(0, 1));
        CHECK_FALSE(t.adjacent(0, 2));
    }
    SECTION("below/above squares of one interval intersect") {
        Rat a(1, 10), b(7, 10); // interval [a,b] with b-a < 1
        Scene pair;
        pair.kind = SceneKind::squares;
        pair.squares = {{{a, b - 1}}, {{b - 1, a}}};
        CHECK(square_intersection_graph(pair).adjacent(0, 1));
    }
}

TEST_CASE("2D families validate across the size range") {
    for (int n : {5, 12, 20, 30}) {
        Scene iv = gen_intervals(n);
        check_valid(interval_intersection_graph(iv), iv);
        check_valid(interval_containment_graph(iv), iv);
        Scene ch = permutation_to_chords(iv);
        check_valid(chord_intersection_graph(ch), ch);
        Scene sg = gen_segments(n);
        check_valid(segment_intersection_graph(sg), sg);
        Scene sq = gen_unit_squares(n);
        check_valid(square_intersection_graph(sq), sq);
    }
}

TEST_CASE("unit distance construction") {
    Scene s = gen_unit_distance(6);
    Graph g = unit_distance_graph(s);
    check_valid(g, s);

    SECTION("ramp distances by direct algebra") {
        double delta = 19.0 / (10.0 * 5);
        auto dist = [&](int i, int j, int z) {
            double mid = (i + j) * delta / 2.0, q = (j - i) * delta / 2.0;
            double dx = mid - z * delta;
            return std::sqrt(dx * dx + 1.0 - q * q);
        };
        CHECK(std::abs(dist(0, 3, 0) - 1.0) < 1e-12);
        CHECK(std::abs(dist(0, 3, 3) - 1.0) < 1e-12);
        CHECK(dist(0, 3, 1) < 1.0 - 1e-6);
        CHECK(dist(0, 3, 2) < 1.0 - 1e-6);
        CHECK(dist(0, 3, 4) > 1.0 + 1e-6);
        CHECK(dist(1, 2, 5) > 1.0 + 1e-6);
    }
    SECTION("no optional lane-ramp edges") {
        for (auto [pair, ramp] : s.ramp_map)
            for (int z = pair.first + 1; z < pair.second; ++z)
                CHECK_FALSE(g.adjacent(ramp, s.lanes[z]));
    }
    SECTION("tolerance stability") {
        CHECK(unit_distance_graph(s, 1e-9) == unit_distance_graph(s, 1e-8));
    }
}

TEST_CASE("unit disk construction") {
    for (int n : {6, 20}) {
        Scene s = gen_unit_disks(n);
        Graph g = unit_disk_graph(s);
        check_valid(g, s);
        check_dense_lane_ramp(g, s);
        CHECK(unit_disk_graph(s, 1e-9) == unit_disk_graph(s, 1e-8));
    }
}

TEST_CASE("hypercube interchange") {
    Interchange ic = hypercube_interchange(5);
    CHECK(ic.lanes.size() == 5);
    CHECK(ic.ramps.size() == 10);
    CHECK(validate(ic).empty());
    // Sparse: ramps see no interior lanes.
    for (auto [pair, ramp] : ic.ramps)
        for (int z = 0; z < 5; ++z)
            CHECK(ic.graph.adjacent(ramp, ic.lanes[z]) == (z == pair.first || z == pair.second));
    CHECK(ic.graph.edges() == hypercube_graph(5).edges());
}

TEST_CASE("subdivided complete and bipartite graphs") {
    Interchange s4 = gen_subdivided_complete(4);
    CHECK(s4.graph.n() == 10);
    CHECK(validate(s4).empty());
    for (auto [pair, ramp] : s4.ramps) CHECK(s4.graph.degree(ramp) == 2);

    Graph k22 = gen_subdivided_bipartite(2, 2);
    CHECK(k22.n() == 8);
    CHECK_FALSE(has_biclique(k22, 2));
    CHECK(is_isomorphic_small(k22, cycle_graph(8)));
}
