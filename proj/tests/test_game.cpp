#include <catch2/catch_amalgamated.hpp>

#include "flipwidth/game.hpp"
#include "flipwidth/json_io.hpp"
#include "helpers.hpp"

using namespace flipwidth;
using namespace fwtest;

namespace {

struct StationaryRobber : RobberStrategy {
    vertex_t start;
    explicit StationaryRobber(vertex_t v) : start(v) {}
    vertex_t choose_start(const Graph&) override { return start; }
    std::vector<vertex_t> walk(const GameState& s, const FlipCollection&) override {
        return {s.robber};
    }
    std::string name() const override { return "stationary"; }
};

struct GreedyDegreeRobber : RobberStrategy {
    vertex_t choose_start(const Graph& g) override {
        vertex_t best = 0;
        for (vertex_t v = 0; v < g.n(); ++v)
            if (g.degree(v) > g.degree(best)) best = v;
        return best;
    }
    std::vector<vertex_t> walk(const GameState& s, const FlipCollection& announced) override {
        FlippedView cur(*s.graph, s.active), after(*s.graph, announced);
        vertex_t best = s.robber;
        std::size_t best_deg = after.degree(s.robber);
        for (vertex_t v = 0; v < s.graph->n(); ++v)
            if (cur.adjacent(s.robber, v) && after.degree(v) > best_deg) {
                best = v;
                best_deg = after.degree(v);
            }
        return best == s.robber ? std::vector<vertex_t>{s.robber}
                                : std::vector<vertex_t>{s.robber, best};
    }
    std::string name() const override { return "greedy"; }
};

struct ScriptedCop : CopStrategy {
    std::vector<FlipCollection> script;
    std::size_t i = 0;
    FlipCollection announce(const GameState&) override {
        return i < script.size() ? script[i++] : FlipCollection{};
    }
    std::string name() const override { return "scripted"; }
};

struct IdleCop : CopStrategy {
    FlipCollection announce(const GameState&) override { return {}; }
    std::string name() const override { return "idle"; }
};

} // namespace

TEST_CASE("edgeless graph with no flips is an immediate cop win") {
    Graph g = edgeless_graph(3);
    IdleCop cop;
    StationaryRobber robber(1);
    Transcript t = play(g, cop, robber, {1, 0, 100});
    CHECK(t.outcome == Outcome::cops);
    CHECK(t.decided_round == 1);
}

TEST_CASE("K2: one flip wins, zero flips lose") {
    Graph k2 = complete_graph(2);

    ScriptedCop cop;
    cop.script.assign(1, FlipCollection{{FlipSet({0, 1})}});
    StationaryRobber still(0);
    Transcript t = play(k2, cop, still, {1, 1, 50});
    CHECK(t.outcome == Outcome::cops);
    CHECK(t.decided_round == 1);

    IdleCop idle;
    GreedyDegreeRobber mover;
    Transcript s = play(k2, idle, mover, {1, 0, 50});
    CHECK(s.outcome == Outcome::robber);
    CHECK(s.rounds.size() == 50);
}

TEST_CASE("play validates strategy moves") {
    Graph p4 = path_graph(4);

    SECTION("cop over budget") {
        ScriptedCop cop;
        cop.script.assign(1, FlipCollection{{FlipSet({0}), FlipSet({1})}});
        StationaryRobber r(0);
        CHECK_THROWS_AS(play(p4, cop, r, {1, 1, 10}), strategy_fault);
    }
    SECTION("robber teleports") {
        struct Teleport : StationaryRobber {
            using StationaryRobber::StationaryRobber;
            std::vector<vertex_t> walk(const GameState& s, const FlipCollection&) override {
                return {s.robber, 3};
            }
        } r(0);
        IdleCop cop;
        CHECK_THROWS_AS(play(p4, cop, r, {1, 0, 10}), strategy_fault);
    }
    SECTION("robber exceeds radius") {
        struct LongWalk : StationaryRobber {
            using StationaryRobber::StationaryRobber;
            std::vector<vertex_t> walk(const GameState& s, const FlipCollection&) override {
                return {s.robber, 1, 2};
            }
        } r(0);
        IdleCop cop;
        CHECK_THROWS_AS(play(p4, cop, r, {1, 0, 10}), strategy_fault);
        // And the same walk is legal at radius 2.
        IdleCop cop2;
        LongWalk r2(0);
        CHECK_NOTHROW(play(p4, cop2, r2, {2, 0, 3}));
    }
    SECTION("fault identifies the offender") {
        ScriptedCop cop;
        cop.script.assign(1, FlipCollection{{FlipSet({0}), FlipSet({1})}});
        StationaryRobber r(0);
        try {
            play(p4, cop, r, {1, 1, 10});
            FAIL("expected a fault");
        } catch (const strategy_fault& e) {
            CHECK(e.offender == "cop");
        }
    }
}

TEST_CASE("transcripts replay to identical outcomes and survive JSON") {
    Graph g = random_graph(11, 10, 0.4);
    RandomCop cop(5, 2);
    GreedyDegreeRobber robber;
    Transcript t = play(g, cop, robber, {1, 2, 30});
    CHECK(replay(g, t) == t.outcome);

    Transcript back = transcript_from_json(transcript_to_json(t));
    CHECK(replay(g, back) == t.outcome);
    CHECK(transcript_to_json(back).dump() == transcript_to_json(t).dump());
}

TEST_CASE("random cop is deterministic per seed") {
    Graph g = random_graph(3, 12, 0.4);
    GreedyDegreeRobber r1, r2;
    RandomCop c1(99, 2), c2(99, 2);
    Transcript a = play(g, c1, r1, {1, 2, 20});
    Transcript b = play(g, c2, r2, {1, 2, 20});
    CHECK(transcript_to_json(a).dump() == transcript_to_json(b).dump());
}

TEST_CASE("dyadic cop partitions the order into at most 2^t classes") {
    Interchange ic = build_abstract(19, InterchangeMode::weak, OptionalPolicy::all());
    DyadicCop cop(2, ic.lanes);
    GameState state{&ic.graph, FlipCollection{}, 0, 1};
    for (std::size_t round = 1; round <= 6; ++round) {
        state.round = round;
        FlipCollection f = cop.announce(state);
        REQUIRE(f.size() == 2);
        auto classes = lane_equivalence_classes(ic, f);
        CHECK(classes.size() <= 4);
        CHECK(classes.size() >= 2);
    }
}

TEST_CASE("blockade cop catches a stationary robber on a star") {
    Graph star = star_graph(4);
    BlockadeCop cop(2);
    StationaryRobber leaf(2);
    Transcript t = play(star, cop, leaf, {1, 2, 10});
    CHECK(t.outcome == Outcome::cops);
    CHECK(t.decided_round == 1);

    // Budget 1 degrades to the first blockade flip and still scrambles edges
    // legally.
    BlockadeCop one(1);
    StationaryRobber leaf2(2);
    Transcript u = play(star, one, leaf2, {1, 1, 5});
    for (const auto& rec : u.rounds) CHECK(rec.announced.size() <= 1);
}

TEST_CASE("strategy legality: built-in strategies emit only legal moves") {
    Interchange ic = build_abstract(11, InterchangeMode::weak, OptionalPolicy::all());
    std::vector<std::unique_ptr<CopStrategy>> cops;
    cops.push_back(std::make_unique<RandomCop>(4, 2));
    cops.push_back(std::make_unique<DyadicCop>(2, ic.lanes));
    cops.push_back(std::make_unique<BlockadeCop>(2));
    for (auto& cop : cops) {
        InterchangeRobber robber(ic);
        // play() itself validates every move; a fault would throw.
        Transcript t = play(ic.graph, *cop, robber, {2, 2, 40});
        CHECK(replay(ic.graph, t) == t.outcome);
    }
}

TEST_CASE("interchange robber keeps a full-reach lane against an idle cop") {
    Interchange ic = build_abstract(9, InterchangeMode::strong, OptionalPolicy::all());
    InterchangeRobber robber(ic);
    IdleCop cop;
    Transcript t = play(ic.graph, cop, robber, {2, 0, 10});
    CHECK(t.outcome == Outcome::robber);
    LaneReach reach(ic);
    FlippedView unflipped(ic.graph, FlipCollection{});
    int lane = reach.lane_index_of(t.rounds.back().path.back());
    REQUIRE(lane >= 0);
    CHECK(reach.count(unflipped, lane) == 9);
}

TEST_CASE("theorem-size interchange robber survives (t=1, small sample)") {
    Interchange ic = build_abstract(19, InterchangeMode::weak, OptionalPolicy::all());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RandomCop cop(seed, 1);
        InterchangeRobber robber(ic);
        Transcript t = play(ic.graph, cop, robber, {2, 1, 100});
        CHECK(t.outcome == Outcome::robber);
    }
    for (std::uint32_t radius : {std::uint32_t{2}, kInfiniteRadius}) {
        DyadicCop dy(1, ic.lanes);
        InterchangeRobber robber(ic);
        CHECK(play(ic.graph, dy, robber, {radius, 1, 100}).outcome == Outcome::robber);
        BlockadeCop bl(1);
        InterchangeRobber robber2(ic);
        CHECK(play(ic.graph, bl, robber2, {radius, 1, 100}).outcome == Outcome::robber);
    }
}

TEST_CASE("diverse robber on hypercubes (chi = 1)") {
    Graph q5 = hypercube_graph(5); // diversity 2*5-4 = 6 >= 2^(t+1) for t = 1
    std::vector<vertex_t> members(q5.n());
    std::iota(members.begin(), members.end(), 0);
    std::vector<int> colors(q5.n(), 1);

    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RandomCop cop(seed, 1);
        DiverseRobber robber(q5, members, colors, 1);
        Transcript t = play(q5, cop, robber, {1, 1, 100});
        CHECK(t.outcome == Outcome::robber);
    }
    DyadicCop dy(1);
    DiverseRobber r1(q5, members, colors, 1);
    CHECK(play(q5, dy, r1, {1, 1, 100}).outcome == Outcome::robber);
    BlockadeCop bl(1);
    DiverseRobber r2(q5, members, colors, 1);
    CHECK(play(q5, bl, r2, {1, 1, 100}).outcome == Outcome::robber);
}

TEST_CASE("diverse robber with t=0 only needs a neighbor") {
    Graph k2 = complete_graph(2);
    std::vector<vertex_t> members{0, 1};
    std::vector<int> colors{1, 1};
    IdleCop cop;
    DiverseRobber robber(k2, members, colors, 0);
    CHECK(play(k2, cop, robber, {1, 0, 20}).outcome == Outcome::robber);
}

TEST_CASE("diverse robber faults when the subgraph is not diverse enough") {
    Graph p2 = complete_graph(2); // diversity 2 < 2^(t+1) for t = 2
    std::vector<vertex_t> members{0, 1};
    std::vector<int> colors{1, 1};
    RandomCop cop(1, 2);
    DiverseRobber robber(p2, members, colors, 2);
    CHECK_THROWS_AS(play(p2, cop, robber, {1, 2, 50}), strategy_fault);
}

TEST_CASE("play never mutates the graph") {
    Graph g = random_graph(6, 8, 0.5);
    Graph copy = g;
    RandomCop cop(1, 1);
    GreedyDegreeRobber robber;
    play(g, cop, robber, {1, 1, 20});
    CHECK(g == copy);
}
