#pragma once

// The radius-r, t-flip flipping game. Per round: the cops announce their next
// flip collection, the robber walks a path of length <= r in the currently
// flipped graph, the announcement replaces the active flips, and the cops win
// the moment the robber sits on an isolated vertex of the newly flipped graph.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "flipwidth/graph.hpp"
#include "flipwidth/interchange.hpp"

namespace flipwidth {

struct GameConfig {
    std::uint32_t radius = 1;          // kInfiniteRadius for unbounded moves
    std::size_t flip_budget = 0;       // flips per move
    std::size_t max_rounds = 100;      // robber survives after this many rounds

    void check() const {
        if (max_rounds < 1) throw domain_error("max_rounds must be >= 1");
    }
};

struct GameState {
    const Graph* graph = nullptr;
    FlipCollection active;
    vertex_t robber = 0;
    std::size_t round = 0; // 1-based, the round being played
};

struct RoundRecord {
    FlipCollection announced;
    std::vector<vertex_t> path; // includes the start vertex
};

enum class Outcome : std::uint8_t { cops, robber };

struct Transcript {
    GameConfig config;
    vertex_t start = 0;
    std::vector<RoundRecord> rounds;
    Outcome outcome = Outcome::robber;
    std::size_t decided_round = 0; // capture round, or max_rounds on survival
};

struct CopStrategy {
    virtual ~CopStrategy() = default;
    virtual FlipCollection announce(const GameState& state) = 0;
    virtual std::string name() const = 0;
};

struct RobberStrategy {
    virtual ~RobberStrategy() = default;
    virtual vertex_t choose_start(const Graph& g) = 0;
    // Returns the walked path, starting at the current vertex. Must be a path
    // in the graph flipped by state.active, of length <= radius.
    virtual std::vector<vertex_t> walk(const GameState& state, const FlipCollection& announced) = 0;
    virtual std::string name() const = 0;
};

namespace detail {

inline void check_announcement(const Graph& g, const FlipCollection& f, std::size_t budget) {
    if (f.size() > budget)
        throw strategy_fault("cop", "announced " + std::to_string(f.size()) +
                                        " flips over budget " + std::to_string(budget));
    try {
        f.check_against(g);
    } catch (const domain_error& e) {
        throw strategy_fault("cop", e.what());
    }
}

inline void check_path(const Graph& g, const FlipCollection& active, vertex_t from,
                       const std::vector<vertex_t>& path, std::uint32_t radius) {
    if (path.empty() || path.front() != from)
        throw strategy_fault("robber", "path must start at the current vertex");
    for (vertex_t v : path)
        if (v >= g.n()) throw strategy_fault("robber", "path vertex out of range");
    if (radius != kInfiniteRadius && path.size() - 1 > radius)
        throw strategy_fault("robber", "path longer than radius");
    FlippedView view(g, active);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!view.adjacent(path[i], path[i + 1]))
            throw strategy_fault("robber", "path step " + std::to_string(path[i]) + "->" +
                                               std::to_string(path[i + 1]) +
                                               " is not an edge of the flipped graph");
}

} // namespace detail

// Plays one full game. The robber places itself in the unflipped graph before
// the first announcement. Strategies see the complete state.
inline Transcript play(const Graph& g, CopStrategy& cop, RobberStrategy& robber,
                       const GameConfig& cfg) {
    cfg.check();
    if (g.n() == 0) throw domain_error("empty graph");

    Transcript t;
    t.config = cfg;
    vertex_t pos = robber.choose_start(g);
    if (pos >= g.n()) throw strategy_fault("robber", "start vertex out of range");
    t.start = pos;

    GameState state{&g, FlipCollection{}, pos, 0};
    for (std::size_t round = 1; round <= cfg.max_rounds; ++round) {
        state.round = round;
        FlipCollection announced = cop.announce(state);
        detail::check_announcement(g, announced, cfg.flip_budget);
        std::vector<vertex_t> path = robber.walk(state, announced);
        detail::check_path(g, state.active, state.robber, path, cfg.radius);
        state.robber = path.back();
        state.active = announced;
        t.rounds.push_back({std::move(announced), std::move(path)});
        if (FlippedView(g, state.active).isolated(state.robber)) {
            t.outcome = Outcome::cops;
            t.decided_round = round;
            return t;
        }
    }
    t.outcome = Outcome::robber;
    t.decided_round = cfg.max_rounds;
    return t;
}

// Re-runs a transcript move by move, validating legality, and returns the
// outcome the replay produces.
inline Outcome replay(const Graph& g, const Transcript& t) {
    GameState state{&g, FlipCollection{}, t.start, 0};
    for (std::size_t i = 0; i < t.rounds.size(); ++i) {
        const auto& rec = t.rounds[i];
        detail::check_announcement(g, rec.announced, t.config.flip_budget);
        detail::check_path(g, state.active, state.robber, rec.path, t.config.radius);
        state.robber = rec.path.back();
        state.active = rec.announced;
        if (FlippedView(g, state.active).isolated(state.robber)) return Outcome::cops;
    }
    return Outcome::robber;
}

// ---------------------------------------------------------------- cops

// Announces t independent uniformly random vertex subsets per round.
class RandomCop : public CopStrategy {
public:
    RandomCop(std::uint64_t seed, std::size_t budget) : rng_(seed), budget_(budget) {}

    FlipCollection announce(const GameState& state) override {
        FlipCollection f;
        for (std::size_t k = 0; k < budget_; ++k) {
            std::vector<vertex_t> members;
            for (vertex_t v = 0; v < state.graph->n(); ++v)
                if (rng_() & 1u) members.push_back(v);
            f.flips.push_back(FlipSet(std::move(members)));
        }
        return f;
    }

    std::string name() const override { return "random"; }

private:
    std::mt19937_64 rng_;
    std::size_t budget_;
};

// Splits a vertex order (lane order when given, id order otherwise) by binary
// digits, rotating the digit position every round. Two flips partition the
// order into at most four classes.
class DyadicCop : public CopStrategy {
public:
    explicit DyadicCop(std::size_t budget, std::vector<vertex_t> order = {})
        : budget_(budget), order_(std::move(order)) {}

    FlipCollection announce(const GameState& state) override {
        std::vector<vertex_t> positions = order_;
        if (positions.empty())
            for (vertex_t v = 0; v < state.graph->n(); ++v) positions.push_back(v);
        unsigned bits = 1;
        while ((1ull << bits) < positions.size()) ++bits;
        FlipCollection f;
        for (std::size_t k = 0; k < budget_; ++k) {
            unsigned b = static_cast<unsigned>((state.round - 1 + k) % bits);
            std::vector<vertex_t> members;
            for (std::size_t idx = 0; idx < positions.size(); ++idx)
                if ((idx >> b) & 1u) members.push_back(positions[idx]);
            f.flips.push_back(FlipSet(std::move(members)));
        }
        return f;
    }

    std::string name() const override { return "dyadic"; }

private:
    std::size_t budget_;
    std::vector<vertex_t> order_;
};

// Blockades the robber's highest-degree neighbor (in the current flipped
// graph). A blockade takes two flips; with a smaller budget the prefix of the
// pair is announced.
class BlockadeCop : public CopStrategy {
public:
    explicit BlockadeCop(std::size_t budget) : budget_(budget) {}

    FlipCollection announce(const GameState& state) override {
        const Graph& g = *state.graph;
        FlippedView view(g, state.active);
        std::vector<std::uint64_t> row(g.words());
        view.row_into(state.robber, row);
        vertex_t target = state.robber;
        std::size_t best = 0;
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                vertex_t u = static_cast<vertex_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                std::size_t d = view.degree(u);
                if (target == state.robber || d > best) {
                    target = u;
                    best = d;
                }
            }
        }
        FlipCollection full = blockade_flips(g, target);
        while (full.flips.size() > budget_) full.flips.pop_back();
        return full;
    }

    std::string name() const override { return "blockade"; }

private:
    std::size_t budget_;
};

// ---------------------------------------------------------------- robbers

// The two-step interchange escape: at every decision, restrict to lanes
// reachable within two designated-vertex steps in the currently flipped graph
// and move to the one maximizing the lane reach count once the announced
// flips are active. Ties break to the smallest lane index.
class InterchangeRobber : public RobberStrategy {
public:
    explicit InterchangeRobber(const Interchange& ic) : ic_(ic), reach_(ic) {}

    vertex_t choose_start(const Graph& g) override {
        FlippedView view(g, FlipCollection{});
        int best = 0;
        std::size_t best_count = 0;
        for (int li = 0; li < ic_.order(); ++li) {
            std::size_t c = reach_.count(view, li);
            if (c > best_count) {
                best_count = c;
                best = li;
            }
        }
        return ic_.lanes[best];
    }

    std::vector<vertex_t> walk(const GameState& state, const FlipCollection& announced) override {
        const Graph& g = *state.graph;
        FlippedView current(g, state.active);
        FlippedView after(g, announced);
        int here = reach_.lane_index_of(state.robber);
        if (here < 0) throw strategy_fault("robber", "interchange robber is off the lanes");

        auto candidates = reach_.lane_indices(reach_.lane_span(current, here));
        int best = here;
        std::size_t best_count = 0;
        for (int li : candidates) {
            std::size_t c = reach_.count(after, li);
            if (c > best_count || (c == best_count && li < best)) {
                best_count = c;
                best = li;
            }
        }
        return path_to(current, state.robber, ic_.lanes[best]);
    }

    std::string name() const override { return "interchange"; }

private:
    std::vector<vertex_t> path_to(const FlippedView& view, vertex_t from, vertex_t to) const {
        if (from == to) return {from};
        if (view.adjacent(from, to)) return {from, to};
        for (vertex_t lane : ic_.lanes)
            if (view.adjacent(from, lane) && view.adjacent(lane, to)) return {from, lane, to};
        for (auto [pair, ramp] : ic_.ramps)
            if (view.adjacent(from, ramp) && view.adjacent(ramp, to)) return {from, ramp, to};
        throw strategy_fault("robber", "no two-step designated path to chosen lane");
    }

    const Interchange& ic_;
    LaneReach reach_;
};

// The radius-1 escape inside a diverse subgraph: stay on subgraph members and
// move to a member that keeps enough differently-colored neighbors after the
// announced flips. With a single color class the color filter is off and the
// required neighbor count is 2^t; with chi >= 2 colors it is 2^t(chi-1)+1.
class DiverseRobber : public RobberStrategy {
public:
    DiverseRobber(const Graph& g, std::vector<vertex_t> members, std::vector<int> coloring,
                  std::size_t flip_budget)
        : g_(g), members_(std::move(members)), coloring_(std::move(coloring)) {
        if (members_.empty()) throw domain_error("diverse robber needs a nonempty subgraph");
        if (coloring_.size() != members_.size())
            throw domain_error("coloring must cover the members");
        chi_ = *std::max_element(coloring_.begin(), coloring_.end());
        if (chi_ < 1) throw domain_error("colors must be >= 1");
        threshold_ = chi_ == 1 ? (std::size_t{1} << flip_budget)
                               : (std::size_t{1} << flip_budget) * (chi_ - 1) + 1;
        words_ = g.words();
        color_of_.assign(g.n(), 0);
        member_mask_.assign(words_, 0);
        for (std::size_t k = 0; k < members_.size(); ++k) {
            vertex_t v = members_[k];
            if (v >= g.n()) throw domain_error("member vertex out of range");
            color_of_[v] = coloring_[k];
            member_mask_[v / 64] |= 1ull << (v % 64);
        }
        other_mask_.assign(chi_ + 1, std::vector<std::uint64_t>(words_, 0));
        for (std::size_t k = 0; k < members_.size(); ++k) {
            vertex_t v = members_[k];
            for (int c = 0; c <= chi_; ++c)
                if (chi_ == 1 || coloring_[k] != c)
                    other_mask_[c][v / 64] |= 1ull << (v % 64);
        }
    }

    vertex_t choose_start(const Graph& g) override {
        FlippedView view(g, FlipCollection{});
        return best_member(view, members_);
    }

    std::vector<vertex_t> walk(const GameState& state, const FlipCollection& announced) override {
        const Graph& g = *state.graph;
        FlippedView current(g, state.active);
        FlippedView after(g, announced);
        vertex_t here = state.robber;
        if (!in_members(here)) throw strategy_fault("robber", "diverse robber left the subgraph");

        std::vector<vertex_t> cands{here};
        std::vector<std::uint64_t> row(words_);
        current.row_into(here, row);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w] & other_mask_[color_of_[here]][w];
            while (bits) {
                cands.push_back(static_cast<vertex_t>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        vertex_t target = here;
        std::size_t best = 0;
        for (vertex_t c : cands) {
            std::size_t s = score(after, c);
            if (s > best || (s == best && c < target)) {
                best = s;
                target = c;
            }
        }
        if (best < threshold_)
            throw strategy_fault("robber", "no vertex keeps " + std::to_string(threshold_) +
                                               " differently-colored neighbors (diversity "
                                               "precondition failed)");
        if (target == here) return {here};
        return {here, target};
    }

    std::string name() const override { return "diverse"; }

private:
    bool in_members(vertex_t v) const { return (member_mask_[v / 64] >> (v % 64)) & 1u; }

    std::size_t score(const FlippedView& view, vertex_t v) const {
        std::vector<std::uint64_t> row(words_);
        view.row_into(v, row);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w)
            c += std::popcount(row[w] & other_mask_[color_of_[v]][w]);
        return c;
    }

    vertex_t best_member(const FlippedView& view, const std::vector<vertex_t>& pool) const {
        vertex_t best_v = pool.front();
        std::size_t best = 0;
        for (vertex_t v : pool) {
            std::size_t s = score(view, v);
            if (s > best || (s == best && v < best_v)) {
                best = s;
                best_v = v;
            }
        }
        return best_v;
    }

    const Graph& g_;
    std::vector<vertex_t> members_;
    std::vector<int> coloring_;
    int chi_ = 1;
    std::size_t threshold_ = 1;
    std::size_t words_ = 0;
    std::vector<int> color_of_;
    std::vector<std::uint64_t> member_mask_;
    std::vector<std::vector<std::uint64_t>> other_mask_; // per color: members of other colors
};

} // namespace flipwidth
