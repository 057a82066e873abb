#pragma once

// Interchanges: a linear sequence of lane vertices plus ramp vertices joining
// lane pairs, with mandatory ramp-lane edges, forbidden out-of-range ramp-lane
// edges, and optional everything else. Includes the lemma oracles (two-edge
// lane-ramp-lane connectivity, reach counts) and the weak/strong conversion
// and Ramsey-style extraction used by the transduction machinery.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flipwidth/graph.hpp"

namespace flipwidth {

enum class InterchangeMode : std::uint8_t { weak, strong };

inline const char* mode_name(InterchangeMode m) {
    return m == InterchangeMode::weak ? "weak" : "strong";
}

using LanePair = std::pair<int, int>; // (i, j) with i < j, indices into lanes

struct Interchange {
    Graph graph;
    std::vector<vertex_t> lanes;          // designated lane vertices, in sequence order
    std::map<LanePair, vertex_t> ramps;   // lane-index pair -> ramp vertex
    InterchangeMode mode = InterchangeMode::weak;

    int order() const { return static_cast<int>(lanes.size()); }

    vertex_t ramp_at(int i, int j) const {
        auto it = ramps.find({i, j});
        if (it == ramps.end()) throw domain_error("no ramp for requested lane pair");
        return it->second;
    }
};

// Pairs that must carry a ramp: all pairs at most n-3 apart (weak), or all
// pairs (strong).
inline std::vector<LanePair> required_ramp_pairs(int n, InterchangeMode mode) {
    std::vector<LanePair> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mode == InterchangeMode::strong || j - i <= n - 3) out.push_back({i, j});
    return out;
}

struct OptionalPolicy {
    enum class Kind : std::uint8_t { none, all, random } kind = Kind::none;
    std::uint64_t seed = 0;

    static OptionalPolicy none() { return {Kind::none, 0}; }
    static OptionalPolicy all() { return {Kind::all, 0}; }
    static OptionalPolicy random(std::uint64_t seed) { return {Kind::random, seed}; }
};

// Abstract interchange of the given order. Lanes get ids 0..n-1 and ramps
// follow in lexicographic pair order. Policy "all" adds every optional
// interior lane-ramp edge and nothing else; "random" also coins lane-lane and
// ramp-ramp edges.
inline Interchange build_abstract(int n, InterchangeMode mode, OptionalPolicy policy) {
    int min_order = mode == InterchangeMode::weak ? 4 : 2;
    if (n < min_order)
        throw domain_error("interchange order below minimum for " + std::string(mode_name(mode)));

    Interchange ic;
    ic.mode = mode;
    auto pairs = required_ramp_pairs(n, mode);
    std::size_t total = static_cast<std::size_t>(n) + pairs.size();
    ic.graph = Graph(total);
    std::vector<Role> roles(total, Role::lane);
    for (int i = 0; i < n; ++i) ic.lanes.push_back(static_cast<vertex_t>(i));
    vertex_t next = static_cast<vertex_t>(n);
    for (auto [i, j] : pairs) {
        roles[next] = Role::ramp;
        ic.ramps[{i, j}] = next;
        ic.graph.add_edge(next, ic.lanes[i]);
        ic.graph.add_edge(next, ic.lanes[j]);
        ++next;
    }

    std::mt19937_64 rng(policy.seed);
    auto coin = [&]() { return (rng() & 1u) != 0; };
    if (policy.kind != OptionalPolicy::Kind::none) {
        bool random = policy.kind == OptionalPolicy::Kind::random;
        for (auto [pair, ramp] : ic.ramps)
            for (int z = pair.first + 1; z < pair.second; ++z)
                if (!random || coin()) ic.graph.add_edge(ramp, ic.lanes[z]);
        if (random) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (coin()) ic.graph.add_edge(ic.lanes[i], ic.lanes[j]);
            for (auto a = ic.ramps.begin(); a != ic.ramps.end(); ++a)
                for (auto b = std::next(a); b != ic.ramps.end(); ++b)
                    if (coin()) ic.graph.add_edge(a->second, b->second);
        }
    }
    ic.graph.finish();
    ic.graph.set_roles(std::move(roles));
    return ic;
}

struct Violation {
    std::string code;   // stable identifier, e.g. "forbidden-ramp-lane-edge"
    std::string detail;
};

// Checks the interchange invariants against an arbitrary graph. Lane-lane,
// ramp-ramp and edges at non-designated vertices are optional and never
// reported.
inline std::vector<Violation> validate(const Graph& g, const std::vector<vertex_t>& lanes,
                                       const std::map<LanePair, vertex_t>& ramps,
                                       InterchangeMode mode) {
    std::vector<Violation> out;
    int n = static_cast<int>(lanes.size());
    std::vector<bool> seen(g.n(), false);
    auto designate = [&](vertex_t v, const std::string& what) {
        if (v >= g.n()) {
            out.push_back({"vertex-out-of-range", what + " vertex " + std::to_string(v)});
            return;
        }
        if (seen[v]) out.push_back({"duplicate-designated", what + " vertex " + std::to_string(v)});
        seen[v] = true;
    };
    for (vertex_t v : lanes) designate(v, "lane");
    for (auto [pair, v] : ramps) {
        designate(v, "ramp");
        auto [i, j] = pair;
        if (i < 0 || j >= n || i >= j)
            out.push_back({"bad-ramp-pair",
                           "(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    }
    if (!out.empty()) return out; // index errors make edge checks meaningless

    for (auto [i, j] : required_ramp_pairs(n, mode))
        if (!ramps.count({i, j}))
            out.push_back({"missing-ramp",
                           "(" + std::to_string(i) + "," + std::to_string(j) + ")"});

    for (auto [pair, ramp] : ramps) {
        auto [i, j] = pair;
        for (int z = 0; z < n; ++z) {
            bool adj = g.adjacent(ramp, lanes[z]);
            if ((z == i || z == j) && !adj)
                out.push_back({"missing-mandatory-edge",
                               "ramp(" + std::to_string(i) + "," + std::to_string(j) +
                                   ") to lane " + std::to_string(z)});
            if ((z < i || z > j) && adj)
                out.push_back({"forbidden-ramp-lane-edge",
                               "ramp(" + std::to_string(i) + "," + std::to_string(j) +
                                   ") to lane " + std::to_string(z)});
        }
    }
    return out;
}

inline std::vector<Violation> validate(const Interchange& ic) {
    return validate(ic.graph, ic.lanes, ic.ramps, ic.mode);
}

// Lanes grouped by their membership signature across the flips of F; at most
// 2^|F| classes. Classes are ordered by smallest lane index.
inline std::vector<std::vector<int>> lane_equivalence_classes(const Interchange& ic,
                                                              const FlipCollection& F) {
    FlipCollection canon = F.canonical();
    std::map<std::vector<bool>, std::vector<int>> groups;
    for (int li = 0; li < ic.order(); ++li) {
        std::vector<bool> sig;
        sig.reserve(canon.size());
        for (const auto& flip : canon.flips) sig.push_back(flip.contains(ic.lanes[li]));
        groups[sig].push_back(li);
    }
    std::vector<std::vector<int>> out;
    for (auto& [sig, lanes] : groups) out.push_back(std::move(lanes));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

namespace detail {

inline bool same_class(const std::vector<std::vector<int>>& classes, const std::vector<int>& t) {
    for (const auto& cls : classes) {
        bool all = true;
        for (int li : t)
            if (std::find(cls.begin(), cls.end(), li) == cls.end()) { all = false; break; }
        if (all) return true;
    }
    return false;
}

} // namespace detail

// Searches the flipped graph for a lane-ramp-lane path of length two between
// the triples. Preconditions: disjoint triples, each contained in one
// equivalence class under F.
inline std::optional<vertex_t> triple_connection(const Interchange& ic, const FlipCollection& F,
                                                 const std::vector<int>& triple1,
                                                 const std::vector<int>& triple2) {
    if (triple1.size() != 3 || triple2.size() != 3)
        throw contract_error("triple_connection expects two lane triples");
    std::vector<int> all = triple1;
    all.insert(all.end(), triple2.begin(), triple2.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw contract_error("triples must be disjoint");
    for (int li : all)
        if (li < 0 || li >= ic.order()) throw contract_error("lane index out of range");
    auto classes = lane_equivalence_classes(ic, F);
    if (!detail::same_class(classes, triple1) || !detail::same_class(classes, triple2))
        throw contract_error("each triple must lie in one equivalence class");

    FlippedView view(ic.graph, F);
    for (auto [pair, ramp] : ic.ramps)
        for (int u : triple1)
            if (view.adjacent(ic.lanes[u], ramp))
                for (int v : triple2)
                    if (view.adjacent(ramp, ic.lanes[v])) return ramp;
    return std::nullopt;
}

// Reach counting restricted to designated vertices: two-step paths through
// lanes or ramps only. The geometric realizations may carry extra vertices
// (blockers, junction points); those never participate.
class LaneReach {
public:
    explicit LaneReach(const Interchange& ic) : ic_(ic), words_(ic.graph.words()) {
        lane_mask_.assign(words_, 0);
        designated_mask_.assign(words_, 0);
        lane_index_.assign(ic.graph.n(), -1);
        for (int li = 0; li < ic.order(); ++li) {
            set(lane_mask_, ic.lanes[li]);
            set(designated_mask_, ic.lanes[li]);
            lane_index_[ic.lanes[li]] = li;
        }
        for (auto [pair, ramp] : ic.ramps) set(designated_mask_, ramp);
    }

    // Bitmask (over graph vertices) of lanes reachable from the given lane by
    // paths of length <= 2 whose intermediate vertex is designated.
    std::vector<std::uint64_t> lane_span(const FlippedView& view, int lane_index) const {
        vertex_t v = ic_.lanes.at(lane_index);
        std::vector<std::uint64_t> row(words_), mid(words_), out(words_, 0);
        view.row_into(v, row);
        for (std::size_t w = 0; w < words_; ++w) out[w] = row[w] & lane_mask_[w];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w] & designated_mask_[w];
            while (bits) {
                vertex_t x = static_cast<vertex_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                view.row_into(x, mid);
                for (std::size_t k = 0; k < words_; ++k) out[k] |= mid[k] & lane_mask_[k];
            }
        }
        set(out, v);
        return out;
    }

    std::size_t count(const FlippedView& view, int lane_index) const {
        auto span = lane_span(view, lane_index);
        std::size_t c = 0;
        for (auto w : span) c += std::popcount(w);
        return c;
    }

    std::vector<int> lane_indices(const std::vector<std::uint64_t>& mask) const {
        std::vector<int> out;
        for (std::size_t w = 0; w < mask.size(); ++w) {
            std::uint64_t bits = mask[w];
            while (bits) {
                vertex_t v = static_cast<vertex_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                out.push_back(lane_index_[v]);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    int lane_index_of(vertex_t v) const { return v < lane_index_.size() ? lane_index_[v] : -1; }

private:
    static void set(std::vector<std::uint64_t>& m, vertex_t v) { m[v / 64] |= 1ull << (v % 64); }

    const Interchange& ic_;
    std::size_t words_;
    std::vector<std::uint64_t> lane_mask_, designated_mask_;
    std::vector<int> lane_index_;
};

// Number of lanes (including itself) the lane reaches by designated two-step
// paths once the announced flips are active.
inline std::size_t reach_count_after(const Interchange& ic, const FlipCollection& announced,
                                     int lane_index) {
    if (lane_index < 0 || lane_index >= ic.order()) throw domain_error("lane index out of range");
    FlippedView view(ic.graph, announced);
    return LaneReach(ic).count(view, lane_index);
}

// Strong interchange of order n-2 obtained by dropping the two outermost
// lanes. The graph is untouched; only the designation shrinks, so former
// outer ramps become plain vertices.
inline Interchange weak_to_strong(const Interchange& ic) {
    if (ic.mode != InterchangeMode::weak) throw domain_error("weak_to_strong expects weak mode");
    int n = ic.order();
    if (n < 4) throw domain_error("weak_to_strong needs order >= 4");

    Interchange out;
    out.mode = InterchangeMode::strong;
    out.graph = ic.graph;
    for (int i = 1; i + 1 < n; ++i) out.lanes.push_back(ic.lanes[i]);
    std::vector<Role> roles(out.graph.n(), Role::plain);
    for (vertex_t v : out.lanes) roles[v] = Role::lane;
    for (auto [pair, ramp] : ic.ramps) {
        auto [i, j] = pair;
        if (i >= 1 && j <= n - 2) {
            out.ramps[{i - 1, j - 1}] = ramp;
            roles[ramp] = Role::ramp;
        }
    }
    out.graph.set_roles(std::move(roles));
    return out;
}

enum class ExtractKind : std::uint8_t { dense, sparse };

namespace detail {

// Color of the lane triple a < m < b: whether ramp(a,b) sees the middle lane.
inline bool triple_color(const Interchange& ic, int a, int m, int b) {
    return ic.graph.adjacent(ic.ramp_at(a, b), ic.lanes[m]);
}

inline Interchange sub_interchange(const Interchange& ic, const std::vector<int>& lane_sel) {
    std::vector<vertex_t> keep;
    for (int li : lane_sel) keep.push_back(ic.lanes[li]);
    for (std::size_t a = 0; a < lane_sel.size(); ++a)
        for (std::size_t b = a + 1; b < lane_sel.size(); ++b)
            keep.push_back(ic.ramp_at(lane_sel[a], lane_sel[b]));

    std::vector<vertex_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> new_id(ic.graph.n(), -1);
    for (std::size_t k = 0; k < sorted.size(); ++k) new_id[sorted[k]] = static_cast<int>(k);

    Interchange out;
    out.mode = InterchangeMode::strong;
    out.graph = induced_subgraph(ic.graph, keep);
    for (int li : lane_sel) out.lanes.push_back(static_cast<vertex_t>(new_id[ic.lanes[li]]));
    for (std::size_t a = 0; a < lane_sel.size(); ++a)
        for (std::size_t b = a + 1; b < lane_sel.size(); ++b)
            out.ramps[{static_cast<int>(a), static_cast<int>(b)}] =
                static_cast<vertex_t>(new_id[ic.ramp_at(lane_sel[a], lane_sel[b])]);
    return out;
}

} // namespace detail

// Extracts a sub-interchange whose interior lane-ramp incidences are uniform:
// all present (dense) or all absent (sparse). Greedy pigeonholing; output size
// is reported, not guaranteed.
inline std::pair<Interchange, ExtractKind> ramsey_extract(const Interchange& ic) {
    if (ic.mode != InterchangeMode::strong) throw domain_error("ramsey_extract expects strong mode");
    int n = ic.order();

    // Already monochromatic: return the input-sized interchange.
    bool any_true = false, any_false = false;
    for (int a = 0; a < n; ++a)
        for (int m = a + 1; m < n; ++m)
            for (int b = m + 1; b < n; ++b)
                (detail::triple_color(ic, a, m, b) ? any_true : any_false) = true;
    if (!(any_true && any_false)) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return {detail::sub_interchange(ic, all),
                any_false ? ExtractKind::sparse : ExtractKind::dense};
    }

    // Stage 1: prehomogeneous sequence. Candidates always exceed the sequence
    // in lane order, so triple colors against any surviving candidate agree.
    std::vector<int> seq;
    std::vector<int> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    while (!cand.empty()) {
        int s = cand.front();
        cand.erase(cand.begin());
        seq.push_back(s);
        if (seq.size() < 2 || cand.empty()) continue;
        std::map<std::vector<bool>, std::vector<int>> parts;
        for (int c : cand) {
            std::vector<bool> sig;
            for (std::size_t i = 0; i + 1 < seq.size(); ++i)
                sig.push_back(detail::triple_color(ic, seq[i], s, c));
            parts[sig].push_back(c);
        }
        const std::vector<int>* best = nullptr;
        for (const auto& [sig, members] : parts)
            if (!best || members.size() > best->size() ||
                (members.size() == best->size() && members.front() < best->front()))
                best = &members;
        cand = *best;
    }

    std::size_t m = seq.size();
    auto pair_color = [&](std::size_t i, std::size_t j) { // i < j < m-1 guaranteed by callers
        return detail::triple_color(ic, seq[i], seq[j], seq[m - 1]);
    };

    // Stage 2: monochromatic pair subset of seq[0..m-2] by pivot majority.
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i + 1 < m; ++i) pool.push_back(i);
    std::vector<std::pair<std::size_t, bool>> tagged;
    while (!pool.empty()) {
        std::size_t p = pool.front();
        pool.erase(pool.begin());
        std::vector<std::size_t> with, without;
        for (std::size_t q : pool) (pair_color(p, q) ? with : without).push_back(q);
        bool tag = with.size() >= without.size();
        tagged.push_back({p, tag});
        pool = tag ? with : without;
    }
    std::size_t ones = 0;
    for (auto [p, tag] : tagged) ones += tag;
    bool majority = ones * 2 >= tagged.size();
    std::vector<int> sel;
    for (auto [p, tag] : tagged)
        if (tag == majority) sel.push_back(seq[p]);
    sel.push_back(seq[m - 1]); // the last element only ever closes triples
    std::sort(sel.begin(), sel.end());

    return {detail::sub_interchange(ic, sel),
            majority ? ExtractKind::dense : ExtractKind::sparse};
}

} // namespace flipwidth
