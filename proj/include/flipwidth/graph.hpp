#pragma once

// Finite simple graphs, flip (subset-complementation) semantics, and the
// small-graph utilities the game and the geometric validators rely on.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flipwidth/errors.hpp"

namespace flipwidth {

using vertex_t = std::uint32_t;
using Edge = std::pair<vertex_t, vertex_t>;

inline constexpr std::uint32_t kInfiniteRadius = UINT32_MAX;

enum class Role : std::uint8_t { plain, lane, ramp, blocker };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::lane: return "lane";
        case Role::ramp: return "ramp";
        case Role::blocker: return "blocker";
        default: return "plain";
    }
}

inline std::optional<Role> role_from_name(const std::string& s) {
    if (s == "plain") return Role::plain;
    if (s == "lane") return Role::lane;
    if (s == "ramp") return Role::ramp;
    if (s == "blocker") return Role::blocker;
    return std::nullopt;
}

// Undirected simple graph on dense ids 0..n-1. Adjacency is kept both as
// sorted neighbor lists and as a packed symmetric bit matrix, so neighborhood
// unions and symmetric differences are word operations. Treated as immutable
// after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
        adj_.resize(n);
    }

    static Graph from_edges(std::size_t n, const std::vector<Edge>& edges,
                            std::optional<std::vector<Role>> roles = std::nullopt,
                            std::optional<std::vector<int>> colors = std::nullopt) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        g.finish();
        if (roles) {
            if (roles->size() != n) throw domain_error("roles must cover every vertex exactly once");
            g.roles_ = std::move(*roles);
        }
        if (colors) {
            if (colors->size() != n) throw domain_error("colors must cover every vertex exactly once");
            g.colors_ = std::move(*colors);
        }
        return g;
    }

    std::size_t n() const { return n_; }
    std::size_t words() const { return words_; }

    bool adjacent(vertex_t u, vertex_t v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }

    const std::vector<vertex_t>& neighbors(vertex_t v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(vertex_t v) const { return neighbors(v).size(); }

    std::span<const std::uint64_t> row(vertex_t v) const {
        check_vertex(v);
        return {bits_.data() + v * words_, words_};
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& nb : adj_) twice += nb.size();
        return twice / 2;
    }

    // Edges listed once with u < v, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (vertex_t u = 0; u < n_; ++u)
            for (vertex_t v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    const std::optional<std::vector<Role>>& roles() const { return roles_; }
    const std::optional<std::vector<int>>& colors() const { return colors_; }

    Role role(vertex_t v) const {
        check_vertex(v);
        return roles_ ? (*roles_)[v] : Role::plain;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && bits_ == o.bits_ && roles_ == o.roles_ && colors_ == o.colors_;
    }

    // Mutating interface used by builders; callers must invoke finish() once done.
    void add_edge(vertex_t u, vertex_t v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw domain_error("self-loop rejected");
        if (adjacent(u, v)) throw domain_error("duplicate edge rejected");
        set_bit(u, v);
        set_bit(v, u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }

    void finish() {
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    void set_roles(std::vector<Role> roles) {
        if (roles.size() != n_) throw domain_error("roles must cover every vertex exactly once");
        roles_ = std::move(roles);
    }

    void set_colors(std::vector<int> colors) {
        if (colors.size() != n_) throw domain_error("colors must cover every vertex exactly once");
        colors_ = std::move(colors);
    }

private:
    void check_vertex(vertex_t v) const {
        if (v >= n_) throw domain_error("vertex id " + std::to_string(v) + " out of range");
    }
    void set_bit(vertex_t u, vertex_t v) { bits_[u * words_ + v / 64] |= 1ull << (v % 64); }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<vertex_t>> adj_;
    std::optional<std::vector<Role>> roles_;
    std::optional<std::vector<int>> colors_;
};

// One flip: a vertex subset whose induced subgraph gets complemented.
// Members are kept sorted and unique.
struct FlipSet {
    std::vector<vertex_t> members;

    FlipSet() = default;
    explicit FlipSet(std::vector<vertex_t> m) : members(std::move(m)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    bool contains(vertex_t v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    std::size_t size() const { return members.size(); }
    bool operator==(const FlipSet&) const = default;
    bool operator<(const FlipSet& o) const { return members < o.members; }
};

// An unordered collection of flips; equality ignores listing order.
struct FlipCollection {
    std::vector<FlipSet> flips;

    FlipCollection() = default;
    explicit FlipCollection(std::vector<FlipSet> f) : flips(std::move(f)) {}

    std::size_t size() const { return flips.size(); }
    bool empty() const { return flips.empty(); }

    FlipCollection canonical() const {
        FlipCollection c = *this;
        std::sort(c.flips.begin(), c.flips.end());
        return c;
    }

    bool operator==(const FlipCollection& o) const {
        return canonical().flips == o.canonical().flips;
    }

    void check_against(const Graph& g) const {
        for (const auto& f : flips)
            for (vertex_t v : f.members)
                if (v >= g.n()) throw domain_error("flip references vertex " + std::to_string(v) + " >= n");
    }
};

// Lazy adjacency of a graph under a flip collection: adjacency(u,v) equals the
// base value xor the parity of flips containing both endpoints. Rows are
// synthesized on demand; nothing is materialized.
class FlippedView {
public:
    FlippedView(const Graph& g, const FlipCollection& flips) : g_(g), words_(g.words()) {
        flips.check_against(g);
        for (const auto& f : flips.flips) {
            masks_.emplace_back(words_, 0);
            auto& m = masks_.back();
            for (vertex_t v : f.members) m[v / 64] |= 1ull << (v % 64);
        }
    }

    const Graph& base() const { return g_; }
    std::size_t n() const { return g_.n(); }
    std::size_t words() const { return words_; }

    bool adjacent(vertex_t u, vertex_t v) const {
        if (u == v) return false;
        bool a = g_.adjacent(u, v);
        for (const auto& m : masks_)
            if (bit(m, u) && bit(m, v)) a = !a;
        return a;
    }

    // Writes the flipped adjacency row of v into out (out.size() == words()).
    void row_into(vertex_t v, std::span<std::uint64_t> out) const {
        auto base = g_.row(v);
        std::copy(base.begin(), base.end(), out.begin());
        for (const auto& m : masks_)
            if (bit(m, v))
                for (std::size_t w = 0; w < words_; ++w) out[w] ^= m[w];
        out[v / 64] &= ~(1ull << (v % 64)); // no self-loop
        if (std::size_t tail = n() % 64; tail != 0) out[words_ - 1] &= (~0ull) >> (64 - tail);
    }

    std::size_t degree(vertex_t v) const {
        std::vector<std::uint64_t> r(words_);
        row_into(v, r);
        std::size_t d = 0;
        for (auto w : r) d += std::popcount(w);
        return d;
    }

    bool isolated(vertex_t v) const { return degree(v) == 0; }

private:
    static bool bit(const std::vector<std::uint64_t>& m, vertex_t v) {
        return (m[v / 64] >> (v % 64)) & 1u;
    }

    const Graph& g_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> masks_;
};

// Materializes the flipped graph. Roles and colors carry over; the input is
// untouched.
inline Graph apply_flips(const Graph& g, const FlipCollection& flips) {
    FlippedView view(g, flips);
    Graph out(g.n());
    std::vector<std::uint64_t> row(g.words());
    for (vertex_t u = 0; u < g.n(); ++u) {
        view.row_into(u, row);
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                vertex_t v = static_cast<vertex_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                if (u < v) out.add_edge(u, v);
            }
        }
    }
    out.finish();
    if (g.roles()) out.set_roles(*g.roles());
    if (g.colors()) out.set_colors(*g.colors());
    return out;
}

// The two-flip simulation of blockading v: flip N(v) ∪ {v}, then N(v).
// In the flipped graph v is isolated and every other adjacency is preserved.
inline FlipCollection blockade_flips(const Graph& g, vertex_t v) {
    if (v >= g.n()) throw domain_error("blockade vertex out of range");
    std::vector<vertex_t> closed = g.neighbors(v);
    std::vector<vertex_t> open = closed;
    closed.push_back(v);
    return FlipCollection{{FlipSet(std::move(closed)), FlipSet(std::move(open))}};
}

// Vertices at flipped-graph distance <= r from v (v included);
// r == kInfiniteRadius yields the connected component. Sorted output.
inline std::vector<vertex_t> reachable(const Graph& g, const FlipCollection& flips, vertex_t v,
                                       std::uint32_t r) {
    if (v >= g.n()) throw domain_error("source vertex out of range");
    FlippedView view(g, flips);
    std::size_t words = g.words();
    std::vector<std::uint64_t> seen(words, 0), frontier(words, 0), row(words), next(words);
    seen[v / 64] |= 1ull << (v % 64);
    frontier = seen;
    for (std::uint32_t step = 0; step < r; ++step) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits) {
                vertex_t u = static_cast<vertex_t>(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
                view.row_into(u, row);
                for (std::size_t k = 0; k < words; ++k) next[k] |= row[k];
            }
        }
        for (std::size_t k = 0; k < words; ++k) {
            next[k] &= ~seen[k];
            seen[k] |= next[k];
            if (next[k]) any = true;
        }
        frontier = next;
        if (!any) break;
    }
    std::vector<vertex_t> out;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = seen[w];
        while (bits) {
            out.push_back(static_cast<vertex_t>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

// True iff g contains K_{t,t} as a (not necessarily induced) subgraph.
// Exhaustive over t-subsets of one side; intended for n <= ~60, t <= 3.
inline bool has_biclique(const Graph& g, std::size_t t) {
    if (t < 1) throw domain_error("biclique size must be >= 1");
    const std::size_t n = g.n();
    if (n < 2 * t) return false;
    std::vector<vertex_t> side(t);
    std::size_t words = g.words();
    std::vector<std::uint64_t> common(words);
    auto count_common = [&]() {
        std::fill(common.begin(), common.end(), ~0ull);
        for (vertex_t u : side) {
            auto r = g.row(u);
            for (std::size_t w = 0; w < words; ++w) common[w] &= r[w];
        }
        for (vertex_t u : side) common[u / 64] &= ~(1ull << (u % 64));
        std::size_t c = 0;
        for (auto w : common) c += std::popcount(w);
        return c;
    };
    // Enumerate t-subsets in lex order.
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        for (std::size_t i = 0; i < t; ++i) side[i] = static_cast<vertex_t>(idx[i]);
        if (count_common() >= t) return true;
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

// Induced subgraph on S (need not be sorted); vertex k of the result is S'[k]
// for the sorted, deduplicated S'. Roles and colors are restricted alongside.
inline Graph induced_subgraph(const Graph& g, std::vector<vertex_t> S) {
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
    for (vertex_t v : S)
        if (v >= g.n()) throw domain_error("induced subgraph vertex out of range");
    Graph out(S.size());
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            if (g.adjacent(S[i], S[j]))
                out.add_edge(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
    out.finish();
    if (g.roles()) {
        std::vector<Role> r;
        r.reserve(S.size());
        for (vertex_t v : S) r.push_back((*g.roles())[v]);
        out.set_roles(std::move(r));
    }
    if (g.colors()) {
        std::vector<int> c;
        c.reserve(S.size());
        for (vertex_t v : S) c.push_back((*g.colors())[v]);
        out.set_colors(std::move(c));
    }
    return out;
}

namespace detail {

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                               std::vector<bool>& used, std::size_t next) {
    const std::size_t n = a.n();
    if (next == n) return true;
    for (vertex_t cand = 0; cand < n; ++cand) {
        if (used[cand] || a.degree(static_cast<vertex_t>(next)) != b.degree(cand)) continue;
        bool ok = true;
        for (vertex_t prev = 0; prev < next && ok; ++prev)
            if (a.adjacent(static_cast<vertex_t>(next), prev) !=
                b.adjacent(cand, static_cast<vertex_t>(map[prev])))
                ok = false;
        if (!ok) continue;
        map[next] = static_cast<int>(cand);
        used[cand] = true;
        if (extend_isomorphism(a, b, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

} // namespace detail

// Exact isomorphism test by backtracking, for graphs with at most 12 vertices.
inline bool is_isomorphic_small(const Graph& a, const Graph& b) {
    if (a.n() > 12 || b.n() > 12) throw resource_error("is_isomorphic_small limited to 12 vertices");
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    auto degs = [](const Graph& g) {
        std::vector<std::size_t> d;
        for (vertex_t v = 0; v < g.n(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    std::vector<int> map(a.n(), -1);
    std::vector<bool> used(a.n(), false);
    return detail::extend_isomorphism(a, b, map, used, 0);
}

} // namespace flipwidth
