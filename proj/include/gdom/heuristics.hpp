#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdom/deadline.hpp"
#include "gdom/domination.hpp"
#include "gdom/metrics.hpp"

namespace gdom {

/**
 * Working partition of the greedy constructions:
 *   d - chosen vertices
 *   a - outside d with no G-neighbor in d
 *   b - outside d with no complement-neighbor in d
 *   c - outside d, dominated in both G and the complement
 * For nonempty d the four sets partition V. The empty start used by the
 * modified variants has a = b = V.
 */
struct DominationState {
    VertexSet d;
    Bitset a;
    Bitset b;
    Bitset c;
    std::size_t iteration = 0;

    bool done() const { return a.none() && b.none(); }
};

inline DominationState empty_state(const Graph& g) {
    const std::size_t n = g.vertex_count();
    return {VertexSet(n), Bitset(n, true), Bitset(n, true), Bitset(n), 0};
}

// Adds v to d and moves everything v newly dominates out of a and b.
inline void add_vertex(const Graph& g, DominationState& s, Vertex v) {
    if (!s.d.insert(v)) throw InvariantError("vertex " + std::to_string(v) + " added twice");
    s.a.subtract(g.closed_neighbors(v));
    s.b.subtract(g.closed_neighbors(v, Side::complement));
    s.c = s.d.members() | s.a | s.b;
    s.c.flip();
}

/**
 * Describes the first way `s` fails to be the partition its fields claim,
 * recomputing a, b and c from d alone. Empty optional means consistent.
 */
inline std::optional<std::string> partition_violation(const Graph& g, const DominationState& s) {
    const std::size_t n = g.vertex_count();
    if (s.d.empty()) return "chosen set is empty";
    const Bitset& d = s.d.members();
    if (d.intersects(s.a) || d.intersects(s.b) || d.intersects(s.c) || s.a.intersects(s.b) ||
        s.a.intersects(s.c) || s.b.intersects(s.c))
        return "sets are not pairwise disjoint";
    if ((d | s.a | s.b | s.c).count() != n) return "sets do not cover V";
    for (Vertex v = 0; v < n; ++v) {
        if (d.test(v)) continue;
        const bool has_nbr = g.neighbors(v).intersects(d);
        const bool has_non_nbr = d.count_and_not(g.neighbors(v)) > 0;
        if (s.a.test(v) != !has_nbr) return "membership of " + std::to_string(v) + " in A is wrong";
        if (s.b.test(v) != !has_non_nbr) return "membership of " + std::to_string(v) + " in B is wrong";
        if (s.c.test(v) != (has_nbr && has_non_nbr)) return "membership of " + std::to_string(v) + " in C is wrong";
    }
    return std::nullopt;
}

namespace detail {
inline void require_outside(const DominationState& s, Vertex v) {
    if (s.d.contains(v)) throw GraphError("vertex " + std::to_string(v) + " is already chosen");
}

// |N(v) ∩ x|
inline std::size_t graph_cover(const Graph& g, Vertex v, const Bitset& x) { return g.neighbors(v).count_and(x); }

// |N̄(v) ∩ x|
inline std::size_t complement_cover(const Graph& g, Vertex v, const Bitset& x) {
    return x.count_and_not(g.neighbors(v)) - (x.test(v) ? 1 : 0);
}

// Vertices of x that v dominates, v included when it lies in x itself.
inline std::size_t closed_graph_cover(const Graph& g, Vertex v, const Bitset& x) {
    return graph_cover(g, v, x) + (x.test(v) ? 1 : 0);
}
inline std::size_t closed_complement_cover(const Graph& g, Vertex v, const Bitset& x) {
    return x.count_and_not(g.neighbors(v));
}
}  // namespace detail

/// Global active degree |N_A[v] ∪ N̄_B[v]|; v itself always counts once.
inline std::size_t gad(const Graph& g, const DominationState& s, Vertex v) {
    detail::require_outside(s, v);
    Bitset cover = (g.neighbors(v) & s.a) | (s.b - g.neighbors(v));
    cover.set(v);
    return cover.count();
}

inline std::size_t gad_pair(const Graph& g, const DominationState& s, Vertex v, Vertex u) {
    if (v == u) throw GraphError("gad_pair needs two distinct vertices");
    detail::require_outside(s, v);
    detail::require_outside(s, u);
    Bitset cover = ((g.neighbors(v) | g.neighbors(u)) & s.a) | (s.b - g.neighbors(v)) | (s.b - g.neighbors(u));
    cover.set(v).set(u);
    return cover.count();
}

struct InitialPair {
    Vertex u = 0;
    Vertex v = 0;
    std::size_t score = 0;  // |N[u] △ N[v]|
};

/// Lexicographically smallest pair u < v maximizing |N[u] △ N[v]|.
inline InitialPair best_initial_pair(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2) throw GraphError("best_initial_pair needs at least two vertices");
    std::vector<Bitset> closed;
    closed.reserve(n);
    for (Vertex v = 0; v < n; ++v) closed.push_back(g.closed_neighbors(v));
    InitialPair best{0, 1, 0};
    bool first = true;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const std::size_t score = closed[u].count_and_not(closed[v]) + closed[v].count_and_not(closed[u]);
            if (first || score > best.score) {
                best = {u, v, score};
                first = false;
            }
        }
    return best;
}

inline DominationState initial_state(const Graph& g, const InitialPair& p) {
    DominationState s = empty_state(g);
    add_vertex(g, s, p.u);
    add_vertex(g, s, p.v);
    return s;
}

struct Pick {
    std::size_t iteration = 0;
    std::vector<Vertex> added;
    std::size_t score = 0;
};

struct HeuristicTrace {
    std::vector<Pick> picks;
    std::size_t halted_at = 0;
};

struct HeuristicResult {
    VertexSet set;
    HeuristicTrace trace;
};

struct HeuristicOptions {
    Deadline deadline;
    // Invoked with every state whose chosen set is nonempty: after the
    // initial pair (H1/H3) and after each iteration.
    std::function<void(const DominationState&)> on_step;
};

namespace detail {

// First vertex outside d maximizing key(v); key returns a comparable value.
template <typename Key>
Vertex argmax_outside(const Graph& g, const VertexSet& d, Key&& key) {
    std::optional<Vertex> best;
    decltype(key(Vertex{})) best_key{};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (d.contains(v)) continue;
        auto k = key(v);
        if (!best || k > best_key) {
            best = v;
            best_key = k;
        }
    }
    if (!best) throw InvariantError("no vertex left to choose while the set is still infeasible");
    return *best;
}

inline void notify(const HeuristicOptions& opt, const DominationState& s) {
    if (opt.on_step && !s.d.empty()) opt.on_step(s);
}

inline HeuristicResult finish(const Graph& g, DominationState& s, HeuristicTrace trace) {
    trace.halted_at = s.iteration;
    if (!is_global_dominating(g, s.d)) throw InvariantError("heuristic produced an infeasible set");
    return {std::move(s.d), std::move(trace)};
}

inline HeuristicResult run_max_gad(const Graph& g, DominationState s, HeuristicTrace trace,
                                   const HeuristicOptions& opt) {
    notify(opt, s);
    while (!s.done()) {
        opt.deadline.check();
        ++s.iteration;
        const Vertex v = argmax_outside(g, s.d, [&](Vertex w) { return gad(g, s, w); });
        const std::size_t score = gad(g, s, v);
        add_vertex(g, s, v);
        trace.picks.push_back({s.iteration, {v}, score});
        notify(opt, s);
    }
    return finish(g, s, std::move(trace));
}

inline HeuristicResult run_pair_rule(const Graph& g, DominationState s, HeuristicTrace trace,
                                     const HeuristicOptions& opt) {
    notify(opt, s);
    while (!s.done()) {
        opt.deadline.check();
        ++s.iteration;
        const Vertex v = argmax_outside(g, s.d, [&](Vertex w) { return gad(g, s, w); });
        const std::size_t single = gad(g, s, v);

        std::vector<Vertex> pair;
        if (s.a.any())
            pair.push_back(argmax_outside(g, s.d, [&](Vertex w) { return closed_graph_cover(g, w, s.a); }));
        if (s.b.any()) {
            const Vertex u = argmax_outside(g, s.d, [&](Vertex w) { return closed_complement_cover(g, w, s.b); });
            if (pair.empty() || pair.front() != u) pair.push_back(u);
        }
        // With one of the two undefined (or both equal) the pair is a singleton.
        const std::size_t pair_score = pair.size() == 2 ? gad_pair(g, s, pair[0], pair[1]) : gad(g, s, pair[0]);

        if (2 * single >= pair_score) {
            add_vertex(g, s, v);
            trace.picks.push_back({s.iteration, {v}, single});
        } else {
            for (Vertex w : pair) add_vertex(g, s, w);
            trace.picks.push_back({s.iteration, pair, pair_score});
        }
        notify(opt, s);
    }
    return finish(g, s, std::move(trace));
}

inline std::pair<DominationState, HeuristicTrace> paired_start(const Graph& g) {
    const InitialPair p = best_initial_pair(g);
    HeuristicTrace trace;
    trace.picks.push_back({0, {p.u, p.v}, p.score});
    return {initial_state(g, p), std::move(trace)};
}

}  // namespace detail

/// H1: best initial pair, then repeatedly the vertex of maximum GAD.
inline HeuristicResult h1(const Graph& g, const HeuristicOptions& opt = {}) {
    require_connected(g);
    auto [s, trace] = detail::paired_start(g);
    return detail::run_max_gad(g, std::move(s), std::move(trace), opt);
}

/// H1 without the initial pair: starts from the empty set.
inline HeuristicResult h1_modified(const Graph& g, const HeuristicOptions& opt = {}) {
    require_connected(g);
    return detail::run_max_gad(g, empty_state(g), {}, opt);
}

/// H3: as H1, but a (G-cover, complement-cover) pair may replace the max-GAD
/// vertex when the pair covers more than twice as much.
inline HeuristicResult h3(const Graph& g, const HeuristicOptions& opt = {}) {
    require_connected(g);
    auto [s, trace] = detail::paired_start(g);
    return detail::run_pair_rule(g, std::move(s), std::move(trace), opt);
}

inline HeuristicResult h3_modified(const Graph& g, const HeuristicOptions& opt = {}) {
    require_connected(g);
    return detail::run_pair_rule(g, empty_state(g), {}, opt);
}

/**
 * H2: from the empty set, each round adds the vertex dominating most
 * undominated vertices of G (ties: larger complement cover, then lowest id)
 * if G is not yet dominated, then the symmetric choice for the complement.
 */
inline HeuristicResult h2(const Graph& g, const HeuristicOptions& opt = {}) {
    require_connected(g);
    const std::size_t n = g.vertex_count();
    VertexSet d(n);
    Bitset open_g(n, true);  // V \ N[D]
    Bitset open_c(n, true);  // V \ N̄[D]
    HeuristicTrace trace;
    std::size_t iteration = 0;

    auto add = [&](Vertex v) {
        d.insert(v);
        open_g.subtract(g.closed_neighbors(v));
        open_c.subtract(g.closed_neighbors(v, Side::complement));
    };
    auto cover_g = [&](Vertex w) { return detail::closed_graph_cover(g, w, open_g); };
    auto cover_c = [&](Vertex w) { return detail::closed_complement_cover(g, w, open_c); };

    while (open_g.any() || open_c.any()) {
        opt.deadline.check();
        ++iteration;
        Pick pick{iteration, {}, 0};
        if (open_g.any()) {
            const Vertex v = detail::argmax_outside(g, d, [&](Vertex w) { return std::pair{cover_g(w), cover_c(w)}; });
            pick.score += cover_g(v);
            pick.added.push_back(v);
            add(v);
        }
        if (open_c.any()) {
            const Vertex u = detail::argmax_outside(g, d, [&](Vertex w) { return std::pair{cover_c(w), cover_g(w)}; });
            pick.score += cover_c(u);
            pick.added.push_back(u);
            add(u);
        }
        trace.picks.push_back(std::move(pick));
        if (opt.on_step) {
            DominationState s{d, open_g, open_c, Bitset(n), iteration};
            s.c = (d.members() | open_g | open_c);
            s.c.flip();
            opt.on_step(s);
        }
    }
    trace.halted_at = iteration;
    if (!is_global_dominating(g, d)) throw InvariantError("H2 produced an infeasible set");
    return {std::move(d), std::move(trace)};
}

}  // namespace gdom
