#pragma once

#include <optional>
#include <string_view>

#include "gdom/graph.hpp"

namespace gdom {

// N[D] on the requested side: D together with every vertex having a D-neighbor.
inline Bitset dominated_by(const Graph& g, const VertexSet& d, Side side = Side::graph) {
    Bitset out = d.members();
    for (Vertex v : d) out |= g.neighbors(v, side);
    return out;
}

inline bool is_dominating(const Graph& g, const VertexSet& d, Side side = Side::graph) {
    return dominated_by(g, d, side).all();
}

enum class DominationFailure { none, empty_set, undominated_in_graph, undominated_in_complement };

constexpr std::string_view describe(DominationFailure f) {
    switch (f) {
        case DominationFailure::none: return "ok";
        case DominationFailure::empty_set: return "empty set";
        case DominationFailure::undominated_in_graph: return "vertex not dominated in G";
        case DominationFailure::undominated_in_complement: return "vertex not dominated in complement";
    }
    return "?";
}

struct DominationVerdict {
    DominationFailure failure = DominationFailure::none;
    std::optional<Vertex> witness;  // lowest undominated vertex, when there is one

    bool ok() const { return failure == DominationFailure::none; }
    explicit operator bool() const { return ok(); }
};

inline DominationVerdict check_global_domination(const Graph& g, const VertexSet& d) {
    if (d.empty()) return {DominationFailure::empty_set, std::nullopt};
    for (Side side : {Side::graph, Side::complement}) {
        Bitset missing = dominated_by(g, d, side);
        missing.flip();
        if (missing.any())
            return {side == Side::graph ? DominationFailure::undominated_in_graph
                                        : DominationFailure::undominated_in_complement,
                    static_cast<Vertex>(missing.find_first())};
    }
    return {};
}

inline bool is_global_dominating(const Graph& g, const VertexSet& d) { return check_global_domination(g, d).ok(); }

/**
 * pn(v, S) = { u in V : N(u) ∩ S = {v} } with open neighborhoods, taken
 * literally: v itself never qualifies, while other members of S can.
 */
inline VertexSet private_neighbors(const Graph& g, Vertex v, const VertexSet& s, Side side = Side::graph) {
    if (!s.contains(v))
        throw GraphError("private_neighbors: vertex " + std::to_string(v) + " is not in the set");
    const Bitset& members = s.members();
    VertexSet out(g.vertex_count());
    // Candidates are the side-neighbors of v; others cannot have v in N(u) ∩ S.
    g.neighbors(v, side).for_each([&](Vertex u) {
        if (g.neighbors(u, side).count_and(members) == 1) out.insert(u);
    });
    return out;
}

}  // namespace gdom
