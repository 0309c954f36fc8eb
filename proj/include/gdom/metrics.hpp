#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

// BFS distances from `source`, level-synchronous over bit-rows.
inline std::vector<std::size_t> distances_from(const Graph& g, Vertex source, Side side = Side::graph) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> dist(n, unreachable);
    Bitset visited(n), frontier(n);
    visited.set(source);
    frontier.set(source);
    dist[source] = 0;
    for (std::size_t level = 1; frontier.any(); ++level) {
        Bitset next(n);
        frontier.for_each([&](Vertex u) { next |= g.neighbors(u, side); });
        next.subtract(visited);
        next.for_each([&](Vertex v) { dist[v] = level; });
        visited |= next;
        frontier = std::move(next);
    }
    return dist;
}

inline bool is_connected(const Graph& g, Side side = Side::graph) {
    if (g.vertex_count() == 0) return true;
    auto d = distances_from(g, 0, side);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == unreachable; });
}

// Per-vertex eccentricity; unreachable for every vertex when G is disconnected.
inline std::vector<std::size_t> eccentricities(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> ecc(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        auto d = distances_from(g, v);
        ecc[v] = *std::max_element(d.begin(), d.end());
    }
    return ecc;
}

// Vertices adjacent to at least one degree-1 vertex.
inline Bitset support_vertices(const Graph& g) {
    Bitset supp(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) supp |= g.neighbors(v);
    return supp;
}

struct GraphMetrics {
    std::optional<std::size_t> radius;    // empty when G is disconnected
    std::optional<std::size_t> diameter;  // empty when G is disconnected
    std::size_t support_count = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    bool connected = false;
    bool complement_connected = false;
};

inline GraphMetrics metrics(const Graph& g) {
    GraphMetrics out;
    out.support_count = support_vertices(g).count();
    out.max_degree = g.max_degree();
    out.min_degree = g.min_degree();
    out.connected = is_connected(g);
    out.complement_connected = is_connected(g, Side::complement);
    if (out.connected && g.vertex_count() > 0) {
        auto ecc = eccentricities(g);
        out.radius = *std::min_element(ecc.begin(), ecc.end());
        out.diameter = *std::max_element(ecc.begin(), ecc.end());
    }
    return out;
}

// Standing assumption of every solver: both G and its complement are connected.
inline void require_connected(const Graph& g) {
    if (g.vertex_count() == 0) throw ConnectivityError("graph has no vertices");
    if (!is_connected(g)) throw ConnectivityError("graph is disconnected");
    if (!is_connected(g, Side::complement)) throw ConnectivityError("complement graph is disconnected");
}

}  // namespace gdom
