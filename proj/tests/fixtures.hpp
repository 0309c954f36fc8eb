#pragma once

#include <cstdint>
#include <vector>

#include "gdom/gdom.hpp"
#include "oracles.hpp"

namespace fixtures {

// Adjacency matrix read through has_edge only.
inline oracle::Matrix to_matrix(const gdom::Graph& g) {
    const auto n = g.vertex_count();
    oracle::Matrix a(n, std::vector<bool>(n, false));
    for (gdom::Vertex u = 0; u < n; ++u)
        for (gdom::Vertex v = 0; v < n; ++v)
            if (u != v) a[u][v] = g.has_edge(u, v);
    return a;
}

inline std::uint64_t to_mask(const gdom::VertexSet& s) {
    std::uint64_t m = 0;
    for (auto v : s) m |= std::uint64_t{1} << v;
    return m;
}

inline gdom::VertexSet from_mask(std::size_t n, std::uint64_t m) {
    gdom::VertexSet s(n);
    for (gdom::Vertex v = 0; v < n; ++v)
        if (m >> v & 1) s.insert(v);
    return s;
}

inline std::vector<gdom::Vertex> order_of(const gdom::VertexSet& s) {
    auto o = s.order();
    return {o.begin(), o.end()};
}

inline gdom::Graph p4() { return gdom::gen_path(4); }

// 50 connected instances with connected complements, n in [6,16].
inline const std::vector<gdom::Instance>& sweep() {
    static const auto suite = gdom::random_suite(50, 6, 16, {0.2, 0.5, 0.8}, 2024);
    return suite;
}

}  // namespace fixtures
