#pragma once

#include <cstddef>
#include <vector>

#include "gdom/domination.hpp"

namespace gdom {

struct PurifyReport {
    std::size_t before = 0;
    std::size_t after = 0;
    std::vector<Vertex> removed;  // in the order they were purged
    double pct = 0.0;             // 100 * (before - after) / before
};

struct PurifyResult {
    VertexSet set;
    PurifyReport report;
};

/**
 * True when v can leave d without breaking global domination: no vertex
 * outside d has v as its only neighbor in d (in G or in the complement),
 * and v is still dominated on both sides by d \ {v}.
 */
inline bool is_redundant(const Graph& g, const VertexSet& d, Vertex v) {
    if (d.size() < 2) return false;
    const Bitset& members = d.members();
    for (Side side : {Side::graph, Side::complement}) {
        bool private_outside = false;
        private_neighbors(g, v, d, side).members().for_each([&](Vertex u) {
            if (!members.test(u)) private_outside = true;
        });
        if (private_outside) return false;
        // v needs a side-neighbor among the remaining members.
        if (!g.neighbors(v, side).intersects(members)) return false;
    }
    return true;
}

/// Single reverse-insertion-order sweep; the result is a minimal GDS.
inline PurifyResult purify(const Graph& g, const VertexSet& d) {
    if (!is_global_dominating(g, d)) throw GraphError("purify: input is not a global dominating set");
    VertexSet current = d;
    PurifyReport report;
    report.before = d.size();
    const auto order = d.order();
    for (std::size_t i = order.size(); i-- > 0;) {
        const Vertex v = order[i];
        if (is_redundant(g, current, v)) {
            current.erase(v);
            report.removed.push_back(v);
        }
    }
    report.after = current.size();
    report.pct = report.before ? 100.0 * static_cast<double>(report.before - report.after) /
                                     static_cast<double>(report.before)
                               : 0.0;
    return {std::move(current), std::move(report)};
}

// No single vertex can be dropped.
inline bool is_minimal_global_dominating(const Graph& g, const VertexSet& d) {
    if (!is_global_dominating(g, d)) return false;
    for (Vertex v : d) {
        VertexSet smaller = d;
        smaller.erase(v);
        if (is_global_dominating(g, smaller)) return false;
    }
    return true;
}

}  // namespace gdom
