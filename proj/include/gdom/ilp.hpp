#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gdom/graph.hpp"

namespace gdom {

/**
 * 0-1 covering model: minimize sum x_i subject to A x >= 1 and B x >= 1,
 * where A and B are the closed-neighborhood matrices of G and of its
 * complement. Rows are stored as bitsets over the variables.
 */
struct IlpModel {
    std::size_t n = 0;
    std::vector<Bitset> a;  // a[i][j] = 1 iff i == j or ij is an edge
    std::vector<Bitset> b;  // b[i][j] = 1 iff i == j or a[i][j] == 0

    std::size_t constraint_count() const { return a.size() + b.size(); }

    bool satisfied_by(const Bitset& x) const {
        for (const auto& row : a)
            if (!row.intersects(x)) return false;
        for (const auto& row : b)
            if (!row.intersects(x)) return false;
        return true;
    }
};

inline IlpModel build_model(const Graph& g) {
    IlpModel m;
    m.n = g.vertex_count();
    for (Vertex i = 0; i < m.n; ++i) {
        Bitset row(m.n);
        for (Vertex j = 0; j < m.n; ++j)
            if (i == j || g.has_edge(i, j)) row.set(j);
        Bitset crow = row;
        crow.flip();
        crow.set(i);
        m.a.push_back(std::move(row));
        m.b.push_back(std::move(crow));
    }
    return m;
}

namespace detail {
inline void append_terms(std::string& out, const Bitset& row) {
    bool first = true;
    row.for_each([&](Vertex j) {
        if (!first) out += " + ";
        out += "x" + std::to_string(j);
        first = false;
    });
}
}  // namespace detail

/// CPLEX LP text. Constraints g<i> cover G, c<i> cover the complement.
inline std::string export_lp(const IlpModel& m, std::string_view name) {
    std::string out;
    out += "\\ Problem: ";
    out += name;
    out += "\n";
    out += "Minimize\n obj: ";
    detail::append_terms(out, Bitset(m.n, true));
    out += "\nSubject To\n";
    auto rows = [&](const std::vector<Bitset>& rs, char prefix) {
        for (std::size_t i = 0; i < rs.size(); ++i) {
            out += " ";
            out += prefix;
            out += std::to_string(i) + ": ";
            detail::append_terms(out, rs[i]);
            out += " >= 1\n";
        }
    };
    rows(m.a, 'g');
    rows(m.b, 'c');
    out += "Binary\n";
    for (std::size_t i = 0; i < m.n; ++i) out += " x" + std::to_string(i) + "\n";
    out += "End\n";
    return out;
}

}  // namespace gdom
