#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdom/bitset.hpp"
#include "gdom/error.hpp"

namespace gdom {

using Edge = std::pair<Vertex, Vertex>;

// Which graph a neighborhood query refers to: G itself or its complement.
enum class Side { graph, complement };

/**
 * Immutable simple undirected graph on vertices 0..n-1 with one adjacency
 * bit-row per vertex. Complement neighborhoods are derived on demand from
 * the same rows; no second adjacency copy is kept.
 */
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::span<const Edge> edges) : n_(n), rows_(n, Bitset(n)) {
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has endpoint out of range for n=" + std::to_string(n));
            if (u == v) throw GraphError("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
            if (!rows_[u].test(v)) {
                rows_[u].set(v);
                rows_[v].set(u);
                ++m_;
            }
        }
    }
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const {
        check(u);
        check(v);
        return rows_[u].test(v);
    }

    const Bitset& neighbors(Vertex v) const {
        check(v);
        return rows_[v];
    }

    // V \ N[v]
    Bitset complement_neighbors(Vertex v) const {
        check(v);
        Bitset out = rows_[v];
        out.flip();
        out.reset(v);
        return out;
    }

    Bitset neighbors(Vertex v, Side side) const {
        return side == Side::graph ? neighbors(v) : complement_neighbors(v);
    }

    Bitset closed_neighbors(Vertex v, Side side = Side::graph) const {
        Bitset out = neighbors(v, side);
        out.set(v);
        return out;
    }

    std::size_t degree(Vertex v) const { return neighbors(v).count(); }
    std::size_t degree(Vertex v, Side side) const {
        return side == Side::graph ? degree(v) : n_ - 1 - degree(v);
    }

    std::size_t max_degree(Side side = Side::graph) const { return extreme_degree(side, true); }
    std::size_t min_degree(Side side = Side::graph) const { return extreme_degree(side, false); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u)
            rows_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    // Explicit copy of the complement; used by tests and duality checks.
    Graph materialize_complement() const {
        std::vector<Edge> es;
        for (Vertex u = 0; u < n_; ++u)
            complement_neighbors(u).for_each([&](Vertex v) {
                if (u < v) es.emplace_back(u, v);
            });
        return Graph(n_, es);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    void check(Vertex v) const {
        if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
    }

    std::size_t extreme_degree(Side side, bool want_max) const {
        if (n_ == 0) return 0;
        std::size_t best = degree(0, side);
        for (Vertex v = 1; v < n_; ++v) {
            std::size_t d = degree(v, side);
            best = want_max ? std::max(best, d) : std::min(best, d);
        }
        return best;
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<Bitset> rows_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

/**
 * Subset of vertices that remembers insertion order. Purification walks the
 * order backwards, so it is part of the value, not an implementation detail.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : members_(universe) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }
    VertexSet(std::size_t universe, std::span<const Vertex> vs) : VertexSet(universe) {
        for (Vertex v : vs) insert(v);
    }

    std::size_t universe() const { return members_.size(); }
    std::size_t size() const { return order_.size(); }
    bool empty() const { return order_.empty(); }

    bool contains(Vertex v) const { return v < members_.size() && members_.test(v); }

    // Returns false if v was already present.
    bool insert(Vertex v) {
        if (v >= members_.size())
            throw GraphError("vertex " + std::to_string(v) + " out of range for set over " +
                             std::to_string(members_.size()) + " vertices");
        if (members_.test(v)) return false;
        members_.set(v);
        order_.push_back(v);
        return true;
    }

    bool erase(Vertex v) {
        if (!contains(v)) return false;
        members_.reset(v);
        order_.erase(std::find(order_.begin(), order_.end(), v));
        return true;
    }

    std::span<const Vertex> order() const { return order_; }
    const Bitset& members() const { return members_; }

    auto begin() const { return order_.begin(); }
    auto end() const { return order_.end(); }

    std::vector<Vertex> sorted() const {
        std::vector<Vertex> out = order_;
        std::sort(out.begin(), out.end());
        return out;
    }

    bool same_members(const VertexSet& o) const { return members_ == o.members_; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.order_ == b.order_; }

private:
    std::vector<Vertex> order_;
    Bitset members_;
};

inline std::string to_string(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.order()[i]);
    }
    return out + "}";
}

}  // namespace gdom
