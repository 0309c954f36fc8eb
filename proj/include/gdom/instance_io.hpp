#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdom/metrics.hpp"

namespace gdom {

struct InstanceMeta {
    std::string name;
    std::size_t n = 0;
    std::size_t m = 0;
    double density = 0.0;            // 2m / (n(n-1))
    std::string source;              // file path, or "family:params:seed"
    std::size_t duplicate_edges = 0; // repeated edge lines collapsed while parsing
};

struct Instance {
    Graph graph;
    InstanceMeta meta;
};

inline double edge_density(std::size_t n, std::size_t m) {
    return n < 2 ? 0.0 : 2.0 * static_cast<double>(m) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

inline Instance make_instance(Graph g, std::string name, std::string source, std::size_t duplicates = 0) {
    InstanceMeta meta{std::move(name), g.vertex_count(), g.edge_count(), edge_density(g.vertex_count(), g.edge_count()),
                      std::move(source), duplicates};
    return {std::move(g), std::move(meta)};
}

enum class Format { edgelist, dimacs, auto_detect };

namespace detail {

struct LineReader {
    std::istringstream in;
    std::size_t line_no = 0;
    std::string line;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    bool next() {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            line.erase(0, first);
            return true;
        }
        return false;
    }
};

inline bool is_edge_list_comment(const std::string& line) { return line[0] == '#' || line[0] == '%'; }
inline bool is_dimacs_comment(const std::string& line) { return line[0] == 'c' && (line.size() == 1 || line[1] == ' ' || line[1] == '\t'); }

// Reads exactly `count` unsigned integers and rejects trailing tokens.
inline std::vector<std::uint64_t> read_uints(std::istringstream& ss, std::size_t count, std::size_t line_no,
                                             std::string_view what) {
    std::vector<std::uint64_t> out;
    std::string tok;
    while (ss >> tok) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("malformed " + std::string(what) + ": '" + tok + "' is not a non-negative integer", line_no);
        out.push_back(std::stoull(tok));
    }
    if (out.size() != count)
        throw ParseError("malformed " + std::string(what) + ": expected " + std::to_string(count) + " integers, got " +
                             std::to_string(out.size()),
                         line_no);
    return out;
}

inline Edge to_edge(std::uint64_t u, std::uint64_t v, std::size_t n, std::size_t line_no) {
    if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError("vertex index out of range 1.." + std::to_string(n) + " in edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")",
                         line_no);
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line_no);
    return {static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
}

inline Instance finish_parse(std::size_t n, std::size_t header_m, const std::vector<Edge>& edges, std::string name) {
    if (edges.size() != header_m)
        throw ParseError("edge count mismatch: header declares " + std::to_string(header_m) + ", found " +
                             std::to_string(edges.size()),
                         0);
    Graph g(n, edges);
    const std::size_t dups = edges.size() - g.edge_count();
    return make_instance(std::move(g), name, name, dups);
}

}  // namespace detail

/// "n m" header then m lines "u v", 1-indexed; '#' and '%' start comments.
inline Instance parse_edge_list(std::string_view text, std::string name = "") {
    detail::LineReader r(text);
    std::size_t n = 0, m = 0;
    bool header = false;
    std::vector<Edge> edges;
    while (r.next()) {
        if (detail::is_edge_list_comment(r.line)) continue;
        std::istringstream ss(r.line);
        if (!header) {
            auto v = detail::read_uints(ss, 2, r.line_no, "header");
            n = v[0];
            m = v[1];
            header = true;
            continue;
        }
        auto v = detail::read_uints(ss, 2, r.line_no, "edge line");
        edges.push_back(detail::to_edge(v[0], v[1], n, r.line_no));
    }
    if (!header) throw ParseError("missing 'n m' header", 0);
    return detail::finish_parse(n, m, edges, std::move(name));
}

/// "p edge n m" header, "e u v" lines (1-indexed), "c" comment lines.
inline Instance parse_dimacs(std::string_view text, std::string name = "") {
    detail::LineReader r(text);
    std::size_t n = 0, m = 0;
    bool header = false;
    std::vector<Edge> edges;
    while (r.next()) {
        if (detail::is_dimacs_comment(r.line)) continue;
        std::istringstream ss(r.line);
        std::string kind;
        ss >> kind;
        if (kind == "p") {
            if (header) throw ParseError("duplicate p-line", r.line_no);
            std::string fmt;
            ss >> fmt;
            if (fmt != "edge" && fmt != "col") throw ParseError("unsupported problem type '" + fmt + "'", r.line_no);
            auto v = detail::read_uints(ss, 2, r.line_no, "p-line");
            n = v[0];
            m = v[1];
            header = true;
        } else if (kind == "e") {
            if (!header) throw ParseError("edge line before p-line", r.line_no);
            auto v = detail::read_uints(ss, 2, r.line_no, "edge line");
            edges.push_back(detail::to_edge(v[0], v[1], n, r.line_no));
        } else {
            throw ParseError("unknown line type '" + kind + "'", r.line_no);
        }
    }
    if (!header) throw ParseError("missing 'p edge n m' line", 0);
    return detail::finish_parse(n, m, edges, std::move(name));
}

// DIMACS when the first meaningful line is a p-line or a c-comment.
inline Format detect_format(std::string_view text) {
    detail::LineReader r(text);
    while (r.next()) {
        if (detail::is_edge_list_comment(r.line)) continue;
        if (detail::is_dimacs_comment(r.line) || r.line.rfind("p ", 0) == 0) return Format::dimacs;
        return Format::edgelist;
    }
    return Format::edgelist;
}

inline Instance parse_instance(std::string_view text, Format fmt = Format::auto_detect, std::string name = "") {
    if (fmt == Format::auto_detect) fmt = detect_format(text);
    return fmt == Format::dimacs ? parse_dimacs(text, std::move(name)) : parse_edge_list(text, std::move(name));
}

inline std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Generators

inline Graph gen_path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

inline Graph gen_cycle(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, es);
}

inline Graph gen_complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

// K_{1,leaves}; the center is vertex 0.
inline Graph gen_star(std::size_t leaves) {
    std::vector<Edge> es;
    for (Vertex i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2)%5), spokes i ~ i+5.
inline Graph gen_petersen() {
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, i + 5);
    }
    return Graph(10, es);
}

/**
 * Nine-vertex graph where greedy max-GAD construction can end with four
 * vertices although three suffice ({4, 7, 8} here). Leaves 5 and 6 hang off
 * vertex 4, leaf 7 off vertex 0 and leaf 8 off vertex 1.
 */
inline Graph gen_greedy_gap_example() {
    return Graph(9, {{0, 3}, {2, 3}, {1, 2}, {1, 3}, {0, 2}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {1, 8}, {0, 7}});
}

struct RootedCopy {
    Graph graph;
    Vertex root = 0;
};

/**
 * Base vertex i is joined by an edge to the root of copy i. Base vertices
 * keep ids 0..n-1; copy i follows at the next free offset in its own order.
 */
inline Graph gen_rooted_product(const Graph& base, const std::vector<RootedCopy>& copies) {
    if (copies.size() != base.vertex_count())
        throw GraphError("rooted product needs one copy per base vertex: " + std::to_string(base.vertex_count()) +
                         " base vertices, " + std::to_string(copies.size()) + " copies");
    std::vector<Edge> es = base.edges();
    std::size_t offset = base.vertex_count();
    for (Vertex i = 0; i < copies.size(); ++i) {
        const auto& c = copies[i];
        if (c.root >= c.graph.vertex_count())
            throw GraphError("root " + std::to_string(c.root) + " out of range in copy " + std::to_string(i));
        for (const auto& [u, v] : c.graph.edges())
            es.emplace_back(static_cast<Vertex>(offset + u), static_cast<Vertex>(offset + v));
        es.emplace_back(i, static_cast<Vertex>(offset + c.root));
        offset += c.graph.vertex_count();
    }
    return Graph(offset, es);
}

struct TwoStar {
    Graph graph;
    Vertex center1 = 0;
    Vertex center2 = 0;
};

/**
 * Two stars S_m1 and S_m2 with centers 0 and m1+1, each center listed first
 * in its part. Leaves 1 and m1+2 are always joined; every other leaf-leaf
 * pair (within or across parts) is added with probability `p`.
 */
inline TwoStar gen_two_star_family(std::size_t m1, std::size_t m2, double p, std::uint64_t seed) {
    if (m1 < 2 || m2 < 2) throw GraphError("two-star family needs m1, m2 >= 2");
    if (p < 0.0 || p > 1.0) throw GraphError("leaf edge probability must lie in [0,1]");
    const std::size_t n = m1 + m2 + 2;
    const Vertex c1 = 0, c2 = static_cast<Vertex>(m1 + 1);
    std::vector<Edge> es;
    std::vector<Vertex> leaves;
    for (Vertex i = 1; i <= m1; ++i) {
        es.emplace_back(c1, i);
        leaves.push_back(i);
    }
    for (Vertex i = c2 + 1; i < n; ++i) {
        es.emplace_back(c2, i);
        leaves.push_back(i);
    }
    es.emplace_back(1, c2 + 1);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        for (std::size_t j = i + 1; j < leaves.size(); ++j)
            if (coin(rng)) es.emplace_back(leaves[i], leaves[j]);
    return {Graph(n, es), c1, c2};
}

/**
 * Rooted product of `base` with stars S_{m_i} rooted at their centers.
 * Requires m_1 >= ... >= m_n > Delta(base); centers are returned in order.
 */
inline std::pair<Graph, std::vector<Vertex>> gen_rooted_star_family(const Graph& base,
                                                                    const std::vector<std::size_t>& sizes) {
    if (sizes.size() != base.vertex_count())
        throw GraphError("need one star size per base vertex");
    const std::size_t delta = base.max_degree();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] <= delta)
            throw GraphError("star size " + std::to_string(sizes[i]) + " must exceed the base maximum degree " +
                             std::to_string(delta));
        if (i && sizes[i] > sizes[i - 1]) throw GraphError("star sizes must be non-increasing");
    }
    std::vector<RootedCopy> copies;
    std::vector<Vertex> centers;
    std::size_t offset = base.vertex_count();
    for (std::size_t m : sizes) {
        copies.push_back({gen_star(m), 0});
        centers.push_back(static_cast<Vertex>(offset));
        offset += m + 1;
    }
    return {gen_rooted_product(base, copies), std::move(centers)};
}

struct RandomOptions {
    std::size_t max_attempts = 1000;
};

/**
 * Uniform graph with exactly floor(density * n(n-1)/2) edges, redrawn until
 * both it and its complement are connected. Deterministic per (n, density, seed).
 */
inline Instance gen_random(std::size_t n, double density, std::uint64_t seed, RandomOptions opt = {}) {
    if (n < 4) throw GraphError("gen_random needs n >= 4");
    if (!(density > 0.0 && density < 1.0)) throw GraphError("density must lie in (0,1)");
    const std::size_t pairs = n * (n - 1) / 2;
    const auto m = static_cast<std::size_t>(std::floor(density * static_cast<double>(pairs) + 1e-9));
    std::vector<Edge> all;
    all.reserve(pairs);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) all.emplace_back(i, j);

    std::mt19937_64 rng(seed);
    std::ostringstream desc;
    desc << "random:n=" << n << ",density=" << density << ":" << seed;
    for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
        // Partial Fisher-Yates: the first m slots become a uniform m-subset.
        for (std::size_t i = 0; i < m; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pairs - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        Graph g(n, std::span<const Edge>(all.data(), m));
        if (is_connected(g) && is_connected(g, Side::complement))
            return make_instance(std::move(g), desc.str(), desc.str());
    }
    throw GraphError("gen_random: no draw with connected graph and complement after " +
                     std::to_string(opt.max_attempts) + " attempts (" + desc.str() + ")");
}

/**
 * `count` random instances with n drawn from [n_min, n_max] and density
 * cycling through `densities`. Combinations whose edge count cannot leave
 * both G and its complement connected are skipped and redrawn.
 */
inline std::vector<Instance> random_suite(std::size_t count, std::size_t n_min, std::size_t n_max,
                                          const std::vector<double>& densities, std::uint64_t seed) {
    if (n_min < 4 || n_max < n_min) throw GraphError("random_suite: need 4 <= n_min <= n_max");
    if (densities.empty()) throw GraphError("random_suite: no densities given");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(n_min, n_max);
    std::vector<Instance> out;
    for (std::size_t draw = 0; out.size() < count; ++draw) {
        if (draw > 100 * count + 1000) throw GraphError("random_suite: parameters admit too few connected instances");
        const std::size_t n = pick_n(rng);
        const double density = densities[draw % densities.size()];
        const std::size_t pairs = n * (n - 1) / 2;
        const auto m = static_cast<std::size_t>(std::floor(density * static_cast<double>(pairs) + 1e-9));
        if (m + 1 < n || pairs - m + 1 < n) continue;
        try {
            out.push_back(gen_random(n, density, seed * 1000003 + draw, {200}));
        } catch (const GraphError&) {
        }
    }
    return out;
}

}  // namespace gdom
