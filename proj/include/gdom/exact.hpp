#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdom/bounds.hpp"
#include "gdom/deadline.hpp"
#include "gdom/heuristics.hpp"
#include "gdom/purification.hpp"

namespace gdom {

struct SolveResult {
    std::string algorithm;
    VertexSet set;
    std::size_t cardinality = 0;
    bool feasible = false;
    std::size_t iterations = 0;
    bool optimal = false;
    double elapsed_ms = 0.0;
    std::size_t subsets_tested = 0;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

/**
 * Smallest subset (lexicographic within a size) whose closed neighborhoods
 * cover V on every requested side. Uses 64-bit masks built from has_edge,
 * independent of the bit-row queries the other solvers go through.
 */
class MaskSearch {
public:
    MaskSearch(const Graph& g, bool with_complement, const Deadline& deadline)
        : n_(g.vertex_count()), full_(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1),
          deadline_(deadline) {
        closed_g_.assign(n_, 0);
        closed_c_.assign(n_, 0);
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j = 0; j < n_; ++j) {
                const bool adjacent = i != j && g.has_edge(i, j);
                if (i == j || adjacent) closed_g_[i] |= std::uint64_t{1} << j;
                if (i == j || !adjacent) closed_c_[i] |= std::uint64_t{1} << j;
            }
        if (!with_complement) closed_c_.assign(n_, full_);
    }

    std::optional<std::vector<Vertex>> smallest(std::size_t cap) {
        for (std::size_t k = 1; k <= std::min(cap, n_); ++k) {
            pick_.clear();
            if (search(0, k, 0, 0)) return pick_;
        }
        return std::nullopt;
    }

    std::size_t tested() const { return tested_; }

private:
    bool search(Vertex from, std::size_t left, std::uint64_t cov_g, std::uint64_t cov_c) {
        if (left == 0) {
            if ((++tested_ & 0xFFFF) == 0) deadline_.check();
            return cov_g == full_ && cov_c == full_;
        }
        for (Vertex v = from; v + left <= n_; ++v) {
            pick_.push_back(v);
            if (search(v + 1, left - 1, cov_g | closed_g_[v], cov_c | closed_c_[v])) return true;
            pick_.pop_back();
        }
        return false;
    }

    std::size_t n_;
    std::uint64_t full_;
    const Deadline& deadline_;
    std::vector<std::uint64_t> closed_g_, closed_c_;
    std::vector<Vertex> pick_;
    std::size_t tested_ = 0;
};

}  // namespace detail

struct BruteForceOptions {
    std::size_t cap = SIZE_MAX;  // largest cardinality tried
    std::size_t max_n = 24;      // hard limit; at most 64
    Deadline deadline;
};

namespace detail {
inline SolveResult brute_force(const Graph& g, bool global, const BruteForceOptions& opt, std::string name) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = g.vertex_count();
    if (n > std::min<std::size_t>(opt.max_n, 64))
        throw LimitError("brute force limited to n <= " + std::to_string(std::min<std::size_t>(opt.max_n, 64)) +
                         ", got n=" + std::to_string(n));
    if (n == 0) throw GraphError("graph has no vertices");
    MaskSearch search(g, global, opt.deadline);
    const auto pick = search.smallest(opt.cap);
    if (!pick) {
        if (opt.cap >= n) throw InvariantError("V itself failed the domination test");
        throw LimitError("no feasible set with at most " + std::to_string(opt.cap) + " vertices");
    }
    SolveResult r;
    r.algorithm = std::move(name);
    r.set = VertexSet(n, std::span<const Vertex>(*pick));
    r.cardinality = r.set.size();
    r.feasible = true;
    r.optimal = true;
    r.subsets_tested = search.tested();
    r.elapsed_ms = ms_since(t0);
    return r;
}
}  // namespace detail

/// Global domination number by increasing-cardinality enumeration.
inline SolveResult brute_force_gamma_g(const Graph& g, const BruteForceOptions& opt = {}) {
    require_connected(g);
    return detail::brute_force(g, true, opt, "brute");
}

/// Ordinary domination number of G; no connectivity requirement.
inline SolveResult brute_force_gamma(const Graph& g, const BruteForceOptions& opt = {}) {
    return detail::brute_force(g, false, opt, "brute-gamma");
}

struct PriorityList {
    std::vector<Vertex> ranking;
};

/// Seed vertices first (insertion order), then the rest by descending
/// min(deg, n-1-deg), ties by id.
inline PriorityList build_priority_list(const Graph& g, const VertexSet& seed) {
    const std::size_t n = g.vertex_count();
    PriorityList list;
    list.ranking.reserve(n);
    list.ranking.assign(seed.begin(), seed.end());
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!seed.contains(v)) rest.push_back(v);
    auto score = [&](Vertex v) { return std::min(g.degree(v), g.degree(v, Side::complement)); };
    std::stable_sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) { return score(a) > score(b); });
    list.ranking.insert(list.ranking.end(), rest.begin(), rest.end());
    return list;
}

// Position state for enumerating the nu-subsets of a ranking.
struct SubsetCursor {
    std::vector<std::size_t> positions;
    bool started = false;
    bool exhausted = false;
};

/**
 * Next nu-subset of list.ranking in lexicographic order of ranking
 * positions, or nullopt once every subset has been produced.
 */
inline std::optional<VertexSet> next_candidate(const PriorityList& list, std::size_t nu, SubsetCursor& cursor) {
    if (nu == 0) throw GraphError("next_candidate: cardinality must be at least 1");
    const std::size_t n = list.ranking.size();
    if (cursor.exhausted || nu > n) {
        cursor.exhausted = true;
        return std::nullopt;
    }
    auto& pos = cursor.positions;
    if (!cursor.started) {
        pos.resize(nu);
        for (std::size_t i = 0; i < nu; ++i) pos[i] = i;
        cursor.started = true;
    } else {
        std::size_t i = nu;
        while (i > 0 && pos[i - 1] == n - nu + (i - 1)) --i;
        if (i == 0) {
            cursor.exhausted = true;
            return std::nullopt;
        }
        ++pos[i - 1];
        for (std::size_t j = i; j < nu; ++j) pos[j] = pos[j - 1] + 1;
    }
    VertexSet out(n);
    for (std::size_t p : pos) out.insert(list.ranking[p]);
    return out;
}

// Binary-search window of the exact solver after one step.
struct SearchState {
    std::size_t lower = 0;  // every GDS has more than `lower` vertices
    std::size_t upper = 0;  // size of `best`
    std::size_t nu = 0;
    std::size_t tested = 0;
};

struct BgdsOptions {
    std::optional<VertexSet> seed;
    std::size_t max_n = 64;
    Deadline deadline;
    std::function<void(const SearchState&)> on_step;
};

/// Cheapest feasible seed among the purified H1, H2 and H3 results (first wins ties).
inline VertexSet best_heuristic_seed(const Graph& g, const Deadline& deadline = {}) {
    HeuristicOptions hopt;
    hopt.deadline = deadline;
    std::optional<VertexSet> best;
    for (auto* run : {&h1, &h2, &h3}) {
        VertexSet s = purify(g, run(g, hopt).set).set;
        if (!best || s.size() < best->size()) best = std::move(s);
    }
    return *best;
}

/**
 * Exact global domination by binary search on the cardinality. Each trial
 * size nu = floor((L + 3U) / 4) is settled by testing every nu-subset of
 * the priority list; a hit lowers U, exhaustion raises L.
 */
inline SolveResult bgds(const Graph& g, const BgdsOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    require_connected(g);
    const std::size_t n = g.vertex_count();
    if (n > opt.max_n)
        throw LimitError("bgds limited to n <= " + std::to_string(opt.max_n) + ", got n=" + std::to_string(n));

    // Sizes below the analytic bound are infeasible, and so is 1 when n >= 2.
    const std::size_t analytic = lower_bound(g).lower;
    std::size_t lower = std::max(analytic, std::min<std::size_t>(n, 2)) - 1;

    VertexSet best = opt.seed ? *opt.seed : best_heuristic_seed(g, opt.deadline);
    if (!is_global_dominating(g, best)) throw GraphError("bgds: seed is not a global dominating set");
    std::size_t upper = best.size();
    lower = std::min(lower, upper - 1);

    SolveResult r;
    r.algorithm = "bgds";
    PriorityList list = build_priority_list(g, best);
    while (upper - lower > 1) {
        const std::size_t nu = (lower + 3 * upper) / 4;
        ++r.iterations;
        SubsetCursor cursor;
        bool hit = false;
        while (auto cand = next_candidate(list, nu, cursor)) {
            if ((++r.subsets_tested & 0x3FF) == 0) opt.deadline.check("bgds time limit exceeded");
            if (is_global_dominating(g, *cand)) {
                best = std::move(*cand);
                upper = nu;
                list = build_priority_list(g, best);
                hit = true;
                break;
            }
        }
        if (!hit) lower = nu;
        if (opt.on_step) opt.on_step({lower, upper, nu, r.subsets_tested});
    }
    r.set = std::move(best);
    r.cardinality = r.set.size();
    r.feasible = true;
    r.optimal = true;
    r.elapsed_ms = detail::ms_since(t0);
    return r;
}

}  // namespace gdom
