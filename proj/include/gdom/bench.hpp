#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gdom/bounds.hpp"
#include "gdom/exact.hpp"
#include "gdom/heuristics.hpp"
#include "gdom/instance_io.hpp"
#include "gdom/purification.hpp"

namespace gdom {

enum class Algorithm { h1, h2, h3, h1m, h3m, bgds, brute };

inline constexpr Algorithm all_algorithms[] = {Algorithm::h1,  Algorithm::h2,   Algorithm::h3,   Algorithm::h1m,
                                               Algorithm::h3m, Algorithm::bgds, Algorithm::brute};

constexpr std::string_view name_of(Algorithm a) {
    switch (a) {
        case Algorithm::h1: return "h1";
        case Algorithm::h2: return "h2";
        case Algorithm::h3: return "h3";
        case Algorithm::h1m: return "h1m";
        case Algorithm::h3m: return "h3m";
        case Algorithm::bgds: return "bgds";
        case Algorithm::brute: return "brute";
    }
    return "?";
}

inline std::optional<Algorithm> parse_algorithm(std::string_view s) {
    for (Algorithm a : all_algorithms)
        if (name_of(a) == s) return a;
    return std::nullopt;
}

constexpr bool is_exact(Algorithm a) { return a == Algorithm::bgds || a == Algorithm::brute; }

struct RunOptions {
    Deadline deadline;
    std::size_t brute_max_n = 24;
    std::size_t bgds_max_n = 64;
};

// One solver call; heuristics report their unpurified output.
inline SolveResult run_algorithm(const Graph& g, Algorithm algo, const RunOptions& opt = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (algo == Algorithm::brute) {
        BruteForceOptions b;
        b.max_n = opt.brute_max_n;
        b.deadline = opt.deadline;
        return brute_force_gamma_g(g, b);
    }
    if (algo == Algorithm::bgds) {
        BgdsOptions b;
        b.max_n = opt.bgds_max_n;
        b.deadline = opt.deadline;
        return bgds(g, b);
    }
    HeuristicOptions h;
    h.deadline = opt.deadline;
    HeuristicResult hr;
    switch (algo) {
        case Algorithm::h1: hr = h1(g, h); break;
        case Algorithm::h2: hr = h2(g, h); break;
        case Algorithm::h3: hr = h3(g, h); break;
        case Algorithm::h1m: hr = h1_modified(g, h); break;
        default: hr = h3_modified(g, h); break;
    }
    SolveResult r;
    r.algorithm = std::string(name_of(algo));
    r.set = std::move(hr.set);
    r.cardinality = r.set.size();
    r.feasible = is_global_dominating(g, r.set);
    r.iterations = hr.trace.halted_at;
    // Two vertices are always necessary once n >= 2.
    r.optimal = r.cardinality <= 2;
    r.elapsed_ms = detail::ms_since(t0);
    return r;
}

struct BenchRow {
    std::string instance;
    std::size_t n = 0;
    std::size_t m = 0;
    BoundsReport bounds;
    std::string algorithm;
    std::size_t size_before = 0;
    std::size_t size_after = 0;
    double pct_purified = 0.0;
    double time_ms = 0.0;
    std::optional<std::size_t> optimal_known;
    std::optional<double> error_pct;
    std::string status = "ok";  // ok | timeout | error: <reason> | invalid

    bool ok() const { return status == "ok"; }
};

inline constexpr std::string_view bench_csv_header =
    "instance,n,m,L,lb_degree,lb_radius,lb_diameter,lb_support,U,algorithm,size_before,size_after,"
    "pct_purified,time_ms,optimal_known,error_pct,status";

namespace detail {
inline std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}
inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}
}  // namespace detail

inline std::string to_csv_line(const BenchRow& r) {
    using detail::fixed;
    std::string s;
    auto put = [&](const std::string& f) {
        if (!s.empty()) s += ",";
        s += f;
    };
    s = detail::csv_field(r.instance);
    put(std::to_string(r.n));
    put(std::to_string(r.m));
    put(std::to_string(r.bounds.lower));
    put(std::to_string(r.bounds.lb_degree));
    put(std::to_string(r.bounds.lb_radius));
    put(std::to_string(r.bounds.lb_diameter));
    put(std::to_string(r.bounds.lb_support));
    put(std::to_string(r.bounds.upper));
    put(r.algorithm);
    put(std::to_string(r.size_before));
    put(std::to_string(r.size_after));
    put(fixed(r.pct_purified, 2));
    put(fixed(r.time_ms, 3));
    put(r.optimal_known ? std::to_string(*r.optimal_known) : "");
    put(r.error_pct ? fixed(*r.error_pct, 2) : "");
    put(detail::csv_field(r.status));
    return s;
}

struct BenchConfig {
    std::vector<Algorithm> algorithms;
    std::chrono::milliseconds timeout{0};  // 0 = unlimited, applied per solver call
    std::size_t workers = 1;
    // Exact reference used to fill optimal_known when no listed algorithm is exact.
    std::optional<Algorithm> reference = Algorithm::brute;
    std::size_t reference_max_n = 20;
};

namespace detail {

inline Deadline deadline_for(const BenchConfig& cfg) {
    return cfg.timeout.count() > 0 ? Deadline(cfg.timeout) : Deadline::never();
}

inline std::vector<BenchRow> bench_instance(const Instance& inst, const BenchConfig& cfg) {
    std::vector<BenchRow> rows;
    BenchRow base;
    base.instance = inst.meta.name;
    base.n = inst.graph.vertex_count();
    base.m = inst.graph.edge_count();
    try {
        base.bounds = bounds(inst.graph);
    } catch (const ConnectivityError& e) {
        for (Algorithm a : cfg.algorithms) {
            BenchRow r = base;
            r.algorithm = std::string(name_of(a));
            r.status = std::string("error: ") + e.what();
            rows.push_back(std::move(r));
        }
        return rows;
    }

    std::optional<std::size_t> optimum;
    auto try_reference = [&](Algorithm a) {
        if (optimum || base.n > cfg.reference_max_n) return;
        try {
            RunOptions ro;
            ro.deadline = deadline_for(cfg);
            optimum = run_algorithm(inst.graph, a, ro).cardinality;
        } catch (const Error&) {
        }
    };

    for (Algorithm a : cfg.algorithms) {
        BenchRow r = base;
        r.algorithm = std::string(name_of(a));
        try {
            RunOptions ro;
            ro.deadline = deadline_for(cfg);
            const auto t0 = std::chrono::steady_clock::now();
            SolveResult res = run_algorithm(inst.graph, a, ro);
            PurifyResult pur = purify(inst.graph, res.set);
            r.time_ms = ms_since(t0);
            r.size_before = res.cardinality;
            r.size_after = pur.report.after;
            r.pct_purified = pur.report.pct;
            if (!is_global_dominating(inst.graph, res.set) || !is_global_dominating(inst.graph, pur.set))
                r.status = "invalid";
            if (is_exact(a) && !optimum) optimum = res.cardinality;
        } catch (const TimeoutError&) {
            r.status = "timeout";
        } catch (const std::exception& e) {
            r.status = std::string("error: ") + e.what();
        }
        rows.push_back(std::move(r));
    }
    if (cfg.reference) try_reference(*cfg.reference);
    for (auto& r : rows) {
        r.optimal_known = optimum;
        if (optimum && r.ok())
            r.error_pct = 100.0 * (static_cast<double>(r.size_after) - static_cast<double>(*optimum)) /
                          static_cast<double>(*optimum);
    }
    return rows;
}

}  // namespace detail

/// Rows in (instance, algorithm) input order regardless of worker scheduling.
inline std::vector<BenchRow> run_bench(const std::vector<Instance>& instances, const BenchConfig& cfg) {
    std::vector<std::vector<BenchRow>> per_instance(instances.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
            per_instance[i] = detail::bench_instance(instances[i], cfg);
    };
    const std::size_t nthreads = std::max<std::size_t>(1, std::min(cfg.workers, instances.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<BenchRow> rows;
    for (auto& v : per_instance)
        for (auto& r : v) rows.push_back(std::move(r));
    return rows;
}

// Outcome counts of |D_x| vs |D_y| over instances where both runs succeeded.
struct PairwiseComparison {
    std::string x, y;
    bool purified = false;  // compares size_after when set, size_before otherwise
    std::size_t equal = 0, x_larger = 0, x_smaller = 0;
    std::size_t total() const { return equal + x_larger + x_smaller; }
};

struct AlgorithmSummary {
    std::string algorithm;
    std::size_t runs = 0;              // successful rows
    std::size_t purified_runs = 0;     // rows with size_after < size_before
    double mean_pct_purified = 0.0;
    std::size_t with_optimum = 0;      // rows with a known optimum
    std::size_t optimal_hits = 0;
    double mean_error_pct_nonoptimal = 0.0;
};

struct BenchSummary {
    std::vector<PairwiseComparison> comparisons;
    std::vector<AlgorithmSummary> algorithms;
};

inline BenchSummary summarize(const std::vector<BenchRow>& rows, const std::vector<Algorithm>& algos) {
    BenchSummary s;
    auto find = [&](const std::string& inst, std::string_view algo) -> const BenchRow* {
        for (const auto& r : rows)
            if (r.instance == inst && r.algorithm == algo) return &r;
        return nullptr;
    };
    std::vector<std::string> instances;
    for (const auto& r : rows)
        if (std::find(instances.begin(), instances.end(), r.instance) == instances.end()) instances.push_back(r.instance);

    for (std::size_t i = 0; i < algos.size(); ++i)
        for (std::size_t j = i + 1; j < algos.size(); ++j)
            for (bool purified : {false, true}) {
                PairwiseComparison c{std::string(name_of(algos[i])), std::string(name_of(algos[j])), purified};
                for (const auto& inst : instances) {
                    const BenchRow* a = find(inst, c.x);
                    const BenchRow* b = find(inst, c.y);
                    if (!a || !b || !a->ok() || !b->ok()) continue;
                    const std::size_t sa = purified ? a->size_after : a->size_before;
                    const std::size_t sb = purified ? b->size_after : b->size_before;
                    (sa == sb ? c.equal : sa > sb ? c.x_larger : c.x_smaller)++;
                }
                s.comparisons.push_back(c);
            }

    for (Algorithm a : algos) {
        AlgorithmSummary as;
        as.algorithm = std::string(name_of(a));
        double pct_sum = 0.0, err_sum = 0.0;
        std::size_t misses = 0;
        for (const auto& r : rows) {
            if (r.algorithm != as.algorithm || !r.ok()) continue;
            ++as.runs;
            pct_sum += r.pct_purified;
            if (r.size_after < r.size_before) ++as.purified_runs;
            if (r.optimal_known) {
                ++as.with_optimum;
                if (r.size_after == *r.optimal_known) ++as.optimal_hits;
                else {
                    ++misses;
                    err_sum += *r.error_pct;
                }
            }
        }
        as.mean_pct_purified = as.runs ? pct_sum / static_cast<double>(as.runs) : 0.0;
        as.mean_error_pct_nonoptimal = misses ? err_sum / static_cast<double>(misses) : 0.0;
        s.algorithms.push_back(as);
    }
    return s;
}

inline std::string format_summary(const BenchSummary& s) {
    using detail::fixed;
    std::string out;
    auto pct = [](std::size_t k, std::size_t n) { return n ? fixed(100.0 * static_cast<double>(k) / n, 2) : "0.00"; };
    for (const auto& c : s.comparisons) {
        const std::string tag = c.purified ? "*" : "";
        const std::string x = "|D_" + c.x + tag + "|", y = "|D_" + c.y + tag + "|";
        out += x + " = " + y + " : " + std::to_string(c.equal) + " (" + pct(c.equal, c.total()) + "%)\n";
        out += x + " > " + y + " : " + std::to_string(c.x_larger) + " (" + pct(c.x_larger, c.total()) + "%)\n";
        out += x + " < " + y + " : " + std::to_string(c.x_smaller) + " (" + pct(c.x_smaller, c.total()) + "%)\n";
    }
    for (const auto& a : s.algorithms) {
        out += a.algorithm + ": runs=" + std::to_string(a.runs) + " purified=" + pct(a.purified_runs, a.runs) +
               "% mean_pct_purified=" + fixed(a.mean_pct_purified, 2);
        if (a.with_optimum)
            out += " optimal=" + pct(a.optimal_hits, a.with_optimum) +
                   "% mean_error_pct_nonoptimal=" + fixed(a.mean_error_pct_nonoptimal, 2);
        out += "\n";
    }
    return out;
}

}  // namespace gdom
