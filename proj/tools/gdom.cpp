// gdom: command-line front end for the global domination toolkit.
//
//   gdom solve     --algo h2 --input g.txt [--purify] [--json]
//   gdom bounds    --input g.txt
//   gdom bench     (--input dir | --count 20 --n 6 --n-max 16 --density 0.5) --algos h1,h2,h3 --out rows.csv
//   gdom gen       petersen|random|two-star|rooted-star|rooted-petersen|greedy-gap|path|cycle [...] --out g.txt
//   gdom export-lp --input g.txt --out g.lp
//
// Exit codes: 0 ok, 2 parse/input, 3 connectivity, 4 timeout or size limit,
// 5 infeasible result or internal invariant breach.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdom/gdom.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum Exit { ok = 0, parse_failure = 2, connectivity = 3, timeout = 4, invariant = 5 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw gdom::ParseError("cannot read '" + path + "'", 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gdom::ParseError("cannot write '" + path + "'", 0);
    out << text;
}

gdom::Format parse_format(const std::string& s) {
    if (s == "edgelist") return gdom::Format::edgelist;
    if (s == "dimacs") return gdom::Format::dimacs;
    return gdom::Format::auto_detect;
}

gdom::Instance load(const std::string& path, const std::string& format) {
    return gdom::parse_instance(read_file(path), parse_format(format), fs::path(path).filename().string());
}

// Vertex ids leave the program 1-indexed, like the input formats.
json external_ids(const gdom::VertexSet& s) {
    json a = json::array();
    for (auto v : s) a.push_back(v + 1);
    return a;
}

std::string ids_text(const gdom::VertexSet& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
    return out;
}

json bounds_json(const gdom::BoundsReport& b) {
    return {{"lb_degree", b.lb_degree}, {"lb_radius", b.lb_radius}, {"lb_diameter", b.lb_diameter},
            {"lb_support", b.lb_support}, {"L", b.lower},     {"U1", b.u1},
            {"U2", b.u2},                 {"U", b.upper}};
}

struct SolveArgs {
    std::string algo = "h2";
    std::string input;
    std::string format = "auto";
    bool purify = false;
    bool json = false;
    long timeout_ms = 0;
};

int cmd_solve(const SolveArgs& a) {
    const auto inst = load(a.input, a.format);
    const auto& g = inst.graph;
    const auto algo = *gdom::parse_algorithm(a.algo);
    const auto b = gdom::bounds(g);
    gdom::RunOptions ro;
    if (a.timeout_ms > 0) ro.deadline = gdom::Deadline(std::chrono::milliseconds(a.timeout_ms));
    const auto res = gdom::run_algorithm(g, algo, ro);
    const bool feasible = gdom::is_global_dominating(g, res.set);
    // Reaching the lower bound certifies a heuristic result too.
    const bool optimal = res.optimal || (feasible && res.cardinality <= b.lower);

    json j = {{"instance", inst.meta.name}, {"n", g.vertex_count()},   {"m", g.edge_count()},
              {"algorithm", res.algorithm}, {"set", external_ids(res.set)}, {"cardinality", res.cardinality},
              {"feasible", feasible},       {"optimal", optimal},  {"iterations", res.iterations},
              {"time_ms", res.elapsed_ms},  {"bounds", bounds_json(b)}};
    std::optional<gdom::PurifyResult> pur;
    if (a.purify && feasible) {
        pur = gdom::purify(g, res.set);
        j["purified"] = {{"set", external_ids(pur->set)},
                         {"cardinality", pur->report.after},
                         {"removed", external_ids(gdom::VertexSet(g.vertex_count(), pur->report.removed))},
                         {"pct", pur->report.pct}};
    }
    if (a.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "instance:    " << inst.meta.name << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
                  << ")\n"
                  << "algorithm:   " << res.algorithm << "\n"
                  << "set:         " << ids_text(res.set) << "\n"
                  << "cardinality: " << res.cardinality << "\n"
                  << "feasible:    " << (feasible ? "yes" : "no") << "\n"
                  << "optimal:     " << (optimal ? "yes" : "unknown") << "\n"
                  << "bounds:      L=" << b.lower << " U=" << b.upper << "\n";
        if (pur)
            std::cout << "purified:    " << ids_text(pur->set) << " (" << pur->report.after << ", "
                      << gdom::detail::fixed(pur->report.pct, 2) << "% removed)\n";
        std::cout << "time_ms:     " << gdom::detail::fixed(res.elapsed_ms, 3) << "\n";
    }
    return feasible ? Exit::ok : Exit::invariant;
}

int cmd_bounds(const std::string& input, const std::string& format, bool as_json) {
    const auto inst = load(input, format);
    const auto b = gdom::bounds(inst.graph);
    if (as_json) {
        std::cout << bounds_json(b).dump(2) << "\n";
    } else {
        std::cout << "lower bound components: " << b.lb_degree << " " << b.lb_radius << " " << b.lb_diameter << " "
                  << b.lb_support << "\n"
                  << "L=" << b.lower << " U1=" << b.u1 << " U2=" << b.u2 << " U=" << b.upper << "\n";
    }
    return Exit::ok;
}

struct BenchArgs {
    std::string input;
    std::string format = "auto";
    std::size_t count = 20;
    std::size_t n = 12;
    std::size_t n_max = 0;
    std::vector<double> densities{0.5};
    std::uint64_t seed = 1;
    std::vector<std::string> algos{"h1", "h2", "h3"};
    std::string reference = "brute";
    std::size_t reference_max_n = 20;
    long timeout_ms = 0;
    std::size_t workers = 1;
    std::string out;
    bool json = false;
};

int cmd_bench(const BenchArgs& a) {
    std::vector<gdom::Instance> instances;
    if (!a.input.empty()) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(a.input))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) instances.push_back(load(f.string(), a.format));
    } else {
        instances = gdom::random_suite(a.count, a.n, std::max(a.n, a.n_max), a.densities, a.seed);
        for (std::size_t i = 0; i < instances.size(); ++i)
            instances[i].meta.name = "r" + std::to_string(i) + ":" + instances[i].meta.name;
    }

    gdom::BenchConfig cfg;
    for (const auto& s : a.algos) cfg.algorithms.push_back(*gdom::parse_algorithm(s));
    cfg.timeout = std::chrono::milliseconds(a.timeout_ms);
    cfg.workers = a.workers;
    cfg.reference = a.reference == "none" ? std::nullopt : gdom::parse_algorithm(a.reference);
    cfg.reference_max_n = a.reference_max_n;

    const auto rows = gdom::run_bench(instances, cfg);
    const auto summary = gdom::summarize(rows, cfg.algorithms);

    std::string csv = std::string(gdom::bench_csv_header) + "\n";
    for (const auto& r : rows) csv += gdom::to_csv_line(r) + "\n";
    if (!a.out.empty()) write_output(a.out, csv);

    if (a.json) {
        json jr = json::array();
        for (const auto& r : rows)
            jr.push_back({{"instance", r.instance},
                          {"n", r.n},
                          {"m", r.m},
                          {"bounds", bounds_json(r.bounds)},
                          {"algorithm", r.algorithm},
                          {"size_before", r.size_before},
                          {"size_after", r.size_after},
                          {"pct_purified", r.pct_purified},
                          {"time_ms", r.time_ms},
                          {"optimal_known", r.optimal_known ? json(*r.optimal_known) : json(nullptr)},
                          {"error_pct", r.error_pct ? json(*r.error_pct) : json(nullptr)},
                          {"status", r.status}});
        json js = json::array();
        for (const auto& c : summary.comparisons)
            js.push_back({{"x", c.x},
                          {"y", c.y},
                          {"purified", c.purified},
                          {"equal", c.equal},
                          {"x_larger", c.x_larger},
                          {"x_smaller", c.x_smaller}});
        json ja = json::array();
        for (const auto& s : summary.algorithms)
            ja.push_back({{"algorithm", s.algorithm},
                          {"runs", s.runs},
                          {"purified_runs", s.purified_runs},
                          {"mean_pct_purified", s.mean_pct_purified},
                          {"with_optimum", s.with_optimum},
                          {"optimal_hits", s.optimal_hits},
                          {"mean_error_pct_nonoptimal", s.mean_error_pct_nonoptimal}});
        std::cout << json{{"rows", jr}, {"comparisons", js}, {"algorithms", ja}}.dump(2) << "\n";
    } else {
        if (a.out.empty()) std::cout << csv;
        std::cout << gdom::format_summary(summary);
    }
    return Exit::ok;
}

struct GenArgs {
    std::string family;
    std::size_t n = 10;
    double density = 0.5;
    std::uint64_t seed = 1;
    std::size_t m1 = 3, m2 = 3;
    double p = 0.0;
    std::vector<std::size_t> sizes;
    std::size_t root = 1;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    gdom::Graph g;
    if (a.family == "petersen") g = gdom::gen_petersen();
    else if (a.family == "random") g = gdom::gen_random(a.n, a.density, a.seed).graph;
    else if (a.family == "two-star") g = gdom::gen_two_star_family(a.m1, a.m2, a.p, a.seed).graph;
    else if (a.family == "rooted-star") g = gdom::gen_rooted_star_family(gdom::gen_path(a.sizes.size()), a.sizes).first;
    else if (a.family == "rooted-petersen")
        g = gdom::gen_rooted_product(gdom::gen_path(a.n),
                                     std::vector<gdom::RootedCopy>(a.n, {gdom::gen_petersen(), gdom::Vertex(a.root - 1)}));
    else if (a.family == "greedy-gap") g = gdom::gen_greedy_gap_example();
    else if (a.family == "path") g = gdom::gen_path(a.n);
    else if (a.family == "cycle") g = gdom::gen_cycle(a.n);
    write_output(a.out, gdom::write_edge_list(g));
    return Exit::ok;
}

int cmd_export_lp(const std::string& input, const std::string& format, const std::string& out) {
    const auto inst = load(input, format);
    write_output(out, gdom::export_lp(gdom::build_model(inst.graph), fs::path(inst.meta.name).stem().string()));
    return Exit::ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Global dominating set solvers, bounds, generators and benchmarks"};
    app.require_subcommand(1);

    std::vector<std::string> algo_names;
    for (auto a : gdom::all_algorithms) algo_names.emplace_back(gdom::name_of(a));
    const std::vector<std::string> formats{"edgelist", "dimacs", "auto"};

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Run one algorithm on an instance");
    s->add_option("--algo", solve.algo, "Algorithm")->check(CLI::IsMember(algo_names));
    s->add_option("--input", solve.input, "Instance file")->required();
    s->add_option("--format", solve.format, "Input format")->check(CLI::IsMember(formats));
    s->add_flag("--purify", solve.purify, "Purify the result");
    s->add_flag("--json", solve.json, "JSON output");
    s->add_option("--timeout", solve.timeout_ms, "Time limit in milliseconds (0 = none)");

    std::string b_input, b_format = "auto";
    bool b_json = false;
    auto* bo = app.add_subcommand("bounds", "Print lower and upper bounds");
    bo->add_option("--input", b_input, "Instance file")->required();
    bo->add_option("--format", b_format, "Input format")->check(CLI::IsMember(formats));
    bo->add_flag("--json", b_json, "JSON output");

    BenchArgs bench;
    auto* be = app.add_subcommand("bench", "Benchmark algorithms over a directory or a random suite");
    be->add_option("--input", bench.input, "Directory of instance files")->check(CLI::ExistingDirectory);
    be->add_option("--format", bench.format, "Input format")->check(CLI::IsMember(formats));
    be->add_option("--count", bench.count, "Number of random instances");
    be->add_option("--n", bench.n, "Vertex count (minimum when --n-max is given)");
    be->add_option("--n-max", bench.n_max, "Maximum vertex count");
    be->add_option("--density", bench.densities, "Edge densities, cycled over the suite")->delimiter(',');
    be->add_option("--seed", bench.seed, "Suite seed");
    be->add_option("--algo,--algos", bench.algos, "Algorithms")->delimiter(',')->check(CLI::IsMember(algo_names));
    be->add_option("--reference", bench.reference, "Exact reference for optimal_known")
        ->check(CLI::IsMember({"brute", "bgds", "none"}));
    be->add_option("--reference-max-n", bench.reference_max_n, "Largest n given an exact reference run");
    be->add_option("--timeout", bench.timeout_ms, "Per-run time limit in milliseconds (0 = none)");
    be->add_option("--workers", bench.workers, "Worker threads");
    be->add_option("--out", bench.out, "CSV output file");
    be->add_flag("--json", bench.json, "JSON rows and summary on stdout");

    GenArgs gen;
    auto* ge = app.add_subcommand("gen", "Generate an instance in edge-list format");
    ge->add_option("family", gen.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"petersen", "random", "two-star", "rooted-star", "rooted-petersen", "greedy-gap",
                               "path", "cycle"}));
    ge->add_option("--n", gen.n, "Vertex count (random, path, cycle) or base path length (rooted-petersen)");
    ge->add_option("--density", gen.density, "Edge density (random)");
    ge->add_option("--seed", gen.seed, "Seed (random, two-star)");
    ge->add_option("--m1", gen.m1, "First star size (two-star)");
    ge->add_option("--m2", gen.m2, "Second star size (two-star)");
    ge->add_option("--p", gen.p, "Optional leaf-edge probability (two-star)");
    ge->add_option("--sizes", gen.sizes, "Star sizes on a base path (rooted-star)")->delimiter(',');
    ge->add_option("--root", gen.root, "Petersen root vertex, 1-indexed (rooted-petersen)");
    ge->add_option("--out", gen.out, "Output file (default stdout)");

    std::string lp_input, lp_format = "auto", lp_out;
    auto* lp = app.add_subcommand("export-lp", "Write the 0-1 covering model in LP format");
    lp->add_option("--input", lp_input, "Instance file")->required();
    lp->add_option("--format", lp_format, "Input format")->check(CLI::IsMember(formats));
    lp->add_option("--out", lp_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*s) return cmd_solve(solve);
        if (*bo) return cmd_bounds(b_input, b_format, b_json);
        if (*be) return cmd_bench(bench);
        if (*ge) return cmd_gen(gen);
        if (*lp) return cmd_export_lp(lp_input, lp_format, lp_out);
    } catch (const gdom::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Exit::parse_failure;
    } catch (const gdom::ConnectivityError& e) {
        std::cerr << "connectivity error: " << e.what() << "\n";
        return Exit::connectivity;
    } catch (const gdom::TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return Exit::timeout;
    } catch (const gdom::LimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return Exit::timeout;
    } catch (const gdom::GraphError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Exit::parse_failure;
    } catch (const gdom::InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Exit::invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Exit::invariant;
    }
    return Exit::ok;
}
