// Command line surface: generate extremal point sets, run ordering
// strategies, build graphs, search over orderings, certify bounds, and run
// the verification suites.
//
// Exit codes: 0 success, 2 validation failure, 3 guard violation,
// 4 bound-certification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "yao/acceptance.hpp"
#include "yao/constructions.hpp"
#include "yao/io.hpp"
#include "yao/oracle.hpp"
#include "yao/orderings.hpp"

using nlohmann::json;
using namespace yao;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string construction;
    int n = 12;
    int m = 1;
    int k = 4;
    double phi = 0.0; // 0 = construction default
    std::uint64_t seed = 0;
    std::string strategy;
    std::string order_spec;
    int apex = 0;
    int start_sector = 0;
    int t = -1; // -1 = floor(k/2)
    std::string metric = "edges";
    std::string objective = "max";
    bool exhaustive = false;
    std::uint64_t samples = 1000;
    int threads = 0;
    std::string bound_op;
    long long bound = 0;
    std::string suite = "all";
    std::string out;
    std::string format = "json";
    bool progress = false;
};

json run_config_to_json(const RunConfig& c) {
    return json{{"command", c.command},     {"input", c.input},
                {"construction", c.construction}, {"n", c.n},
                {"m", c.m},                 {"k", c.k},
                {"phi", c.phi},             {"seed", c.seed},
                {"strategy", c.strategy},   {"order", c.order_spec},
                {"apex", c.apex},           {"start_sector", c.start_sector},
                {"t", c.t},                 {"metric", c.metric},
                {"objective", c.objective}, {"exhaustive", c.exhaustive},
                {"samples", c.samples},     {"threads", c.threads},
                {"bound_op", c.bound_op},   {"bound", c.bound},
                {"suite", c.suite},         {"out", c.out},
                {"format", c.format},       {"progress", c.progress}};
}

RunConfig run_config_from_json(const json& j) {
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.input = j.at("input").get<std::string>();
    c.construction = j.at("construction").get<std::string>();
    c.n = j.at("n").get<int>();
    c.m = j.at("m").get<int>();
    c.k = j.at("k").get<int>();
    c.phi = j.at("phi").get<double>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.strategy = j.at("strategy").get<std::string>();
    c.order_spec = j.at("order").get<std::string>();
    c.apex = j.at("apex").get<int>();
    c.start_sector = j.at("start_sector").get<int>();
    c.t = j.at("t").get<int>();
    c.metric = j.at("metric").get<std::string>();
    c.objective = j.at("objective").get<std::string>();
    c.exhaustive = j.at("exhaustive").get<bool>();
    c.samples = j.at("samples").get<std::uint64_t>();
    c.threads = j.at("threads").get<int>();
    c.bound_op = j.at("bound_op").get<std::string>();
    c.bound = j.at("bound").get<long long>();
    c.suite = j.at("suite").get<std::string>();
    c.out = j.at("out").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.progress = j.at("progress").get<bool>();
    return c;
}

PointSet make_construction(const RunConfig& c) {
    if (c.construction == "collinear") return collinear_generic(c.n, c.k, c.seed);
    if (c.construction == "triangle3") return triangle_k3();
    if (c.construction == "figure9") return figure9_k3(c.n, c.seed);
    if (c.construction == "d3-hard") return d3_hard(c.m, c.seed);
    if (c.construction == "clique-set")
        return wk_clique(c.k, c.phi > 0 ? std::optional<double>(c.phi) : std::nullopt);
    if (c.construction == "grid") return grid_hard(c.n, c.k, c.seed);
    if (c.construction == "random") return random_validated(c.n, c.k, c.seed);
    throw GuardError("unknown construction: " + c.construction);
}

PointSet load_input(const RunConfig& c) {
    if (!c.input.empty()) return load_point_set(c.input);
    if (!c.construction.empty()) return make_construction(c);
    throw GuardError("no input: pass --in FILE or --construction NAME");
}

// order/build/stats/search operate on validated sets only.
PointSet load_validated_input(const RunConfig& c) {
    PointSet ps = load_input(c);
    const GeneralPositionReport report = is_general_position(ps);
    if (!report.ok) {
        std::cerr << json{{"error", "input set is not in general position"},
                          {"report", report_to_json(report)}}
                         .dump(2)
                  << "\n";
        std::exit(2);
    }
    return ps;
}

Ordering parse_order(const std::string& spec, int n) {
    Ordering ord;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) ord.perm.push_back(std::stoi(token));
    if (!is_permutation(ord, n)) throw GuardError("--order is not a permutation of 0.." +
                                                  std::to_string(n - 1));
    return ord;
}

StrategyOutcome run_strategy(const PointSet& ps, const RunConfig& c) {
    const int t = c.t >= 0 ? c.t : ps.params.k / 2;
    if (c.strategy == "top-to-bottom") return top_to_bottom(ps);
    if (c.strategy == "orthogonal") return orthogonal(ps, c.apex, c.start_sector, t);
    if (c.strategy == "radial") return radial(ps, c.apex);
    if (c.strategy == "degree-max") return degree_maximizing(ps);
    if (c.strategy == "clique-forcing") return clique_forcing(ps);
    if (c.strategy == "edge-max") return greedy_edge_max(ps);
    if (c.strategy == "edge-min") return edge_min_dispatch(ps);
    throw GuardError("unknown strategy: " + c.strategy);
}

void emit(const RunConfig& c, const std::string& content) {
    if (c.out.empty() || c.out == "-") std::cout << content;
    else write_file(c.out, content);
}

json edges_json(const OrderedYaoGraph& g) {
    json edges = json::array();
    for (int u = 0; u < g.n; ++u)
        for (const YaoEdge& e : g.out_edges[u]) edges.push_back({u, e.target, e.sector});
    return edges;
}

int cmd_generate(const RunConfig& c) {
    const PointSet ps = make_construction(c);
    if (c.format == "csv") emit(c, point_set_to_csv(ps));
    else emit(c, point_set_to_json(ps).dump(2) + "\n");
    return 0;
}

int cmd_order(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    const StrategyOutcome out = run_strategy(ps, c);
    const OrderedYaoGraph g = build_ordered(ps, out.ordering);
    const auto failures = check_promises(out, g);

    json report = outcome_to_json(out);
    report["edges"] = edges_json(g);
    report["stats"] = stats_to_json(stats(g));
    report["promises_hold"] = failures.empty();
    if (!failures.empty()) report["failures"] = failures;
    std::cout << report.dump(2) << "\n";

    if (!c.out.empty()) {
        if (c.format == "dot") write_file(c.out, graph_to_dot(g, &ps));
        else if (c.format == "svg") write_file(c.out, render_svg(ps, &g));
        else write_file(c.out, graph_to_json(g).dump(2) + "\n");
    }
    return failures.empty() ? 0 : 4;
}

int cmd_build(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    Ordering ord;
    if (!c.order_spec.empty()) ord = parse_order(c.order_spec, ps.size());
    else if (!c.strategy.empty()) ord = run_strategy(ps, c).ordering;
    else ord = identity_ordering(ps.size());

    const OrderedYaoGraph g = build_ordered(ps, ord);
    if (c.format == "dot") emit(c, graph_to_dot(g, &ps));
    else if (c.format == "svg") emit(c, render_svg(ps, &g));
    else emit(c, graph_to_json(g).dump(2) + "\n");
    return 0;
}

int cmd_stats(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    Ordering ord;
    if (!c.order_spec.empty()) ord = parse_order(c.order_spec, ps.size());
    else if (!c.strategy.empty()) ord = run_strategy(ps, c).ordering;
    else ord = identity_ordering(ps.size());

    const OrderedYaoGraph g = build_ordered(ps, ord);
    json report = stats_to_json(stats(g));
    report["order"] = ord.perm;
    std::cout << report.dump(2) << "\n";
    return 0;
}

SearchSpec search_spec(const RunConfig& c) {
    SearchSpec spec;
    if (c.metric == "edges") spec.metric = Metric::Edges;
    else if (c.metric == "max-indegree") spec.metric = Metric::MaxIndegree;
    else if (c.metric == "clique") spec.metric = Metric::Clique;
    else throw GuardError("unknown metric: " + c.metric);
    spec.objective = c.objective == "min" ? Objective::Minimize : Objective::Maximize;
    spec.exhaustive = c.exhaustive || c.samples == 0;
    spec.samples = c.samples;
    spec.seed = c.seed;
    spec.threads = c.threads;
    return spec;
}

ProgressFn progress_printer(const RunConfig& c) {
    if (!c.progress) return {};
    return [](std::uint64_t done, std::uint64_t total) {
        std::cerr << "\r" << done << "/" << total << std::flush;
        if (done == total) std::cerr << "\n";
    };
}

int cmd_search(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    const SearchResult r = search(ps, search_spec(c), progress_printer(c));
    std::cout << json{{"value", r.value},
                      {"witness", r.witness.perm},
                      {"exhaustive", r.exhaustive},
                      {"orderings_examined", r.orderings_examined}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_certify(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    const BoundOp op = c.bound_op == "le" ? BoundOp::AtMost : BoundOp::AtLeast;
    if (c.bound_op != "le" && c.bound_op != "ge")
        throw GuardError("--bound-op must be le or ge");
    const CertifyOutcome out =
        certify_bound(ps, search_spec(c), op, c.bound, progress_printer(c));
    json report{{"ok", out.ok}, {"value", out.value}, {"bound", c.bound}, {"op", c.bound_op}};
    if (out.counterexample) report["counterexample"] = out.counterexample->perm;
    std::cout << report.dump(2) << "\n";
    return out.ok ? 0 : 4;
}

int cmd_verify(const RunConfig& c) {
    const bool ok = accept::run_suite(c.suite, [](const accept::CriterionResult& r) {
        std::cout << accept::format_line(r) << "\n" << std::flush;
    });
    return ok ? 0 : 4;
}

int cmd_export(const RunConfig& c) {
    const PointSet ps = load_validated_input(c);
    if (c.format == "json" && c.strategy.empty() && c.order_spec.empty()) {
        emit(c, point_set_to_json(ps).dump(2) + "\n");
        return 0;
    }
    if (c.format == "csv") {
        emit(c, point_set_to_csv(ps));
        return 0;
    }
    Ordering ord;
    if (!c.order_spec.empty()) ord = parse_order(c.order_spec, ps.size());
    else if (!c.strategy.empty()) ord = run_strategy(ps, c).ordering;
    else ord = identity_ordering(ps.size());
    const OrderedYaoGraph g = build_ordered(ps, ord);
    if (c.format == "dot") emit(c, graph_to_dot(g, &ps));
    else if (c.format == "svg") emit(c, render_svg(ps, &g));
    else emit(c, graph_to_json(g).dump(2) + "\n");
    return 0;
}

std::uint64_t env_seed() {
    if (const char* v = std::getenv("YAO_SEED")) return std::strtoull(v, nullptr, 10);
    return 0;
}

void add_input_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--in", c.input, "point set file (.json or .csv)");
    cmd->add_option("--construction", c.construction, "generate the input instead of reading it")
        ->check(CLI::IsMember(construction_names()));
    cmd->add_option("--n", c.n, "point count for constructions that take n");
    cmd->add_option("--m", c.m, "size parameter of the d3-hard construction");
    cmd->add_option("--k", c.k, "sector count for constructions");
    cmd->add_option("--phi", c.phi, "rotation of the clique-set construction (0 = default)");
}

void add_strategy_options(CLI::App* cmd, RunConfig& c) {
    cmd->add_option("--strategy", c.strategy, "ordering strategy")
        ->check(CLI::IsMember(strategy_names()));
    cmd->add_option("--apex", c.apex, "apex index (orthogonal/radial)");
    cmd->add_option("--start-sector", c.start_sector, "first dual sector (orthogonal)");
    cmd->add_option("--t", c.t, "dual sector span (orthogonal, default floor(k/2))");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered k-sector Yao graphs: constructions, orderings, oracles"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig c;
    c.seed = env_seed();
    app.add_option("--seed", c.seed, "seed for every random draw (or env YAO_SEED)");

    auto* generate = app.add_subcommand("generate", "emit a point set construction");
    generate->add_option("--construction", c.construction)->required()
        ->check(CLI::IsMember(construction_names()));
    generate->add_option("--n", c.n);
    generate->add_option("--m", c.m);
    generate->add_option("--k", c.k);
    generate->add_option("--phi", c.phi);
    generate->add_option("--out", c.out, "output path (default stdout)");
    generate->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));

    auto* order = app.add_subcommand("order", "run a strategy and report graph + certificates");
    add_input_options(order, c);
    add_strategy_options(order, c);
    order->get_option("--strategy")->required();
    order->add_option("--out", c.out, "also write the graph here");
    order->add_option("--format", c.format)->check(CLI::IsMember({"json", "dot", "svg"}));

    auto* build = app.add_subcommand("build", "build the graph for an explicit ordering");
    add_input_options(build, c);
    add_strategy_options(build, c);
    build->add_option("--order", c.order_spec, "comma-separated point indices");
    build->add_option("--out", c.out);
    build->add_option("--format", c.format)->check(CLI::IsMember({"json", "dot", "svg"}));

    auto* stats_cmd = app.add_subcommand("stats", "graph statistics for an ordering");
    add_input_options(stats_cmd, c);
    add_strategy_options(stats_cmd, c);
    stats_cmd->add_option("--order", c.order_spec);

    auto* search_cmd = app.add_subcommand("search", "extremal value over orderings");
    add_input_options(search_cmd, c);
    search_cmd->add_option("--metric", c.metric)
        ->check(CLI::IsMember({"edges", "max-indegree", "clique"}));
    search_cmd->add_option("--objective", c.objective)->check(CLI::IsMember({"min", "max"}));
    search_cmd->add_flag("--exhaustive", c.exhaustive, "enumerate all n! orderings (n <= 9)");
    search_cmd->add_option("--samples", c.samples, "sampled mode: number of random orderings");
    search_cmd->add_option("--threads", c.threads, "worker threads (0 = hardware)");
    search_cmd->add_flag("--progress", c.progress, "print progress to stderr");

    auto* certify = app.add_subcommand("certify", "check a bound against the oracle");
    add_input_options(certify, c);
    certify->add_option("--metric", c.metric)
        ->check(CLI::IsMember({"edges", "max-indegree", "clique"}));
    certify->add_option("--objective", c.objective)->check(CLI::IsMember({"min", "max"}));
    certify->add_flag("--exhaustive", c.exhaustive);
    certify->add_option("--samples", c.samples);
    certify->add_option("--threads", c.threads);
    certify->add_flag("--progress", c.progress);
    certify->add_option("--bound-op", c.bound_op, "le or ge")->required()
        ->check(CLI::IsMember({"le", "ge"}));
    certify->add_option("--bound", c.bound)->required();

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->add_option("suite", c.suite, "degrees|edges|cliques|all")
        ->check(CLI::IsMember({"degrees", "edges", "cliques", "all"}));

    auto* export_cmd = app.add_subcommand("export", "write a point set or graph rendering");
    add_input_options(export_cmd, c);
    add_strategy_options(export_cmd, c);
    export_cmd->add_option("--order", c.order_spec);
    export_cmd->add_option("--format", c.format)
        ->check(CLI::IsMember({"json", "csv", "dot", "svg"}));
    export_cmd->add_option("--out", c.out);

    auto* config_cmd = app.add_subcommand("config", "echo the parsed configuration as JSON");
    add_input_options(config_cmd, c);
    add_strategy_options(config_cmd, c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) c.command = "generate";
        else if (order->parsed()) c.command = "order";
        else if (build->parsed()) c.command = "build";
        else if (stats_cmd->parsed()) c.command = "stats";
        else if (search_cmd->parsed()) c.command = "search";
        else if (certify->parsed()) c.command = "certify";
        else if (verify->parsed()) c.command = "verify";
        else if (export_cmd->parsed()) c.command = "export";
        else if (config_cmd->parsed()) c.command = "config";

        if (c.command == "generate") return cmd_generate(c);
        if (c.command == "order") return cmd_order(c);
        if (c.command == "build") return cmd_build(c);
        if (c.command == "stats") return cmd_stats(c);
        if (c.command == "search") return cmd_search(c);
        if (c.command == "certify") return cmd_certify(c);
        if (c.command == "verify") return cmd_verify(c);
        if (c.command == "export") return cmd_export(c);
        if (c.command == "config") {
            const json once = run_config_to_json(c);
            const json twice = run_config_to_json(run_config_from_json(once));
            if (once != twice) throw std::logic_error("config serialization does not round-trip");
            std::cout << once.dump(2) << "\n";
            return 0;
        }
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << json{{"error", e.what()}, {"report", report_to_json(e.report)}}.dump(2)
                  << "\n";
        return 2;
    } catch (const CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
