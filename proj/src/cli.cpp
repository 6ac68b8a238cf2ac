#include "fml/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "fml/generators.hpp"
#include "fml/io.hpp"
#include "fml/pipeline.hpp"

namespace fml {

namespace {

// ---------------------------------------------------------------- helpers

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

long long parse_number(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": '" + tok + "'");
    }
}

double parse_real(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad " + what + ": '" + tok + "'");
    }
}

std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    for (const std::string& part : split(spec, ',')) {
        const auto dash = part.find('-');
        if (dash != std::string::npos && dash > 0) {
            const auto lo = parse_number(part.substr(0, dash), "seed");
            const auto hi = parse_number(part.substr(dash + 1), "seed");
            if (hi < lo || lo < 0) throw UsageError("bad seed range: " + part);
            for (long long s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint64_t>(s));
        } else {
            seeds.push_back(static_cast<std::uint64_t>(parse_number(part, "seed")));
        }
    }
    if (seeds.empty()) throw UsageError("no seeds given");
    return seeds;
}

std::pair<int, int> parse_colors(const std::string& spec) {
    const auto parts = split(spec, ',');
    if (parts.size() != 2) throw UsageError("--colors expects 'B,R' counts");
    return {static_cast<int>(parse_number(parts[0], "color count")),
            static_cast<int>(parse_number(parts[1], "color count"))};
}

std::vector<std::vector<int>> parse_sets(const std::string& spec) {
    std::vector<std::vector<int>> sets;
    for (const std::string& group : split(spec, ';')) {
        std::vector<int> set;
        for (const std::string& el : split(group, ','))
            if (!el.empty()) set.push_back(static_cast<int>(parse_number(el, "set element")));
        sets.push_back(std::move(set));
    }
    return sets;
}

void check_common_flags(double alpha, int rho, double epsilon) {
    if (alpha < 0.0 || alpha > 1.0) throw UsageError("--alpha must lie in [0, 1]");
    if (rho < 1) throw UsageError("--rho must be >= 1");
    if (epsilon <= 0.0) throw UsageError("--epsilon must be positive");
}

std::string format_double(double x, int precision = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    return buf;
}

// ------------------------------------------------------ instance assembly

struct FamilyOptions {
    std::string family = "geometric";
    int n = 1024;
    double radius = 0.2;
    int m_bar = 3;
    int universe = 0;
    std::string sets_spec;
    int chain = 1;
    int count_blue = 64;
    int count_red = 64;
    std::string terminal_policy = "random";  // random|central|peripheral|<id>
    std::string proximity = "hop";           // hop|euclidean
};

NodeId choose_terminal(const ColoredGraph& graph, const std::string& policy, std::uint64_t seed) {
    if (policy == "random")
        return static_cast<NodeId>(derive_seed(seed, 991) % static_cast<std::uint64_t>(graph.num_nodes()));
    if (policy == "central" || policy == "peripheral") {
        NodeId best = 0;
        for (NodeId u = 1; u < graph.num_nodes(); ++u) {
            const size_t du = graph.neighbors(u).size();
            const size_t db = graph.neighbors(best).size();
            if (policy == "central" ? du > db : du < db) best = u;
        }
        return best;
    }
    try {
        return static_cast<NodeId>(std::stoi(policy));
    } catch (const std::exception&) {
        throw UsageError("terminal policy must be random, central, peripheral or a node id");
    }
}

struct BuiltInstance {
    ColoredGraph graph;
    std::optional<long long> known_optimum;  // setcover family
};

BuiltInstance build_family_graph(const FamilyOptions& opt, std::uint64_t seed) {
    if (opt.family == "geometric") {
        GeometricGraph geo = gen_geometric(opt.n, opt.radius, seed);
        const NodeId t = choose_terminal(geo.graph, opt.terminal_policy, seed);
        ColoredGraph colored =
            opt.proximity == "euclidean"
                ? assign_groups_by_euclidean(geo.graph, geo.positions, t, opt.count_blue, opt.count_red)
                : assign_groups_by_proximity(geo.graph, t, opt.count_blue, opt.count_red);
        return {std::move(colored), std::nullopt};
    }
    if (opt.family == "ba") {
        ColoredGraph base = gen_barabasi_albert(opt.n, opt.m_bar, seed);
        const NodeId t = choose_terminal(base, opt.terminal_policy, seed);
        return {assign_groups_by_proximity(base, t, opt.count_blue, opt.count_red), std::nullopt};
    }
    if (opt.family == "setcover") {
        if (opt.universe <= 0 || opt.sets_spec.empty())
            throw UsageError("setcover family needs --universe and --sets");
        SetCoverReduction red =
            gen_setcover_reduction(opt.universe, parse_sets(opt.sets_spec), opt.chain);
        return {red.instance.graph(), red.known_optimum};
    }
    throw UsageError("unknown family: " + opt.family);
}

void add_family_flags(CLI::App* cmd, FamilyOptions& fam) {
    cmd->add_option("--family", fam.family, "instance family: geometric|ba|setcover");
    cmd->add_option("--n", fam.n, "node count");
    cmd->add_option("--radius", fam.radius, "geometric connection radius");
    cmd->add_option("--mbar", fam.m_bar, "BA attachment parameter");
    cmd->add_option("--universe", fam.universe, "setcover universe size");
    cmd->add_option("--sets", fam.sets_spec, "setcover sets, e.g. \"0,1;2,3\"");
    cmd->add_option("--chain", fam.chain, "setcover chain length L");
    cmd->add_option("--colors", [&fam](const std::vector<std::string>& vals) {
        std::tie(fam.count_blue, fam.count_red) = parse_colors(vals.back());
        return true;
    }, "group sizes as 'B,R' (default 64,64)");
    cmd->add_option("--terminal-policy", fam.terminal_policy,
                    "random|central|peripheral|<node id>");
    cmd->add_option("--proximity", fam.proximity, "group split metric: hop|euclidean");
}

// ------------------------------------------------------------ run records

struct RunRecord {
    std::string algorithm;
    std::string epsilon;  // empty when not applicable
    std::string seed;
    double alpha = 0.0;
    int n = 0, m = 0, num_blue = 0, num_red = 0;
    long long required_b = 0, required_r = 0;
    long long cost = -1, hop_cost = -1;
    long long covered_b = -1, covered_r = -1;
    int tree_height = -1;
    double xi = 1.0;
    bool feasible = false;
    std::string status = "ok";
    double embed_seconds = 0.0;
    double wall_seconds = 0.0;
};

const char* kCsvHeader =
    "algorithm,epsilon,seed,alpha,n,m,num_blue,num_red,required_b,required_r,cost,hop_cost,"
    "covered_b,covered_r,tree_height,xi,feasible,status,embed_seconds,wall_seconds";

std::string csv_row(const RunRecord& r) {
    std::ostringstream out;
    out << r.algorithm << ',' << r.epsilon << ',' << r.seed << ',' << format_double(r.alpha, 4)
        << ',' << r.n << ',' << r.m << ',' << r.num_blue << ',' << r.num_red << ','
        << r.required_b << ',' << r.required_r << ','
        << (r.cost < 0 ? "" : std::to_string(r.cost)) << ','
        << (r.hop_cost < 0 ? "" : std::to_string(r.hop_cost)) << ','
        << (r.covered_b < 0 ? "" : std::to_string(r.covered_b)) << ','
        << (r.covered_r < 0 ? "" : std::to_string(r.covered_r)) << ','
        << (r.tree_height < 0 ? "" : std::to_string(r.tree_height)) << ','
        << format_double(r.xi) << ',' << (r.feasible ? 1 : 0) << ',' << r.status << ','
        << format_double(r.embed_seconds) << ',' << format_double(r.wall_seconds);
    return out.str();
}

RunRecord make_record(const FmlInstance& instance, const SolveResult& result) {
    RunRecord rec;
    const FmlSolution& s = result.solution;
    rec.algorithm = s.meta.algorithm;
    if (s.meta.epsilon > 0.0) {
        std::ostringstream e;
        e << s.meta.epsilon;
        rec.epsilon = e.str();
    }
    rec.seed = std::to_string(s.meta.seed);
    rec.alpha = instance.alpha().value_or(0.0);
    rec.n = instance.graph().num_nodes();
    rec.m = instance.graph().num_edges();
    rec.num_blue = instance.graph().count_color(Color::Blue);
    rec.num_red = instance.graph().count_color(Color::Red);
    rec.required_b = instance.required_blue();
    rec.required_r = instance.required_red();
    rec.cost = s.cost;
    rec.hop_cost = s.meta.hop_cost;
    rec.covered_b = result.report.covered_blue;
    rec.covered_r = result.report.covered_red;
    rec.tree_height = s.meta.tree_height;
    rec.xi = s.meta.xi;
    rec.feasible = result.report.feasible;
    rec.embed_seconds = s.meta.embed_seconds;
    rec.wall_seconds = s.meta.embed_seconds + s.meta.solve_seconds;
    return rec;
}

std::string record_to_json(const RunRecord& r) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["epsilon"] = r.epsilon;
    j["seed"] = r.seed;
    j["alpha"] = r.alpha;
    j["n"] = r.n;
    j["m"] = r.m;
    j["num_blue"] = r.num_blue;
    j["num_red"] = r.num_red;
    j["required_b"] = r.required_b;
    j["required_r"] = r.required_r;
    j["cost"] = r.cost;
    j["hop_cost"] = r.hop_cost;
    j["covered_b"] = r.covered_b;
    j["covered_r"] = r.covered_r;
    j["tree_height"] = r.tree_height;
    j["xi"] = r.xi;
    j["feasible"] = r.feasible;
    j["status"] = r.status;
    j["embed_seconds"] = r.embed_seconds;
    j["wall_seconds"] = r.wall_seconds;
    return j.dump(2);
}

// ------------------------------------------------------------ subcommands

int cmd_gen(const FamilyOptions& fam, std::uint64_t seed, const std::string& out_path,
            double alpha_doc) {
    const BuiltInstance built = build_family_graph(fam, seed);
    std::string content = write_graph(built.graph);
    if (alpha_doc >= 0.0)
        content = "# intended alpha " + format_double(alpha_doc, 4) + "\n" + content;
    if (!out_path.empty()) save_text_file(out_path, content);
    std::cout << "n=" << built.graph.num_nodes() << " m=" << built.graph.num_edges()
              << " B=" << built.graph.count_color(Color::Blue)
              << " R=" << built.graph.count_color(Color::Red);
    if (built.known_optimum) std::cout << " known_optimum=" << *built.known_optimum;
    std::cout << '\n';
    if (out_path.empty()) std::cout << content;
    return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& algorithm, double alpha,
              int rho, double epsilon, std::uint64_t seed, int trials,
              const std::string& out_path, const std::string& record_path,
              const std::string& dump_tree_path) {
    check_common_flags(alpha, rho, epsilon);
    const FmlInstance instance = ingest_edge_list(instance_path, rho, alpha);
    SolveOptions options;
    options.algorithm = algorithm_from_name(algorithm);
    options.epsilon = epsilon;
    options.seed = seed;
    options.trials = trials;
    const SolveResult result = run_algorithm(instance, options);

    if (!out_path.empty()) save_text_file(out_path, write_labeling(result.solution.labeling));
    if (!dump_tree_path.empty() && result.tree) save_text_file(dump_tree_path, write_tree(*result.tree));

    const RunRecord rec = make_record(instance, result);
    if (!record_path.empty()) save_text_file(record_path, record_to_json(rec) + "\n");
    std::cout << kCsvHeader << '\n' << csv_row(rec) << '\n';
    return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& labeling_path, double alpha,
               int rho, double xi) {
    check_common_flags(alpha, rho, 1.0);
    if (xi < 1.0) throw UsageError("--xi must be >= 1");
    const FmlInstance instance = ingest_edge_list(instance_path, rho, alpha);
    FmlSolution solution =
        FmlSolution::from_labeling(read_labeling(load_text_file(labeling_path)), SolutionMeta{});
    const VerifyReport report = verify_relaxed(instance, solution, xi);
    std::cout << report_to_json(report) << '\n';
    return report.feasible ? 0 : 1;
}

// ------------------------------------------------------------------ bench

struct BenchTask {
    Algorithm algorithm;
    std::optional<double> epsilon;
    std::uint64_t seed;
};

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return xs.empty() ? 0.0 : sum / double(xs.size());
}

double std_of(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mean = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / double(xs.size() - 1));
}

int cmd_bench(const FamilyOptions& fam, const std::string& algorithms_spec,
              const std::string& seeds_spec, double alpha, int rho,
              const std::string& epsilons_spec, const std::string& out_path, int jobs) {
    std::vector<Algorithm> algorithms;
    for (const std::string& name : split(algorithms_spec, ','))
        algorithms.push_back(algorithm_from_name(name));
    const std::vector<std::uint64_t> seeds = parse_seeds(seeds_spec);
    std::vector<double> epsilons;
    for (const std::string& e : split(epsilons_spec, ','))
        epsilons.push_back(parse_real(e, "epsilon"));
    if (epsilons.empty()) epsilons.push_back(0.1);
    for (double eps : epsilons) check_common_flags(alpha, rho, eps);

    std::vector<BenchTask> tasks;
    for (Algorithm algo : algorithms) {
        if (algo == Algorithm::FmlBicriteria) {
            for (double eps : epsilons)
                for (std::uint64_t seed : seeds) tasks.push_back({algo, eps, seed});
        } else {
            for (std::uint64_t seed : seeds) tasks.push_back({algo, std::nullopt, seed});
        }
    }

    std::vector<RunRecord> records(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const BenchTask& task = tasks[i];
            RunRecord& rec = records[i];
            try {
                const BuiltInstance built = build_family_graph(fam, task.seed);
                const FmlInstance instance = FmlInstance::with_alpha(built.graph, rho, alpha);
                SolveOptions options;
                options.algorithm = task.algorithm;
                options.epsilon = task.epsilon.value_or(0.1);
                options.seed = task.seed;
                rec = make_record(instance, run_algorithm(instance, options));
            } catch (const std::exception& e) {
                rec.algorithm = algorithm_name(task.algorithm);
                rec.seed = std::to_string(task.seed);
                std::string why = e.what();
                std::replace(why.begin(), why.end(), ',', ';');
                rec.status = "error: " + why;
            }
        }
    };
    const int thread_count =
        std::max(1, jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    for (const RunRecord& rec : records) csv << csv_row(rec) << '\n';

    // Aggregate block: mean and standard deviation per (algorithm, epsilon).
    auto aggregate = [&](Algorithm algo, std::optional<double> eps) {
        std::vector<double> cost, hop, cov_b, cov_r, embed, wall;
        RunRecord proto;
        bool any = false;
        for (size_t i = 0; i < tasks.size(); ++i) {
            if (tasks[i].algorithm != algo || tasks[i].epsilon != eps) continue;
            if (records[i].status != "ok") continue;
            const RunRecord& r = records[i];
            proto = r;
            any = true;
            cost.push_back(double(r.cost));
            if (r.hop_cost >= 0) hop.push_back(double(r.hop_cost));
            cov_b.push_back(double(r.covered_b));
            cov_r.push_back(double(r.covered_r));
            embed.push_back(r.embed_seconds);
            wall.push_back(r.wall_seconds);
        }
        if (!any) return;
        for (const char* kind : {"mean", "std"}) {
            const bool is_mean = std::string(kind) == "mean";
            auto pick = [&](const std::vector<double>& xs) { return is_mean ? mean_of(xs) : std_of(xs); };
            csv << proto.algorithm << ',' << proto.epsilon << ',' << kind << ','
                << format_double(proto.alpha, 4) << ",,,,,,," << format_double(pick(cost), 3) << ','
                << (hop.empty() ? "" : format_double(pick(hop), 3)) << ','
                << format_double(pick(cov_b), 3) << ',' << format_double(pick(cov_r), 3)
                << ",,,,," << format_double(pick(embed)) << ',' << format_double(pick(wall)) << '\n';
        }
    };
    for (Algorithm algo : algorithms) {
        if (algo == Algorithm::FmlBicriteria)
            for (double eps : epsilons) aggregate(algo, eps);
        else
            aggregate(algo, std::nullopt);
    }

    // Covered-count ratios bicriteria/exact per epsilon over common seeds.
    const bool have_exact =
        std::find(algorithms.begin(), algorithms.end(), Algorithm::FmlExact) != algorithms.end();
    const bool have_bi = std::find(algorithms.begin(), algorithms.end(),
                                   Algorithm::FmlBicriteria) != algorithms.end();
    if (have_exact && have_bi) {
        auto find_record = [&](Algorithm algo, std::optional<double> eps,
                               std::uint64_t seed) -> const RunRecord* {
            for (size_t i = 0; i < tasks.size(); ++i)
                if (tasks[i].algorithm == algo && tasks[i].epsilon == eps && tasks[i].seed == seed &&
                    records[i].status == "ok")
                    return &records[i];
            return nullptr;
        };
        for (double eps : epsilons) {
            std::vector<double> ratio_b, ratio_r;
            for (std::uint64_t seed : seeds) {
                const RunRecord* ex = find_record(Algorithm::FmlExact, std::nullopt, seed);
                const RunRecord* bi = find_record(Algorithm::FmlBicriteria, eps, seed);
                if (!ex || !bi || ex->covered_b <= 0 || ex->covered_r <= 0) continue;
                ratio_b.push_back(double(bi->covered_b) / double(ex->covered_b));
                ratio_r.push_back(double(bi->covered_r) / double(ex->covered_r));
            }
            if (ratio_b.empty()) continue;
            std::ostringstream e;
            e << eps;
            csv << "ratio-bicriteria/exact," << e.str() << ",mean," << format_double(alpha, 4)
                << ",,,,,,,,," << format_double(mean_of(ratio_b)) << ','
                << format_double(mean_of(ratio_r)) << ",,,,,,\n";
        }
    }

    const std::string content = csv.str();
    if (!out_path.empty()) save_text_file(out_path, content);
    std::cout << content;
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"Fair minimum labeling: solvers, baselines and benchmarks"};
    app.require_subcommand(1);

    // gen
    FamilyOptions gen_fam;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    double gen_alpha_doc = -1.0;
    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    add_family_flags(gen, gen_fam);
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--out", gen_out, "output graph file (stdout if omitted)");
    gen->add_option("--alpha-doc", gen_alpha_doc,
                    "record the intended alpha as a comment in the file");

    // solve
    std::string solve_instance, solve_algorithm = "fml-bicriteria";
    double solve_alpha = 0.5, solve_epsilon = 0.1;
    int solve_rho = 1, solve_trials = 1;
    std::uint64_t solve_seed = 0;
    std::string solve_out, solve_record, solve_dump_tree;
    CLI::App* solve = app.add_subcommand("solve", "solve an instance");
    solve->add_option("--instance", solve_instance, "instance graph file")->required();
    solve->add_option("--algorithm", solve_algorithm,
                      "fml-exact|fml-bicriteria|greedy|closest|alternating");
    solve->add_option("--alpha", solve_alpha, "required coverage fraction per group");
    solve->add_option("--rho", solve_rho, "terminals each covered node must reach");
    solve->add_option("--epsilon", solve_epsilon, "bucketing precision (bicriteria)");
    solve->add_option("--seed", solve_seed, "solver seed (tree sampling)");
    solve->add_option("--trials", solve_trials, "tree samples; cheapest verified kept");
    solve->add_option("--out", solve_out, "labeling output file");
    solve->add_option("--record", solve_record, "JSON record output file");
    solve->add_option("--dump-tree", solve_dump_tree, "dump the embedding tree");

    // verify
    std::string verify_instance, verify_labeling;
    double verify_alpha = 0.5, verify_xi = 1.0;
    int verify_rho = 1;
    CLI::App* ver = app.add_subcommand("verify", "verify a labeling against an instance");
    ver->add_option("--instance", verify_instance)->required();
    ver->add_option("--labeling", verify_labeling)->required();
    ver->add_option("--alpha", verify_alpha);
    ver->add_option("--rho", verify_rho);
    ver->add_option("--xi", verify_xi, "coverage relaxation factor >= 1");

    // bench
    FamilyOptions bench_fam;
    std::string bench_algorithms = "fml-bicriteria", bench_seeds = "1", bench_epsilons = "0.1";
    double bench_alpha = 0.5;
    int bench_rho = 1, bench_jobs = 0;
    std::string bench_out;
    CLI::App* bench = app.add_subcommand("bench", "benchmark sweep over algorithms and seeds");
    add_family_flags(bench, bench_fam);
    bench->add_option("--algorithms", bench_algorithms, "comma separated algorithm list");
    bench->add_option("--seeds", bench_seeds, "e.g. 1-10 or 3,5,9");
    bench->add_option("--alpha", bench_alpha);
    bench->add_option("--rho", bench_rho);
    bench->add_option("--epsilons", bench_epsilons, "comma separated epsilon list (bicriteria)");
    bench->add_option("--out", bench_out, "CSV output file");
    bench->add_option("--jobs", bench_jobs, "parallel workers (0 = hardware)");

    std::vector<std::string> argv_copy(args);
    std::vector<const char*> argv;
    argv.push_back("fml");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_fam, gen_seed, gen_out, gen_alpha_doc);
        if (solve->parsed())
            return cmd_solve(solve_instance, solve_algorithm, solve_alpha, solve_rho, solve_epsilon,
                             solve_seed, solve_trials, solve_out, solve_record, solve_dump_tree);
        if (ver->parsed())
            return cmd_verify(verify_instance, verify_labeling, verify_alpha, verify_rho, verify_xi);
        if (bench->parsed())
            return cmd_bench(bench_fam, bench_algorithms, bench_seeds, bench_alpha, bench_rho,
                             bench_epsilons, bench_out, bench_jobs);
        throw UsageError("no subcommand given");
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int cli_run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_run(args);
}

}  // namespace fml
