#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fml/cli.hpp"
#include "fml/io.hpp"

using namespace fml;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = 0;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    CliResult result;
    try {
        result.exit_code = cli_run(args);
    } catch (...) {
        std::cout.rdbuf(old);
        throw;
    }
    std::cout.rdbuf(old);
    result.out = captured.str();
    return result;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "fml_cli_test";
    fs::create_directories(dir);
    return dir;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("gen writes instances and prints a summary") {
    const auto dir = temp_dir();

    SUBCASE("geometric") {
        const auto path = (dir / "geo.graph").string();
        const auto res = run_cli({"gen", "--family", "geometric", "--n", "64", "--radius", "0.3",
                                  "--seed", "7", "--colors", "8,8", "--out", path});
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("B=8 R=8") != std::string::npos);
        const auto g = read_graph(load_text_file(path));
        CHECK(g.count_color(Color::Blue) == 8);
    }
    SUBCASE("barabasi-albert") {
        const auto path = (dir / "ba.graph").string();
        const auto res = run_cli({"gen", "--family", "ba", "--n", "256", "--mbar", "3", "--seed",
                                  "1", "--colors", "16,16", "--out", path});
        CHECK(res.exit_code == 0);
        const auto g = read_graph(load_text_file(path));
        CHECK(g.num_edges() == 3 * 253 + 3);
    }
    SUBCASE("setcover prints the closed-form optimum") {
        const auto path = (dir / "sc.graph").string();
        const auto res = run_cli({"gen", "--family", "setcover", "--universe", "4", "--sets",
                                  "0,1;2,3", "--chain", "3", "--out", path});
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("known_optimum=10") != std::string::npos);  // 4 + 3*2
    }
    SUBCASE("bad family is a usage error") {
        CHECK(run_cli({"gen", "--family", "nope"}).exit_code == 2);
    }
}

TEST_CASE("solve emits a record and a labeling that verifies") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "inst.graph").string();
    run_cli({"gen", "--family", "geometric", "--n", "80", "--radius", "0.25", "--seed", "3",
             "--colors", "10,10", "--terminal-policy", "central", "--out", inst_path});

    SUBCASE("alpha zero costs zero") {
        const auto res = run_cli({"solve", "--instance", inst_path, "--algorithm",
                                  "fml-bicriteria", "--alpha", "0", "--seed", "1"});
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("\nfml-bicriteria,0.1,1,0.0000") != std::string::npos);
        CHECK(res.out.find(",0,,") != std::string::npos);  // cost column 0, no hop cost
    }
    SUBCASE("bicriteria solution passes verify with the declared xi") {
        const auto sol_path = (dir / "sol.labeling").string();
        const auto rec_path = (dir / "rec.json").string();
        const auto res =
            run_cli({"solve", "--instance", inst_path, "--algorithm", "fml-bicriteria", "--alpha",
                     "0.5", "--epsilon", "0.1", "--seed", "5", "--out", sol_path, "--record",
                     rec_path});
        CHECK(res.exit_code == 0);
        // Recover xi from the record and verify through the CLI round trip.
        const std::string rec = load_text_file(rec_path);
        const auto pos = rec.find("\"xi\": ");
        REQUIRE(pos != std::string::npos);
        const double xi = std::stod(rec.substr(pos + 6));
        CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", sol_path, "--alpha", "0.5",
                       "--xi", std::to_string(xi)})
                  .exit_code == 0);
    }
    SUBCASE("exact solution passes strict verify") {
        const auto sol_path = (dir / "sol_exact.labeling").string();
        const auto res = run_cli({"solve", "--instance", inst_path, "--algorithm", "fml-exact",
                                  "--alpha", "0.5", "--seed", "5", "--out", sol_path});
        CHECK(res.exit_code == 0);
        CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", sol_path, "--alpha", "0.5"})
                  .exit_code == 0);
    }
    SUBCASE("greedy record reports zero red coverage on a proximity-split instance") {
        const auto sol_path = (dir / "sol_greedy.labeling").string();
        const auto res = run_cli({"solve", "--instance", inst_path, "--algorithm", "greedy",
                                  "--alpha", "0.5", "--out", sol_path});
        CHECK(res.exit_code == 0);
        std::istringstream lines(res.out);
        std::string header, row;
        std::getline(lines, header);
        std::getline(lines, row);
        // covered_r is the 14th column.
        std::vector<std::string> cols;
        std::string col;
        std::istringstream rowstream(row);
        while (std::getline(rowstream, col, ',')) cols.push_back(col);
        REQUIRE(cols.size() >= 18);
        CHECK(cols[13] == "0");
        CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", sol_path, "--alpha", "0.5"})
                  .exit_code == 1);
    }
    SUBCASE("dump-tree writes a parseable tree file") {
        const auto tree_path = (dir / "tree.txt").string();
        const auto res = run_cli({"solve", "--instance", inst_path, "--algorithm", "fml-bicriteria",
                                  "--alpha", "0.25", "--seed", "2", "--dump-tree", tree_path});
        CHECK(res.exit_code == 0);
        CHECK(load_text_file(tree_path).rfind("root ", 0) == 0);
    }
}

TEST_CASE("verify handles the general form: several terminals and rho = 2") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "multi.graph").string();
    // Path 3(terminal) - 1(B) - 0(terminal) - 2(B); node 1 can reach both
    // terminals, node 2 only one.
    save_text_file(inst_path, "4 3\n0 1\n1 3\n0 2\n1 B\n2 B\nterminals 0 3\n");
    const auto lab_path = (dir / "multi.labeling").string();
    // Node 1 reaches 3 directly at time 2 and 0 at time 3; node 2 reaches 0
    // at time 1 but cannot continue to 3 (2 < 3 fails after arriving at 3).
    save_text_file(lab_path, "0 1 3\n1 3 2\n0 2 1\n");
    CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", lab_path, "--alpha", "0.5",
                   "--rho", "2"})
              .exit_code == 0);
    CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", lab_path, "--alpha", "1",
                   "--rho", "2"})
              .exit_code == 1);
}

TEST_CASE("fml solvers reject multi-terminal instances as a usage error") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "multi2.graph").string();
    save_text_file(inst_path, "4 3\n0 1\n1 3\n0 2\n1 B\n2 B\nterminals 0 3\n");
    CHECK(run_cli({"solve", "--instance", inst_path, "--algorithm", "fml-bicriteria", "--alpha",
                   "0.5"})
              .exit_code == 2);
}

TEST_CASE("out-of-range flag values are usage errors") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "flags.graph").string();
    save_text_file(inst_path, "3 2\n0 1\n1 2\n1 B\n2 B\nterminals 0\n");
    CHECK(run_cli({"solve", "--instance", inst_path, "--alpha", "1.5"}).exit_code == 2);
    CHECK(run_cli({"solve", "--instance", inst_path, "--alpha", "0.5", "--epsilon", "-1"})
              .exit_code == 2);
    CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", inst_path, "--xi", "0.5"})
              .exit_code == 2);
    CHECK(run_cli({"bench", "--seeds", "abc"}).exit_code == 2);
}

TEST_CASE("infeasible instances exit with code 1") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "inf.graph").string();
    save_text_file(inst_path, "3 2\n0 1\n1 2\n1 B\n2 R\nterminals 0\n");
    // rho exceeds the single terminal.
    CHECK(run_cli({"solve", "--instance", inst_path, "--algorithm", "closest", "--alpha", "1",
                   "--rho", "2"})
              .exit_code == 1);
}

TEST_CASE("verify exit codes distinguish infeasible from parse errors") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "v.graph").string();
    save_text_file(inst_path, "3 2\n0 1\n1 2\n1 B\n2 B\nterminals 0\n");
    const auto lab_path = (dir / "v.labeling").string();
    save_text_file(lab_path, "0 1 1\n");

    CHECK(run_cli({"verify", "--instance", inst_path, "--labeling", lab_path, "--alpha", "1"})
              .exit_code == 1);  // second blue not covered
    const auto ok = run_cli(
        {"verify", "--instance", inst_path, "--labeling", lab_path, "--alpha", "0.5"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"feasible\":true") != std::string::npos);

    const auto bad_path = (dir / "bad.graph").string();
    save_text_file(bad_path, "2 1\n0 1\n");
    CHECK(run_cli({"verify", "--instance", bad_path, "--labeling", lab_path, "--alpha", "0.5"})
              .exit_code == 3);
    CHECK(run_cli({"verify", "--instance", inst_path}).exit_code == 2);  // missing flag
}

TEST_CASE("bench produces per-run rows plus aggregates and is deterministic") {
    const auto dir = temp_dir();
    const auto csv_path = (dir / "bench.csv").string();
    const std::vector<std::string> args = {
        "bench", "--family", "geometric", "--n", "60",   "--radius", "0.3",
        "--colors", "6,6",  "--algorithms", "greedy,closest", "--seeds", "1-3",
        "--alpha", "0.5",   "--out", csv_path, "--jobs", "2"};
    const auto res = run_cli(args);
    CHECK(res.exit_code == 0);
    const std::string csv = load_text_file(csv_path);
    // header + 6 runs + 2 algorithms x (mean, std)
    CHECK(count_lines(csv) == 1 + 6 + 4);

    // Re-run and compare everything except the trailing timing columns.
    const auto csv_path2 = (dir / "bench2.csv").string();
    std::vector<std::string> args2 = args;
    args2[args2.size() - 3] = csv_path2;
    run_cli(args2);
    std::istringstream a(load_text_file(csv_path)), b(load_text_file(csv_path2));
    std::string la, lb;
    while (std::getline(a, la) && std::getline(b, lb)) {
        const auto strip = [](const std::string& s) {
            size_t pos = s.size();
            for (int commas = 0; pos > 0 && commas < 2; --pos)
                if (s[pos - 1] == ',') ++commas;
            return s.substr(0, pos);
        };
        CHECK(strip(la) == strip(lb));
    }
}

TEST_CASE("bench emits bicriteria/exact coverage ratios when both solvers run") {
    const auto dir = temp_dir();
    const auto csv_path = (dir / "ratio.csv").string();
    const auto res = run_cli({"bench", "--family", "ba", "--n", "40", "--mbar", "2", "--colors",
                              "8,8", "--algorithms", "fml-exact,fml-bicriteria", "--seeds", "1-2",
                              "--alpha", "0.5", "--epsilons", "0.5", "--out", csv_path});
    CHECK(res.exit_code == 0);
    const std::string csv = load_text_file(csv_path);
    CHECK(csv.find("ratio-bicriteria/exact,0.5,mean") != std::string::npos);
    // header + 4 runs + 2x2 aggregates + 1 ratio row
    CHECK(count_lines(csv) == 1 + 4 + 4 + 1);
}

TEST_CASE("multi-trial solve keeps a verified solution and stays deterministic") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "trials.graph").string();
    run_cli({"gen", "--family", "geometric", "--n", "70", "--radius", "0.3", "--seed", "4",
             "--colors", "8,8", "--out", inst_path});
    const auto s1 = (dir / "t1.labeling").string();
    const auto s2 = (dir / "t2.labeling").string();
    for (const auto& out : {s1, s2}) {
        const auto res = run_cli({"solve", "--instance", inst_path, "--algorithm",
                                  "fml-bicriteria", "--alpha", "0.5", "--epsilon", "0.2", "--seed",
                                  "3", "--trials", "4", "--out", out});
        CHECK(res.exit_code == 0);
    }
    CHECK(load_text_file(s1) == load_text_file(s2));
}

TEST_CASE("gen records the documentation alpha as a leading comment") {
    const auto dir = temp_dir();
    const auto path = (dir / "adoc.graph").string();
    run_cli({"gen", "--family", "geometric", "--n", "30", "--radius", "0.4", "--seed", "2",
             "--colors", "3,3", "--alpha-doc", "0.5", "--out", path});
    const std::string content = load_text_file(path);
    CHECK(content.rfind("# intended alpha 0.5000", 0) == 0);
    CHECK(read_graph(content).count_color(Color::Blue) == 3);  // comment is ignored by the parser
}

TEST_CASE("solve is deterministic across runs: identical labeling files") {
    const auto dir = temp_dir();
    const auto inst_path = (dir / "det.graph").string();
    run_cli({"gen", "--family", "ba", "--n", "100", "--mbar", "3", "--seed", "11", "--colors",
             "12,12", "--out", inst_path});
    const auto s1 = (dir / "det1.labeling").string();
    const auto s2 = (dir / "det2.labeling").string();
    for (const auto& out : {s1, s2})
        run_cli({"solve", "--instance", inst_path, "--algorithm", "fml-bicriteria", "--alpha",
                 "0.5", "--epsilon", "0.5", "--seed", "9", "--out", out});
    CHECK(load_text_file(s1) == load_text_file(s2));
}
