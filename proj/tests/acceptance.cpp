// Acceptance suite: one test case per criterion, each printing a
// "criterion N: PASS/FAIL" line. Needs the connected-graph corpus
// (RCOAL_CORPUS_DIR, default ./corpus) produced by the gen_graphs tool.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "rcoal/coalition.hpp"
#include "rcoal/domination.hpp"
#include "rcoal/families.hpp"
#include "rcoal/graph.hpp"
#include "rcoal/survey.hpp"

using namespace rcoal;

namespace {

int worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string corpus_dir() {
    const char* env = std::getenv("RCOAL_CORPUS_DIR");
    return env ? env : "corpus";
}

std::vector<Graph> load_corpus(int n) {
    auto path = std::filesystem::path(corpus_dir()) / ("connected_n" + std::to_string(n) + ".g6");
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing corpus file ", path.string(),
                    " (run gen_graphs first)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph6_lines(buf.str());
}

std::vector<Graph> trees_of_order(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n)
        for (auto& t : free_trees(n)) out.push_back(std::move(t));
    return out;
}

void report(int criterion, bool pass, const std::string& note = "") {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
}

void check_bound_invariants(const std::vector<SurveyRecord>& records, bool& ok) {
    for (const auto& rec : records) {
        if (rec.budget_exceeded) { ok = false; continue; }
        if (rec.rc_value > rec.c_value) ok = false;
        if (rec.gamma_r >= 2 && rec.rc_value > rec.n - rec.gamma_r + 2) ok = false;
        if (rec.min_deg == 1 && rec.rc_value > rec.max_deg + 2) ok = false;
        if (rec.c_value > (rec.max_deg + 3) * (rec.max_deg + 3) / 4) ok = false;
    }
}

// Survey records shared between the table criteria and criterion 6.
std::vector<SurveyRecord>& tree_records() {
    static std::vector<SurveyRecord> records = [] {
        SurveyConfig config;
        config.threads = worker_threads();
        config.per_graph_time_budget_seconds = 300.0;
        return run_survey(trees_of_order(3, 13), config);
    }();
    return records;
}

std::vector<SurveyRecord>& graph_records() {
    static std::vector<SurveyRecord> records = [] {
        std::vector<Graph> graphs;
        for (int n = 6; n <= 8; ++n) {
            auto part = load_corpus(n);
            graphs.insert(graphs.end(), part.begin(), part.end());
        }
        SurveyConfig config;
        config.threads = worker_threads();
        config.per_graph_time_budget_seconds = 300.0;
        return run_survey(graphs, config);
    }();
    return records;
}

} // namespace

TEST_CASE("criterion 1: cycle formula for n = 3..15") {
    bool ok = true;
    for (int n = 3; n <= 15; ++n) {
        SolverConfig config;
        config.upper_bound = cn_cycle_upper(n);
        auto result = max_coalition_number(cycle_graph(n), Kind::Restrained, config);
        bool match = result.feasible && result.value == rc_cycle_expected(n);
        CHECK_MESSAGE(match, "RC(C_", n, ")");
        ok = ok && match;
    }
    report(1, ok);
}

TEST_CASE("criterion 2: tree RC distribution, n = 4..13") {
    // column -> counts for RC = 2,3,4,5
    const std::map<int, std::vector<long>> expected = {
        {4, {2, 0, 0, 0}},    {5, {3, 0, 0, 0}},    {6, {5, 1, 0, 0}},
        {7, {8, 3, 0, 0}},    {8, {13, 10, 0, 0}},  {9, {20, 26, 1, 0}},
        {10, {34, 67, 5, 0}}, {11, {54, 155, 26, 0}}, {12, {95, 358, 98, 0}},
        {13, {160, 792, 348, 1}}};
    auto table = table_rc(tree_records());
    bool ok = true;
    for (const auto& [n, counts] : expected)
        for (int rc = 2; rc <= 5; ++rc) {
            auto it = table.counts.find({n, rc});
            long got = it == table.counts.end() ? 0 : it->second;
            bool match = got == counts[static_cast<size_t>(rc - 2)];
            CHECK_MESSAGE(match, "trees n=", n, " RC=", rc, " got ", got);
            ok = ok && match;
        }
    report(2, ok, "includes the n=13 long-running column");
}

TEST_CASE("criterion 3: tree d distribution, n = 3..13") {
    // column -> counts for d = 0..6
    const std::map<int, std::vector<long>> expected = {
        {3, {0, 1, 0, 0, 0, 0, 0}},
        {4, {0, 1, 1, 0, 0, 0, 0}},
        {5, {0, 1, 2, 0, 0, 0, 0}},
        {6, {0, 1, 5, 0, 0, 0, 0}},
        {7, {0, 2, 8, 1, 0, 0, 0}},
        {8, {0, 5, 17, 1, 0, 0, 0}},
        {9, {1, 11, 32, 2, 1, 0, 0}},
        {10, {3, 26, 70, 6, 1, 0, 0}},
        {11, {13, 62, 143, 14, 2, 1, 0}},
        {12, {36, 160, 305, 45, 4, 1, 0}},
        {13, {105, 421, 635, 126, 11, 2, 1}}};
    auto table = table_diff(tree_records());
    bool ok = true;
    for (const auto& [n, counts] : expected)
        for (int d = 0; d <= 6; ++d) {
            auto it = table.counts.find({n, d});
            long got = it == table.counts.end() ? 0 : it->second;
            bool match = got == counts[static_cast<size_t>(d)];
            CHECK_MESSAGE(match, "trees n=", n, " d=", d, " got ", got);
            ok = ok && match;
        }
    report(3, ok);
}

TEST_CASE("criterion 4: connected-graph d distribution, n = 6..8") {
    const std::map<int, std::vector<long>> expected = {
        {6, {77, 25, 9, 1, 0, 0, 0}},
        {7, {580, 226, 43, 3, 1, 0, 0}},
        {8, {8183, 2399, 511, 21, 2, 1, 0}}};
    const std::map<int, long> corpus_sizes = {{6, 112}, {7, 853}, {8, 11117}};
    auto table = table_diff(graph_records());
    bool ok = true;
    for (const auto& [n, size] : corpus_sizes) {
        bool gate = table.totals.at(n) == size;
        CHECK_MESSAGE(gate, "corpus sanity gate n=", n);
        ok = ok && gate;
    }
    for (const auto& [n, counts] : expected)
        for (int d = 0; d <= 6; ++d) {
            auto it = table.counts.find({n, d});
            long got = it == table.counts.end() ? 0 : it->second;
            bool match = got == counts[static_cast<size_t>(d)];
            CHECK_MESSAGE(match, "graphs n=", n, " d=", d, " got ", got);
            ok = ok && match;
        }
    report(4, ok, "n=9 is long-running and not part of this run");
}

TEST_CASE("criterion 5: oracle equivalence under every prune configuration") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 6; ++n) {
        auto part = load_corpus(n);
        graphs.insert(graphs.end(), part.begin(), part.end());
    }
    auto trees = trees_of_order(2, 8);
    graphs.insert(graphs.end(), trees.begin(), trees.end());

    bool ok = true;
    for (const auto& g : graphs)
        for (Kind kind : {Kind::Dominating, Kind::Restrained}) {
            int oracle = naive_max_oracle(g, kind);
            for (int mask = 0; mask < 8; ++mask) {
                SolverConfig config;
                config.prune_qualifying_class = mask & 1;
                config.prune_pendant_merge = mask & 2;
                config.prune_partner_feasibility = mask & 4;
                auto result = max_coalition_number(g, kind, config);
                bool match = result.feasible && result.value == oracle;
                if (!match) {
                    CHECK_MESSAGE(match, "graph ", write_graph6(g), " kind ", kind_name(kind),
                                  " prune mask ", mask);
                    ok = false;
                }
            }
        }
    CHECK(ok);
    report(5, ok);
}

TEST_CASE("criterion 6: bound invariants across all solved graphs") {
    bool ok = true;
    check_bound_invariants(tree_records(), ok);
    check_bound_invariants(graph_records(), ok);
    // cycles from criterion 1
    for (int n = 3; n <= 15; ++n) {
        auto g = cycle_graph(n);
        auto c = max_coalition_number(g, Kind::Dominating);
        SolverConfig config;
        config.upper_bound = c.value;
        auto rc = max_coalition_number(g, Kind::Restrained, config);
        if (rc.value > c.value) ok = false;
        if (c.value > (g.max_degree() + 3) * (g.max_degree() + 3) / 4) ok = false;
        int gamma_r = restrained_domination_number(g).value();
        if (gamma_r >= 2 && rc.value > n - gamma_r + 2) ok = false;
    }
    CHECK(ok);
    report(6, ok);
}

TEST_CASE("criterion 7: tree star structure and path values") {
    bool ok = true;
    for (const auto& t : trees_of_order(2, 11)) {
        auto result = max_coalition_number(t, Kind::Restrained);
        REQUIRE(result.feasible);
        if (result.value < 3) continue;
        auto cg = coalition_graph(t, result.certificate->partition, Kind::Restrained);
        int k = cg.order();
        int center = -1;
        for (int v = 0; v < k; ++v)
            if (cg.degree(v) == k - 1) center = v;
        bool star = center >= 0 && cg.edge_count() == k - 1;
        if (!star) ok = false;
        if (center >= 0) {
            auto classes = result.certificate->partition.classes();
            if ((t.pendant_vertices() & ~classes[static_cast<size_t>(center)]) != 0) ok = false;
        }
    }
    for (int n = 2; n <= 12; ++n) {
        auto result = max_coalition_number(path_graph(n), Kind::Restrained);
        if (!result.feasible || result.value != rc_path_expected(n)) ok = false;
    }
    CHECK(ok);
    report(7, ok);
}

TEST_CASE("criterion 8: sharpness of the gamma_r bound on K_{r,s}") {
    bool ok = true;
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
        auto g = complete_bipartite_graph(r, s);
        // gamma_r from the independent subset-enumeration oracle
        auto sets = all_qualifying_sets(g, Kind::Restrained);
        int gamma_r = set_size(sets.front());
        auto result = max_coalition_number(g, Kind::Restrained);
        bool match = result.feasible && result.value == r + s - gamma_r + 2;
        CHECK_MESSAGE(match, "K_{", r, ",", s, "}");
        ok = ok && match;
    }
    report(8, ok);
}

TEST_CASE("criterion 9: determinism") {
    bool ok = true;

    // two consecutive `tables --table 2 --max-n 10` runs via the CLI
    const char* cli = std::getenv("RCOAL_CLI");
    if (cli) {
        auto run = [&](const std::string& out) {
            std::string cmd = std::string(cli) + " tables --table 2 --max-n 10 > " + out;
            REQUIRE(std::system(cmd.c_str()) == 0);
            std::ifstream in(out, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        };
        std::string a = run("acceptance_tables_a.csv");
        std::string b = run("acceptance_tables_b.csv");
        bool identical = !a.empty() && a == b;
        CHECK(identical);
        ok = ok && identical;
    } else {
        std::cout << "criterion 9: RCOAL_CLI not set, using library-level runs\n";
        auto graphs = trees_of_order(4, 10);
        auto a = table_to_csv(table_rc(run_survey(graphs)));
        auto b = table_to_csv(table_rc(run_survey(graphs)));
        bool identical = a == b;
        CHECK(identical);
        ok = ok && identical;
    }

    // parallel survey equals sequential survey
    auto graphs = trees_of_order(4, 10);
    SurveyConfig sequential;
    SurveyConfig parallel;
    parallel.threads = worker_threads();
    auto sa = run_survey(graphs, sequential);
    auto pa = run_survey(graphs, parallel);
    bool tables_equal = table_to_csv(table_rc(sa)) == table_to_csv(table_rc(pa)) &&
                        table_to_csv(table_diff(sa)) == table_to_csv(table_diff(pa));
    CHECK(tables_equal);
    ok = ok && tables_equal;
    report(9, ok);
}
