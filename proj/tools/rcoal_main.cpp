#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rcoal/coalition.hpp"
#include "rcoal/domination.hpp"
#include "rcoal/families.hpp"
#include "rcoal/graph.hpp"
#include "rcoal/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Edge list file: first line n, then one "u v" pair per line.
rcoal::Graph parse_edge_file(const std::string& path) {
    std::istringstream in(read_file(path));
    int n;
    if (!(in >> n)) throw std::runtime_error("edge file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int u, v;
    while (in >> u >> v) edges.emplace_back(u, v);
    return rcoal::Graph::from_edges(n, edges);
}

struct GraphInput {
    std::string graph6;
    std::string edge_file;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6 string");
        cmd->add_option("--edges", edge_file, "edge list file (first line n, then 'u v' lines)");
    }

    rcoal::Graph load() const {
        if (!graph6.empty() && !edge_file.empty())
            throw CLI::ValidationError("give either --graph6 or --edges, not both");
        if (!graph6.empty()) return rcoal::parse_graph6(graph6);
        if (!edge_file.empty()) return parse_edge_file(edge_file);
        throw CLI::ValidationError("one of --graph6 or --edges is required");
    }
};

std::vector<int> parse_assignment_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<int> assignment;
    int c;
    while (in >> c) assignment.push_back(c);
    return assignment;
}

int cmd_solve(const GraphInput& input, const std::string& kind_name, bool certificate,
              bool json, double budget) {
    auto g = input.load();
    auto kind = rcoal::kind_from_name(kind_name);
    rcoal::SolverConfig config;
    config.time_budget_seconds = budget;
    auto result = rcoal::max_coalition_number(g, kind, config);
    if (result.budget_exceeded) {
        std::cerr << "budget exceeded\n";
        return kExitViolation;
    }
    if (!result.feasible) {
        std::cout << (json ? "{\"feasible\":false}" : "infeasible") << "\n";
        return kExitOk;
    }
    if (json) {
        std::cout << rcoal::certificate_to_json(*result.certificate) << "\n";
    } else {
        std::cout << (kind == rcoal::Kind::Dominating ? "C" : "RC") << " = "
                  << result.value << "  (nodes: " << result.stats.nodes << ")\n";
        if (certificate) {
            auto classes = result.certificate->partition.classes();
            for (size_t i = 0; i < classes.size(); ++i) {
                std::cout << "  class " << i << " = {";
                bool first = true;
                rcoal::for_each_vertex(classes[i], [&](int v) {
                    if (!first) std::cout << ",";
                    std::cout << v;
                    first = false;
                });
                const auto& just = result.certificate->justification[i];
                std::cout << "}  "
                          << (just.self_sufficient
                                  ? std::string("self-sufficient")
                                  : "partner " + std::to_string(just.partner))
                          << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_verify(const GraphInput& input, const std::string& assignment_file,
               const std::string& kind_name) {
    auto g = input.load();
    auto assignment = parse_assignment_file(assignment_file);
    auto pi = rcoal::Partition::from_assignment(g.order(), assignment);
    auto verdict = rcoal::verify_partition(g, pi, rcoal::kind_from_name(kind_name));
    if (auto* violation = std::get_if<rcoal::Violation>(&verdict)) {
        std::cout << "INVALID: class " << violation->class_index << ": " << violation->rule
                  << "\n";
        return kExitViolation;
    }
    std::cout << "VALID: " << pi.class_count() << " classes\n";
    return kExitOk;
}

std::vector<rcoal::Graph> load_survey_graphs(const std::string& input_file,
                                             const std::string& family, int max_n) {
    if (!input_file.empty()) return rcoal::read_graph6_lines(read_file(input_file));
    if (family == "trees") {
        std::vector<rcoal::Graph> graphs;
        for (int n = 1; n <= max_n; ++n)
            for (auto& t : rcoal::free_trees(n)) graphs.push_back(std::move(t));
        return graphs;
    }
    throw CLI::ValidationError("either --input FILE or --family trees is required");
}

int cmd_survey(const std::string& input_file, const std::string& family, int max_n,
               const std::string& output, int threads, double budget) {
    auto graphs = load_survey_graphs(input_file, family, max_n);
    rcoal::SurveyConfig config;
    config.threads = threads;
    config.per_graph_time_budget_seconds = budget;
    auto records = rcoal::run_survey(graphs, config);
    std::string csv = rcoal::records_to_csv(records);
    if (output.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(output, std::ios::binary);
        out << csv;
    }
    for (const auto& rec : records)
        if (rec.budget_exceeded) {
            std::cerr << "budget exceeded on graph " << rec.index << "\n";
            return kExitViolation;
        }
    return kExitOk;
}

// Expected corpus sizes for Table 1 (connected graphs of order n).
long expected_connected_count(int n) {
    switch (n) {
    case 6: return 112;
    case 7: return 853;
    case 8: return 11117;
    case 9: return 261080;
    default: return -1;
    }
}

int cmd_tables(int table, int max_n, const std::string& corpus_dir, bool dot_empty,
               int threads, double budget) {
    rcoal::SurveyConfig config;
    config.threads = threads;
    config.per_graph_time_budget_seconds = budget;

    std::vector<rcoal::SurveyRecord> records;
    if (table == 1) {
        if (corpus_dir.empty())
            throw CLI::ValidationError("--table 1 needs --corpus-dir with connected_n{N}.g6 files");
        for (int n = 6; n <= max_n; ++n) {
            auto path = std::filesystem::path(corpus_dir) / ("connected_n" + std::to_string(n) + ".g6");
            auto graphs = rcoal::read_graph6_lines(read_file(path.string()));
            long expected = expected_connected_count(n);
            if (expected > 0 && static_cast<long>(graphs.size()) != expected) {
                std::cerr << "corpus sanity gate failed for n=" << n << ": got "
                          << graphs.size() << " graphs, expected " << expected << "\n";
                return kExitViolation;
            }
            auto part = rcoal::run_survey(graphs, config);
            records.insert(records.end(), part.begin(), part.end());
        }
    } else if (table == 2 || table == 3) {
        int min_n = table == 2 ? 4 : 3;
        std::vector<rcoal::Graph> trees;
        for (int n = min_n; n <= max_n; ++n)
            for (auto& t : rcoal::free_trees(n)) trees.push_back(std::move(t));
        records = rcoal::run_survey(trees, config);
    } else {
        throw CLI::ValidationError("--table must be 1, 2, or 3");
    }

    for (const auto& rec : records)
        if (rec.budget_exceeded) {
            std::cerr << "budget exceeded on graph " << rec.index
                      << "; partial tables are not reported\n";
            return kExitViolation;
        }
    auto dist = table == 2 ? rcoal::table_rc(records) : rcoal::table_diff(records);
    std::cout << rcoal::table_to_csv(dist, dot_empty);
    return kExitOk;
}

int cmd_cycles(int from, int to) {
    bool all_match = true;
    for (int n = from; n <= to; ++n) {
        rcoal::SolverConfig config;
        config.upper_bound = rcoal::cn_cycle_upper(n);
        auto result = rcoal::max_coalition_number(rcoal::cycle_graph(n), rcoal::Kind::Restrained, config);
        int expected = rcoal::rc_cycle_expected(n);
        bool match = result.feasible && result.value == expected;
        all_match = all_match && match;
        std::cout << n << ", " << (result.feasible ? result.value : -1) << ", " << expected
                  << ", " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return all_match ? kExitOk : kExitViolation;
}

int cmd_dot(const GraphInput& input, const std::string& assignment_file,
            const std::string& kind_name) {
    auto g = input.load();
    auto pi = rcoal::Partition::from_assignment(g.order(), parse_assignment_file(assignment_file));
    std::cout << rcoal::export_dot(g, pi, rcoal::kind_from_name(kind_name));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dominating / restrained-dominating coalition numbers"};
    app.require_subcommand(1);

    GraphInput solve_input, verify_input, dot_input;
    std::string kind = "restrained";
    bool certificate = false, json = false;
    double budget = 0.0;
    auto* solve = app.add_subcommand("solve", "solve C(G) or RC(G) for one graph");
    solve_input.add_options(solve);
    solve->add_option("--kind", kind, "dominating|restrained")->capture_default_str();
    solve->add_flag("--certificate", certificate, "print the optimal partition");
    solve->add_flag("--json", json, "JSON certificate output");
    solve->add_option("--budget-seconds", budget, "time budget (0 = unlimited)");

    std::string verify_kind = "restrained", verify_assignment;
    auto* verify = app.add_subcommand("verify", "verify a partition against the coalition rules");
    verify_input.add_options(verify);
    verify->add_option("--assignment", verify_assignment, "class index per vertex, whitespace separated")
        ->required();
    verify->add_option("--kind", verify_kind, "dominating|restrained")->capture_default_str();

    std::string survey_input_file, survey_family, survey_output;
    int survey_max_n = 10, survey_threads = 1;
    double survey_budget = 10.0;
    auto* survey = app.add_subcommand("survey", "per-graph invariant sweep, CSV output");
    survey->add_option("--input", survey_input_file, "graph6 file, one graph per line");
    survey->add_option("--family", survey_family, "generated family: trees");
    survey->add_option("--max-n", survey_max_n, "family order cap")->capture_default_str();
    survey->add_option("--output", survey_output, "CSV output path (default stdout)");
    survey->add_option("--threads", survey_threads, "worker threads")->capture_default_str();
    survey->add_option("--budget-seconds", survey_budget, "per-graph time budget")
        ->capture_default_str();

    int table = 2, tables_max_n = 10, tables_threads = 1;
    std::string corpus_dir;
    bool dot_empty = false;
    double tables_budget = 10.0;
    auto* tables = app.add_subcommand("tables", "reproduce a distribution table");
    tables->add_option("--table", table, "1|2|3")->required();
    tables->add_option("--max-n", tables_max_n, "largest order")->capture_default_str();
    tables->add_option("--corpus-dir", corpus_dir, "directory with connected_n{N}.g6 (table 1)");
    tables->add_flag("--dot-empty", dot_empty, "print '.' for empty cells");
    tables->add_option("--threads", tables_threads, "worker threads")->capture_default_str();
    tables->add_option("--budget-seconds", tables_budget, "per-graph time budget")
        ->capture_default_str();

    int cycles_from = 3, cycles_to = 15;
    auto* cycles = app.add_subcommand("cycles", "compare solver RC(C_n) with the closed form");
    cycles->add_option("--from", cycles_from, "first order")->capture_default_str();
    cycles->add_option("--to", cycles_to, "last order")->capture_default_str();

    std::string dot_kind = "restrained", dot_assignment;
    auto* dot = app.add_subcommand("dot", "emit the coalition graph as DOT");
    dot_input.add_options(dot);
    dot->add_option("--assignment", dot_assignment, "class index per vertex")->required();
    dot->add_option("--kind", dot_kind, "dominating|restrained")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (solve->parsed()) return cmd_solve(solve_input, kind, certificate, json, budget);
        if (verify->parsed()) return cmd_verify(verify_input, verify_assignment, verify_kind);
        if (survey->parsed())
            return cmd_survey(survey_input_file, survey_family, survey_max_n, survey_output,
                              survey_threads, survey_budget);
        if (tables->parsed())
            return cmd_tables(table, tables_max_n, corpus_dir, dot_empty, tables_threads,
                              tables_budget);
        if (cycles->parsed()) return cmd_cycles(cycles_from, cycles_to);
        if (dot->parsed()) return cmd_dot(dot_input, dot_assignment, dot_kind);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
