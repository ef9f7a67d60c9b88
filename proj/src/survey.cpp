#include "rcoal/survey.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "rcoal/domination.hpp"

namespace rcoal {

namespace {

SurveyRecord solve_one(const Graph& g, int index, const SurveyConfig& config) {
    SurveyRecord rec;
    rec.index = index;
    rec.graph6 = write_graph6(g);
    rec.n = g.order();
    rec.min_deg = g.min_degree();
    rec.max_deg = g.max_degree();
    rec.connected = g.is_connected();
    rec.gamma = domination_number(g);
    rec.gamma_r = restrained_domination_number(g).value();

    SolverConfig solver = config.solver;
    solver.time_budget_seconds = config.per_graph_time_budget_seconds;

    auto c = max_coalition_number(g, Kind::Dominating, solver);
    rec.nodes_c = c.stats.nodes;
    if (c.budget_exceeded || !c.feasible) {
        rec.budget_exceeded = c.budget_exceeded;
        return rec;
    }
    rec.c_value = c.value;

    SolverConfig rc_solver = solver;
    rc_solver.upper_bound = c.value; // RC(G) <= C(G)
    auto rc = max_coalition_number(g, Kind::Restrained, rc_solver);
    rec.nodes_rc = rc.stats.nodes;
    if (rc.budget_exceeded || !rc.feasible) {
        rec.budget_exceeded = rc.budget_exceeded;
        return rec;
    }
    rec.rc_value = rc.value;
    rec.diff = rec.c_value - rec.rc_value;
    return rec;
}

} // namespace

std::vector<SurveyRecord> run_survey(const std::vector<Graph>& graphs,
                                     const SurveyConfig& config) {
    std::vector<SurveyRecord> records(graphs.size());
    int threads = std::max(1, config.threads);
    if (threads == 1 || graphs.size() < 2) {
        for (size_t i = 0; i < graphs.size(); ++i)
            records[i] = solve_one(graphs[i], static_cast<int>(i), config);
        return records;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= graphs.size()) break;
            records[i] = solve_one(graphs[i], static_cast<int>(i), config);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

namespace {

DistributionTable build_table(const std::vector<SurveyRecord>& records,
                              const std::string& axis, int SurveyRecord::* field) {
    DistributionTable table;
    table.value_axis = axis;
    for (const auto& rec : records) {
        int value = rec.*field;
        ++table.counts[{rec.n, value}];
        ++table.totals[rec.n];
        if (std::find(table.ns.begin(), table.ns.end(), rec.n) == table.ns.end())
            table.ns.push_back(rec.n);
        if (std::find(table.values.begin(), table.values.end(), value) == table.values.end())
            table.values.push_back(value);
    }
    std::sort(table.ns.begin(), table.ns.end());
    std::sort(table.values.begin(), table.values.end());
    return table;
}

} // namespace

DistributionTable table_diff(const std::vector<SurveyRecord>& records) {
    return build_table(records, "d", &SurveyRecord::diff);
}

DistributionTable table_rc(const std::vector<SurveyRecord>& records) {
    return build_table(records, "RC", &SurveyRecord::rc_value);
}

std::optional<SurveyRecord> find_gap_witness(const std::vector<SurveyRecord>& records, int k) {
    for (const auto& rec : records)
        if (rec.diff == k) return rec;
    return std::nullopt;
}

std::string export_dot(const Graph& g, const Partition& pi, Kind kind) {
    Graph cg = coalition_graph(g, pi, kind);
    auto classes = pi.classes();
    std::ostringstream out;
    out << "graph coalition {\n";
    for (size_t i = 0; i < classes.size(); ++i) {
        out << "  c" << i << " [label=\"{";
        bool first = true;
        for_each_vertex(classes[i], [&](int v) {
            if (!first) out << ",";
            out << v;
            first = false;
        });
        out << "}\"];\n";
    }
    for (int i = 0; i < cg.order(); ++i)
        for (int j = i + 1; j < cg.order(); ++j)
            if (cg.has_edge(i, j)) out << "  c" << i << " -- c" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string table_to_csv(const DistributionTable& table, bool dot_empty) {
    std::ostringstream out;
    out << table.value_axis << "/n";
    for (int n : table.ns) out << "," << n;
    out << "\n";
    for (int value : table.values) {
        out << value;
        for (int n : table.ns) {
            auto it = table.counts.find({n, value});
            long count = it == table.counts.end() ? 0 : it->second;
            if (count == 0 && dot_empty)
                out << ",.";
            else
                out << "," << count;
        }
        out << "\n";
    }
    out << "total";
    for (int n : table.ns) out << "," << table.totals.at(n);
    out << "\n";
    return out.str();
}

std::string records_to_csv(const std::vector<SurveyRecord>& records) {
    std::ostringstream out;
    out << "index,graph6,n,delta,Delta,gamma,gamma_r,C,RC,d,nodes_C,nodes_RC,connected,budget_exceeded\n";
    for (const auto& rec : records) {
        out << rec.index << "," << rec.graph6 << "," << rec.n << "," << rec.min_deg << ","
            << rec.max_deg << "," << rec.gamma << "," << rec.gamma_r << "," << rec.c_value
            << "," << rec.rc_value << "," << rec.diff << "," << rec.nodes_c << ","
            << rec.nodes_rc << "," << (rec.connected ? 1 : 0) << ","
            << (rec.budget_exceeded ? 1 : 0) << "\n";
    }
    return out.str();
}

} // namespace rcoal
