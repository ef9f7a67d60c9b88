#ifndef RCOAL_SURVEY_HPP
#define RCOAL_SURVEY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcoal/coalition.hpp"
#include "rcoal/graph.hpp"

namespace rcoal {

struct SurveyRecord {
    int index = 0;
    std::string graph6;
    int n = 0;
    int min_deg = 0;
    int max_deg = 0;
    int gamma = 0;
    int gamma_r = 0;
    int c_value = 0;
    int rc_value = 0;
    int diff = 0; // C - RC, nonnegative for every solved graph
    std::uint64_t nodes_c = 0;
    std::uint64_t nodes_rc = 0;
    bool connected = true;
    bool budget_exceeded = false;
};

struct SurveyConfig {
    int threads = 1;
    double per_graph_time_budget_seconds = 10.0;
    SolverConfig solver; // prune toggles propagated to both solves
};

// Solves C and RC (RC capped by the computed C) for every input graph;
// output order matches input order regardless of thread count.
// Disconnected inputs are flagged, not dropped.
std::vector<SurveyRecord> run_survey(const std::vector<Graph>& graphs,
                                     const SurveyConfig& config = {});

// Counts keyed by (n, value); one column per n, totals per column.
struct DistributionTable {
    std::string value_axis; // "d" or "RC"
    std::vector<int> ns;
    std::vector<int> values;
    std::map<std::pair<int, int>, long> counts; // (n, value) -> count
    std::map<int, long> totals;                 // n -> corpus size
};

DistributionTable table_diff(const std::vector<SurveyRecord>& records);
DistributionTable table_rc(const std::vector<SurveyRecord>& records);

// First record with C - RC = k, in input order.
std::optional<SurveyRecord> find_gap_witness(const std::vector<SurveyRecord>& records, int k);

// DOT text of the coalition graph: one node per class labeled with its
// vertex set, one edge per coalition pair.
std::string export_dot(const Graph& g, const Partition& pi, Kind kind);

// Rows = values, columns = n. dot_empty prints "." for empty cells
std::string table_to_csv(const DistributionTable& table, bool dot_empty = false);

std::string records_to_csv(const std::vector<SurveyRecord>& records);

} // namespace rcoal

#endif
