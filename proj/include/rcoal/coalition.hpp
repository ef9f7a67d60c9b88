#ifndef RCOAL_COALITION_HPP
#define RCOAL_COALITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rcoal/domination.hpp"
#include "rcoal/graph.hpp"

namespace rcoal {

// Vertex partition with dense class indices 0..k-1; classes nonempty,
// disjoint, covering V.
struct Partition {
    int n = 0;
    std::vector<int> assignment; // class index per vertex

    static Partition from_assignment(int n, std::vector<int> assignment);

    int class_count() const;
    std::vector<VertexSet> classes() const;
};

struct Justification {
    bool self_sufficient = false;
    int partner = -1; // class index, -1 when self-sufficient
};

struct CoalitionCertificate {
    Partition partition;
    Kind kind = Kind::Dominating;
    std::vector<Justification> justification;
};

struct Violation {
    int class_index = -1;
    std::string rule;
};

// Neither operand qualifies but their union does. Operands must be
// nonempty and disjoint.
bool is_coalition(const Graph& g, VertexSet a, VertexSet b, Kind kind);

// Per class: SelfSufficient when the class qualifies (must then be a
// singleton), else the smallest-index partner forming a coalition.
std::variant<CoalitionCertificate, Violation>
verify_partition(const Graph& g, const Partition& pi, Kind kind);

// Graph on the k classes; edge (i,j) iff the classes form a coalition.
Graph coalition_graph(const Graph& g, const Partition& pi, Kind kind);

struct SolverConfig {
    std::uint64_t node_budget = 0; // 0 = unlimited
    double time_budget_seconds = 0.0; // 0 = unlimited
    int upper_bound = 0; // externally supplied, 0 = none
    // Prune toggles; every configuration must stay exact.
    bool prune_qualifying_class = true;
    bool prune_pendant_merge = true;
    bool prune_partner_feasibility = true;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes_qualifying = 0;
    std::uint64_t prunes_pendant = 0;
    std::uint64_t prunes_partner = 0;
    double seconds = 0.0;
};

struct SolveResult {
    bool feasible = false;
    bool budget_exceeded = false;
    int value = 0;
    std::optional<CoalitionCertificate> certificate;
    SearchStats stats;
};

// Decision procedure: a verified certificate with exactly k classes, or
// absent. Deterministic: the lexicographically least feasible assignment
// vector under branching by vertex 0..n-1, class ascending.
std::optional<CoalitionCertificate>
find_partition_of_size(const Graph& g, int k, Kind kind,
                       const SolverConfig& config = {},
                       SearchStats* stats = nullptr);

// Exact C(G) / RC(G): tries k downward from the tightest applicable
// upper bound, returning the first feasible size with its certificate.
SolveResult max_coalition_number(const Graph& g, Kind kind,
                                 const SolverConfig& config = {});

// Independent brute force over all set partitions via restricted-growth
// strings; n <= 10. Returns the maximum valid partition size (0 when no
// valid partition exists).
int naive_max_oracle(const Graph& g, Kind kind);

// Certificate JSON with stable field order:
// {"n","kind","value","assignment","justification"}.
std::string certificate_to_json(const CoalitionCertificate& cert);

} // namespace rcoal

#endif
