#ifndef RCOAL_DOMINATION_HPP
#define RCOAL_DOMINATION_HPP

#include <optional>
#include <vector>

#include "rcoal/graph.hpp"

namespace rcoal {

enum class Kind { Dominating, Restrained };

const char* kind_name(Kind k);
Kind kind_from_name(std::string_view name);

// Every vertex outside S has a neighbor in S.
bool is_dominating(const Graph& g, VertexSet s);

// Dominating, and no vertex outside S is isolated within V\S.
// S = V qualifies vacuously.
bool is_restrained_dominating(const Graph& g, VertexSet s);

bool qualifies(const Graph& g, VertexSet s, Kind kind);

// gamma(G): minimum size of a dominating set. Enumeration by ascending
// cardinality; guarded at n <= 20.
int domination_number(const Graph& g);

// gamma_r(G): minimum size of a restrained dominating set. S = V always
// qualifies, so the value is always present; optional kept for callers
// working on induced subgraphs.
std::optional<int> restrained_domination_number(const Graph& g);

// All subsets passing the predicate, ordered by (size, bitmask value).
// Independent oracle for the predicates and for gamma / gamma_r; n <= 20.
std::vector<VertexSet> all_qualifying_sets(const Graph& g, Kind kind);

} // namespace rcoal

#endif
