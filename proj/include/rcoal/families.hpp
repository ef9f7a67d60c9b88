#ifndef RCOAL_FAMILIES_HPP
#define RCOAL_FAMILIES_HPP

#include <vector>

#include "rcoal/graph.hpp"

namespace rcoal {

enum class FamilyKind { Path, Cycle, Star, Complete, CompleteBipartite };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 0;     // order, for all kinds except CompleteBipartite
    int r = 0, s = 0; // side sizes, CompleteBipartite only (r >= s >= 1)
};

// Canonical vertex numbering: paths/cycles consecutive, star center 0,
// bipartite sides contiguous (0..r-1, r..r+s-1).
Graph build_family(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n); // order n, center 0
Graph complete_graph(int n);
Graph complete_bipartite_graph(int r, int s);

// Closed-form RC(C_n): 3 for n=3,5; 4 for n=4,8; 5 for n=7,11; 6 otherwise.
int rc_cycle_expected(int n);

// Closed-form RC(P_n): 2 for 2<=n<=5, 3 for n>=6.
int rc_path_expected(int n);

// Upper bound C(C_n) <= 6, used as a solver cap for cycles.
int cn_cycle_upper(int n);

// One representative per isomorphism class of trees on n vertices
// (1 <= n <= 16). Rooted canonical level sequences are enumerated by
// successor and deduplicated through a centroid-rooted canonical form.
std::vector<Graph> free_trees(int n);

} // namespace rcoal

#endif
