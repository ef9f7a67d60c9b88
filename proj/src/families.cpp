#include "rcoal/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace rcoal {

Graph path_graph(int n) {
    Graph g = Graph::empty(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    Graph g = Graph::empty(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_graph(int n) {
    Graph g = Graph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite_graph(int r, int s) {
    if (r < s || s < 1) throw std::invalid_argument("complete bipartite needs r >= s >= 1");
    Graph g = Graph::empty(r + s);
    for (int u = 0; u < r; ++u)
        for (int v = r; v < r + s; ++v) g.add_edge(u, v);
    return g;
}

Graph build_family(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::Path: return path_graph(spec.n);
    case FamilyKind::Cycle: return cycle_graph(spec.n);
    case FamilyKind::Star: return star_graph(spec.n);
    case FamilyKind::Complete: return complete_graph(spec.n);
    case FamilyKind::CompleteBipartite: return complete_bipartite_graph(spec.r, spec.s);
    }
    throw std::invalid_argument("unknown family kind");
}

int rc_cycle_expected(int n) {
    if (n < 3) throw std::invalid_argument("rc_cycle_expected needs n >= 3");
    if (n == 3 || n == 5) return 3;
    if (n == 4 || n == 8) return 4;
    if (n == 7 || n == 11) return 5;
    return 6;
}

int rc_path_expected(int n) {
    if (n < 2) throw std::invalid_argument("rc_path_expected needs n >= 2");
    return n <= 5 ? 2 : 3;
}

int cn_cycle_upper(int n) {
    if (n < 3) throw std::invalid_argument("cn_cycle_upper needs n >= 3");
    return 6;
}

namespace {

// Canonical string of the tree rooted at `root` within `adj`, excluding
// the `blocked` neighbor: "(" + sorted child encodings + ")".
std::string rooted_code(const std::vector<std::vector<int>>& adj, int root, int blocked) {
    std::vector<std::string> child_codes;
    for (int u : adj[static_cast<size_t>(root)])
        if (u != blocked) child_codes.push_back(rooted_code(adj, u, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<int> centroids(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> size(static_cast<size_t>(n), 1), heaviest(static_cast<size_t>(n), 0);
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    order.reserve(static_cast<size_t>(n));
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i)
        for (int u : adj[static_cast<size_t>(order[i])])
            if (u != parent[static_cast<size_t>(order[i])]) {
                parent[static_cast<size_t>(u)] = order[i];
                order.push_back(u);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        int p = parent[static_cast<size_t>(v)];
        if (p >= 0) {
            size[static_cast<size_t>(p)] += size[static_cast<size_t>(v)];
            heaviest[static_cast<size_t>(p)] = std::max(heaviest[static_cast<size_t>(p)], size[static_cast<size_t>(v)]);
        }
    }
    std::vector<int> result;
    int best = n;
    for (int v = 0; v < n; ++v) {
        int weight = std::max(heaviest[static_cast<size_t>(v)], n - size[static_cast<size_t>(v)]);
        if (weight < best) {
            best = weight;
            result.clear();
        }
        if (weight == best) result.push_back(v);
    }
    return result;
}

// Isomorphism-invariant code of a free tree: root at the centroid, or at
// the centroid edge when there are two.
std::string free_tree_code(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        for_each_vertex(g.neighbors(v), [&](int u) { adj[static_cast<size_t>(v)].push_back(u); });
    auto c = centroids(adj);
    if (c.size() == 1) return rooted_code(adj, c[0], -1);
    std::string a = rooted_code(adj, c[0], c[1]);
    std::string b = rooted_code(adj, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

Graph tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    Graph g = Graph::empty(n);
    for (int i = 1; i < n; ++i) {
        // Parent: nearest earlier vertex one level up.
        for (int j = i - 1; j >= 0; --j)
            if (levels[static_cast<size_t>(j)] == levels[static_cast<size_t>(i)] - 1) {
                g.add_edge(j, i);
                break;
            }
    }
    return g;
}

} // namespace

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > 16) throw std::invalid_argument("free_trees limited to 1 <= n <= 16");
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph::empty(1));
        return out;
    }
    // Rooted-tree level sequences in reverse lexicographic order, from the
    // path [1..n] down to the star [1,2,...,2].
    std::vector<int> levels(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) levels[static_cast<size_t>(i)] = i + 1;
    std::set<std::string> seen;
    while (true) {
        Graph t = tree_from_levels(levels);
        if (seen.insert(free_tree_code(t)).second) out.push_back(t);

        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (levels[static_cast<size_t>(i)] > 2) { p = i; break; }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (levels[static_cast<size_t>(i)] == levels[static_cast<size_t>(p)] - 1) { q = i; break; }
        for (int i = p; i < n; ++i)
            levels[static_cast<size_t>(i)] = levels[static_cast<size_t>(i - (p - q))];
    }
    return out;
}

} // namespace rcoal
