#ifndef RCOAL_GRAPH_HPP
#define RCOAL_GRAPH_HPP

#include <cstdint>
#include <bit>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcoal {

// Vertex subset as a bitmask; the library caps graphs at 64 vertices so
// every set is one machine word.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

constexpr int set_size(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1; }

// Iterates set bits low to high.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

// Simple undirected graph, adjacency stored as one bitmask per vertex.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph empty(int n) { return Graph(n); }

    int order() const { return n_; }
    int edge_count() const;

    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const { return adj_[v] | vertex_bit(v); }
    bool has_edge(int u, int v) const { return contains(adj_[u], v); }

    int degree(int v) const { return set_size(adj_[v]); }
    int min_degree() const;
    int max_degree() const;

    bool is_connected() const;
    bool is_complete() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

    VertexSet full_mask() const {
        return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
    }
    // Vertices of degree 1.
    VertexSet pendant_vertices() const;

    void add_edge(int u, int v);

    bool operator==(const Graph& other) const = default;

private:
    explicit Graph(int n);

    int n_;
    std::vector<VertexSet> adj_;
};

// graph6 serialization (bit-exact standard layout: size field, then the
// upper triangle column-major, packed into 6-bit groups, each +63).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines skipped, ">>graph6<<" header tolerated.
std::vector<Graph> read_graph6_lines(const std::string& text);

} // namespace rcoal

#endif
