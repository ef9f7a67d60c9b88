#include "rcoal/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rcoal {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [1,64], got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    adj_[u] |= vertex_bit(v);
    adj_[v] |= vertex_bit(u);
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

int Graph::min_degree() const {
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    VertexSet seen = vertex_bit(0);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= adj_[v]; });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask();
}

bool Graph::is_complete() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) != n_ - 1) return false;
    return true;
}

VertexSet Graph::pendant_vertices() const {
    VertexSet p = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) p |= vertex_bit(v);
    return p;
}

namespace {

constexpr int kG6Bias = 63;

void check_body_byte(char c) {
    unsigned char b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw std::invalid_argument("graph6: byte outside printable range 63..126");
}

} // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
            throw std::invalid_argument("graph6: order exceeds 64");
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            check_body_byte(text[i]);
            n = (n << 6) | (static_cast<unsigned char>(text[i]) - kG6Bias);
        }
        pos = 4;
    } else {
        check_body_byte(text[0]);
        n = static_cast<unsigned char>(text[0]) - kG6Bias;
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " outside [1,64]");

    long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes) throw std::invalid_argument("graph6: truncated body");
    if (text.size() - pos > nbytes) throw std::invalid_argument("graph6: trailing garbage");

    Graph g = Graph::empty(static_cast<int>(n));
    long bitindex = 0;
    int col = 1, row = 0;
    for (size_t i = 0; i < nbytes; ++i) {
        check_body_byte(text[pos + i]);
        int group = static_cast<unsigned char>(text[pos + i]) - kG6Bias;
        for (int b = 5; b >= 0; --b, ++bitindex) {
            int bitval = (group >> b) & 1;
            if (bitindex < nbits) {
                if (bitval) g.add_edge(row, col);
                if (++row == col) { row = 0; ++col; }
            } else if (bitval) {
                throw std::invalid_argument("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    int n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Bias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
        out.push_back(static_cast<char>((n & 63) + kG6Bias));
    }
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Bias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kG6Bias));
    return out;
}

std::vector<Graph> read_graph6_lines(const std::string& text) {
    std::vector<Graph> graphs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

} // namespace rcoal
