// Standalone generator of pairwise non-isomorphic graphs of small order,
// written as graph6 stream files (connected_n{N}.g6). Augments order n-1
// graphs by one vertex with every possible neighborhood and deduplicates
// through a canonical code (degree refinement + minimum adjacency code
// over color-respecting relabelings). Independent of the rcoal library's
// solvers; only the graph6 writer is shared.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "rcoal/graph.hpp"

namespace {

constexpr int kMaxN = 10;

using Adj = std::array<std::uint16_t, kMaxN>;

std::uint64_t packed_code(const Adj& adj, int n, const std::array<int, kMaxN>& pos) {
    // pos[v] = position of vertex v in the relabeling.
    std::uint64_t code = 0;
    int bit = 0;
    std::array<int, kMaxN> inv{};
    for (int v = 0; v < n; ++v) inv[static_cast<size_t>(pos[v])] = v;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((adj[static_cast<size_t>(inv[static_cast<size_t>(i)])] >> inv[static_cast<size_t>(j)]) & 1)
                code |= std::uint64_t{1} << bit;
    return code;
}

// Iterated neighbor-color refinement; returns a stable coloring with
// canonically ordered color ranks.
std::array<int, kMaxN> refine_colors(const Adj& adj, int n) {
    std::array<int, kMaxN> color{};
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = std::popcount(adj[static_cast<size_t>(v)]);
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.push_back(color[static_cast<size_t>(v)]);
            std::vector<int> neigh;
            for (int u = 0; u < n; ++u)
                if ((adj[static_cast<size_t>(v)] >> u) & 1) neigh.push_back(color[static_cast<size_t>(u)]);
            std::sort(neigh.begin(), neigh.end());
            key.insert(key.end(), neigh.begin(), neigh.end());
            keyed[static_cast<size_t>(v)] = {std::move(key), v};
        }
        auto sorted = keyed;
        std::sort(sorted.begin(), sorted.end());
        std::array<int, kMaxN> next{};
        int rank = 0;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[static_cast<size_t>(sorted[i].second)] = rank;
        }
        if (next == color) return color;
        color = next;
    }
}

void min_code_rec(const Adj& adj, int n, const std::vector<std::vector<int>>& cells,
                  size_t cell_index, std::array<int, kMaxN>& pos, int next_pos,
                  std::uint64_t& best) {
    if (cell_index == cells.size()) {
        best = std::min(best, packed_code(adj, n, pos));
        return;
    }
    std::vector<int> cell = cells[cell_index];
    std::sort(cell.begin(), cell.end());
    do {
        int p = next_pos;
        for (int v : cell) pos[static_cast<size_t>(v)] = p++;
        min_code_rec(adj, n, cells, cell_index + 1, pos, p, best);
    } while (std::next_permutation(cell.begin(), cell.end()));
}

std::uint64_t canonical_code(const Adj& adj, int n) {
    auto color = refine_colors(adj, n);
    int ncolors = 0;
    for (int v = 0; v < n; ++v) ncolors = std::max(ncolors, color[static_cast<size_t>(v)] + 1);
    std::vector<std::vector<int>> cells(static_cast<size_t>(ncolors));
    for (int v = 0; v < n; ++v) cells[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
    std::array<int, kMaxN> pos{};
    std::uint64_t best = ~std::uint64_t{0};
    min_code_rec(adj, n, cells, 0, pos, 0, best);
    return best;
}

bool connected(const Adj& adj, int n) {
    std::uint16_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint16_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1) next |= adj[static_cast<size_t>(v)];
        frontier = static_cast<std::uint16_t>(next & ~seen);
        seen |= next;
    }
    return seen == ((1u << n) - 1);
}

rcoal::Graph to_graph(const Adj& adj, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((adj[static_cast<size_t>(u)] >> v) & 1) edges.emplace_back(u, v);
    return rcoal::Graph::from_edges(n, edges);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate non-isomorphic connected graphs as graph6 files"};
    int max_n = 8;
    std::string out_dir = ".";
    app.add_option("--max-n", max_n, "largest order (<= 10)")->capture_default_str();
    app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    CLI11_PARSE(app, argc, argv);
    if (max_n < 1 || max_n > kMaxN) {
        std::cerr << "max-n must be in [1," << kMaxN << "]\n";
        return 2;
    }
    std::filesystem::create_directories(out_dir);

    std::vector<std::pair<std::uint64_t, Adj>> level; // canonical code + adjacency
    level.push_back({0, Adj{}});
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<std::uint64_t, Adj>> next;
        std::unordered_set<std::uint64_t> seen;
        for (const auto& [_, base] : level) {
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                Adj adj = base;
                adj[static_cast<size_t>(n - 1)] = static_cast<std::uint16_t>(nb);
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1) adj[static_cast<size_t>(v)] |= static_cast<std::uint16_t>(1u << (n - 1));
                std::uint64_t code = canonical_code(adj, n);
                if (seen.insert(code).second) next.push_back({code, adj});
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level = std::move(next);

        long conn = 0;
        auto path = std::filesystem::path(out_dir) / ("connected_n" + std::to_string(n) + ".g6");
        std::ofstream out(path, std::ios::binary);
        for (const auto& [code, adj] : level)
            if (connected(adj, n)) {
                out << rcoal::write_graph6(to_graph(adj, n)) << "\n";
                ++conn;
            }
        std::cerr << "n=" << n << ": " << level.size() << " graphs, " << conn
                  << " connected -> " << path.string() << "\n";
    }
    return 0;
}
