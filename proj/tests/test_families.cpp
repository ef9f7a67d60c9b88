#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "rcoal/coalition.hpp"
#include "rcoal/families.hpp"

using namespace rcoal;

namespace {

// Brute-force isomorphism with degree-refined backtracking; test oracle,
// independent of the generator's canonical form.
bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map, int v) {
    int n = a.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        bool used = false;
        for (int u = 0; u < v; ++u) used = used || map[static_cast<size_t>(u)] == w;
        if (used || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[static_cast<size_t>(u)], w)) ok = false;
        if (!ok) continue;
        map[static_cast<size_t>(v)] = w;
        if (extend_mapping(a, b, map, v + 1)) return true;
    }
    return false;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> map(static_cast<size_t>(a.order()), -1);
    return extend_mapping(a, b, map, 0);
}

} // namespace

TEST_CASE("family builders") {
    auto c5 = build_family({FamilyKind::Cycle, 5});
    CHECK(c5.order() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    auto k32 = build_family({FamilyKind::CompleteBipartite, 0, 3, 2});
    std::vector<int> degrees;
    for (int v = 0; v < 5; ++v) degrees.push_back(k32.degree(v));
    CHECK(degrees == std::vector<int>{2, 2, 2, 3, 3});

    auto s6 = build_family({FamilyKind::Star, 6});
    CHECK(s6.degree(0) == 5);
    for (int v = 1; v < 6; ++v) CHECK(s6.degree(v) == 1);

    CHECK(build_family({FamilyKind::Path, 4}).edge_count() == 3);
    CHECK(build_family({FamilyKind::Complete, 4}).is_complete());
    CHECK_THROWS(cycle_graph(2));
    CHECK_THROWS(complete_bipartite_graph(2, 3));
}

TEST_CASE("rc_cycle_expected") {
    CHECK(rc_cycle_expected(3) == 3);
    CHECK(rc_cycle_expected(5) == 3);
    CHECK(rc_cycle_expected(4) == 4);
    CHECK(rc_cycle_expected(8) == 4);
    CHECK(rc_cycle_expected(7) == 5);
    CHECK(rc_cycle_expected(11) == 5);
    CHECK(rc_cycle_expected(14) == 6);
    CHECK(rc_cycle_expected(100) == 6);
    CHECK_THROWS(rc_cycle_expected(2));
}

TEST_CASE("rc_path_expected") {
    CHECK(rc_path_expected(2) == 2);
    CHECK(rc_path_expected(4) == 2);
    CHECK(rc_path_expected(5) == 2);
    CHECK(rc_path_expected(6) == 3);
    CHECK(rc_path_expected(100) == 3);
    CHECK_THROWS(rc_path_expected(1));
}

TEST_CASE("cn_cycle_upper") {
    CHECK(cn_cycle_upper(3) == 6);
    CHECK(cn_cycle_upper(9) == 6);
    CHECK(cn_cycle_upper(100) == 6);
    CHECK_THROWS(cn_cycle_upper(2));
}

TEST_CASE("free tree counts match the known totals") {
    std::vector<long> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
    for (int n = 1; n <= 11; ++n)
        CHECK(static_cast<long>(free_trees(n).size()) == expected[static_cast<size_t>(n - 1)]);
    CHECK_THROWS(free_trees(0));
    CHECK_THROWS(free_trees(17));
}

TEST_CASE("n=4 trees are the path and the star") {
    auto trees = free_trees(4);
    REQUIRE(trees.size() == 2);
    bool has_path = false, has_star = false;
    for (const auto& t : trees) {
        if (isomorphic(t, path_graph(4))) has_path = true;
        if (isomorphic(t, star_graph(4))) has_star = true;
    }
    CHECK(has_path);
    CHECK(has_star);
}

TEST_CASE("generated trees are trees and pairwise non-isomorphic") {
    for (int n = 2; n <= 9; ++n) {
        auto trees = free_trees(n);
        for (const auto& t : trees) {
            CHECK(t.is_connected());
            CHECK(t.edge_count() == n - 1);
        }
        for (size_t i = 0; i < trees.size(); ++i)
            for (size_t j = i + 1; j < trees.size(); ++j)
                CHECK(!isomorphic(trees[i], trees[j]));
    }
}

TEST_CASE("cycle solver matches the closed form") {
    for (int n = 3; n <= 12; ++n) {
        SolverConfig config;
        config.upper_bound = cn_cycle_upper(n);
        CHECK(max_coalition_number(cycle_graph(n), Kind::Restrained, config).value ==
              rc_cycle_expected(n));
    }
}

TEST_CASE("path solver matches the closed form, certificate star-shaped") {
    for (int n = 2; n <= 10; ++n) {
        auto result = max_coalition_number(path_graph(n), Kind::Restrained);
        CHECK(result.value == rc_path_expected(n));
        auto cg = coalition_graph(path_graph(n), result.certificate->partition, Kind::Restrained);
        // S_2 = K_2 or S_3 = star on 3 vertices
        int k = cg.order();
        CHECK(cg.edge_count() == k - 1);
        int max_deg = cg.max_degree();
        CHECK(max_deg == k - 1);
    }
}

TEST_CASE("gamma_r bound sharp on complete bipartite graphs") {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 3}}) {
        auto g = complete_bipartite_graph(r, s);
        int gamma_r = restrained_domination_number(g).value();
        auto result = max_coalition_number(g, Kind::Restrained);
        CHECK(result.value == r + s - gamma_r + 2);
    }
}
