#include "rcoal/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rcoal {

const char* kind_name(Kind k) {
    return k == Kind::Dominating ? "dominating" : "restrained";
}

Kind kind_from_name(std::string_view name) {
    if (name == "dominating") return Kind::Dominating;
    if (name == "restrained") return Kind::Restrained;
    throw std::invalid_argument("unknown kind: " + std::string(name));
}

bool is_dominating(const Graph& g, VertexSet s) {
    VertexSet covered = 0;
    for_each_vertex(s, [&](int v) { covered |= g.closed_neighborhood(v); });
    return covered == g.full_mask();
}

bool is_restrained_dominating(const Graph& g, VertexSet s) {
    if (!is_dominating(g, s)) return false;
    VertexSet outside = g.full_mask() & ~s;
    bool ok = true;
    for_each_vertex(outside, [&](int v) {
        if ((g.neighbors(v) & outside) == 0) ok = false;
    });
    return ok;
}

bool qualifies(const Graph& g, VertexSet s, Kind kind) {
    return kind == Kind::Dominating ? is_dominating(g, s)
                                    : is_restrained_dominating(g, s);
}

namespace {

constexpr int kEnumGuard = 20;

void check_guard(const Graph& g) {
    if (g.order() > kEnumGuard)
        throw std::invalid_argument("subset enumeration limited to n <= 20");
}

// Next bitmask with the same popcount (Gosper's hack).
VertexSet next_same_size(VertexSet s) {
    VertexSet c = s & (~s + 1);
    VertexSet r = s + c;
    return (((r ^ s) >> 2) / c) | r;
}

// Smallest qualifying subset size, searched by ascending cardinality.
int minimum_qualifying_size(const Graph& g, Kind kind) {
    check_guard(g);
    int n = g.order();
    VertexSet full = g.full_mask();
    for (int size = 1; size <= n; ++size) {
        VertexSet s = (VertexSet{1} << size) - 1;
        while (true) {
            if (qualifies(g, s, kind)) return size;
            if (size == n) break;
            s = next_same_size(s);
            if (s > full) break;
        }
    }
    // S = V always dominates; unreachable for valid graphs.
    throw std::logic_error("no qualifying set found");
}

} // namespace

int domination_number(const Graph& g) {
    return minimum_qualifying_size(g, Kind::Dominating);
}

std::optional<int> restrained_domination_number(const Graph& g) {
    return minimum_qualifying_size(g, Kind::Restrained);
}

std::vector<VertexSet> all_qualifying_sets(const Graph& g, Kind kind) {
    check_guard(g);
    VertexSet full = g.full_mask();
    std::vector<VertexSet> out;
    for (VertexSet s = 1; s <= full; ++s)
        if (qualifies(g, s, kind)) out.push_back(s);
    std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        int sa = set_size(a), sb = set_size(b);
        return sa != sb ? sa < sb : a < b;
    });
    return out;
}

} // namespace rcoal
