#include "rcoal/coalition.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

namespace rcoal {

namespace {

void validate_assignment(int n, const std::vector<int>& assignment) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("partition: n outside [1,64]");
    if (static_cast<int>(assignment.size()) != n)
        throw std::invalid_argument("partition: assignment length != n");
    int k = 0;
    for (int c : assignment) {
        if (c < 0 || c >= n)
            throw std::invalid_argument("partition: class index out of range");
        k = std::max(k, c + 1);
    }
    std::vector<char> seen(static_cast<size_t>(k), 0);
    for (int c : assignment) seen[static_cast<size_t>(c)] = 1;
    for (int c = 0; c < k; ++c)
        if (!seen[static_cast<size_t>(c)])
            throw std::invalid_argument("partition: class indices not dense (empty class " +
                                        std::to_string(c) + ")");
}

} // namespace

Partition Partition::from_assignment(int n, std::vector<int> assignment) {
    validate_assignment(n, assignment);
    return Partition{n, std::move(assignment)};
}

int Partition::class_count() const {
    int k = 0;
    for (int c : assignment) k = std::max(k, c + 1);
    return k;
}

std::vector<VertexSet> Partition::classes() const {
    std::vector<VertexSet> out(static_cast<size_t>(class_count()), 0);
    for (int v = 0; v < n; ++v) out[static_cast<size_t>(assignment[v])] |= vertex_bit(v);
    return out;
}

bool is_coalition(const Graph& g, VertexSet a, VertexSet b, Kind kind) {
    if (a == 0 || b == 0) throw std::invalid_argument("coalition operands must be nonempty");
    if (a & b) throw std::invalid_argument("coalition operands must be disjoint");
    return !qualifies(g, a, kind) && !qualifies(g, b, kind) &&
           qualifies(g, a | b, kind);
}

std::variant<CoalitionCertificate, Violation>
verify_partition(const Graph& g, const Partition& pi, Kind kind) {
    validate_assignment(g.order(), pi.assignment);
    if (pi.n != g.order())
        throw std::invalid_argument("partition order does not match graph order");
    auto classes = pi.classes();
    int k = static_cast<int>(classes.size());
    std::vector<bool> qual(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) qual[static_cast<size_t>(i)] = qualifies(g, classes[static_cast<size_t>(i)], kind);

    CoalitionCertificate cert;
    cert.partition = pi;
    cert.kind = kind;
    cert.justification.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        if (qual[static_cast<size_t>(i)]) {
            if (set_size(classes[static_cast<size_t>(i)]) != 1)
                return Violation{i, "qualifying class must be a singleton"};
            cert.justification[static_cast<size_t>(i)] = Justification{true, -1};
            continue;
        }
        int partner = -1;
        for (int j = 0; j < k && partner < 0; ++j) {
            if (j == i || qual[static_cast<size_t>(j)]) continue;
            if (qualifies(g, classes[static_cast<size_t>(i)] | classes[static_cast<size_t>(j)], kind)) partner = j;
        }
        if (partner < 0)
            return Violation{i, "non-qualifying class is in no coalition"};
        cert.justification[static_cast<size_t>(i)] = Justification{false, partner};
    }
    return cert;
}

Graph coalition_graph(const Graph& g, const Partition& pi, Kind kind) {
    auto classes = pi.classes();
    int k = static_cast<int>(classes.size());
    Graph cg = Graph::empty(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (is_coalition(g, classes[static_cast<size_t>(i)], classes[static_cast<size_t>(j)], kind))
                cg.add_edge(i, j);
    return cg;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchContext {
    const Graph& g;
    Kind kind;
    const SolverConfig& config;
    int k = 0;

    VertexSet full = 0;
    VertexSet pendants = 0;
    bool tree = false;
    // Closed-neighborhood union / plain union of vertices >= v.
    std::vector<VertexSet> suffix_dom;
    std::vector<VertexSet> suffix_mask;

    std::vector<int> assignment;
    std::vector<VertexSet> class_mask;
    std::vector<VertexSet> class_dom;
    std::vector<int> class_size;
    std::vector<char> singleton_qualifies;
    int used = 0;
    int big_dominating_classes = 0; // size >= 2 and dominating
    int pendant_class = -1;

    SearchStats* stats;
    std::uint64_t node_limit = 0;
    Clock::time_point deadline{};
    bool has_deadline = false;
    bool out_of_budget = false;

    std::optional<CoalitionCertificate> found;

    SearchContext(const Graph& graph, Kind kd, const SolverConfig& cfg, SearchStats* st)
        : g(graph), kind(kd), config(cfg), stats(st) {
        int n = g.order();
        full = g.full_mask();
        pendants = g.pendant_vertices();
        tree = g.is_tree();
        suffix_dom.assign(static_cast<size_t>(n) + 1, 0);
        suffix_mask.assign(static_cast<size_t>(n) + 1, 0);
        for (int v = n - 1; v >= 0; --v) {
            suffix_dom[static_cast<size_t>(v)] = suffix_dom[static_cast<size_t>(v) + 1] | g.closed_neighborhood(v);
            suffix_mask[static_cast<size_t>(v)] = suffix_mask[static_cast<size_t>(v) + 1] | vertex_bit(v);
        }
        assignment.assign(static_cast<size_t>(n), -1);
        class_mask.assign(static_cast<size_t>(n), 0);
        class_dom.assign(static_cast<size_t>(n), 0);
        class_size.assign(static_cast<size_t>(n), 0);
        singleton_qualifies.assign(static_cast<size_t>(n), 0);
    }

    bool budget_ok() {
        if (out_of_budget) return false;
        if (node_limit && stats->nodes > node_limit) { out_of_budget = true; return false; }
        if (has_deadline && (stats->nodes & 1023) == 0 && Clock::now() > deadline) {
            out_of_budget = true;
            return false;
        }
        return true;
    }

    // A class can still end up in a coalition: some current or future
    // partner's eventual union might qualify. Only monotone necessary
    // conditions are checked (domination; pendant containment for the
    // restrained kind, since every RD-set contains every pendant vertex).
    bool partner_possible(int i, VertexSet unassigned_dom, VertexSet unassigned_mask) const {
        for (int j = 0; j < used; ++j) {
            if (j == i) continue;
            if ((class_dom[static_cast<size_t>(i)] | class_dom[static_cast<size_t>(j)] | unassigned_dom) != full) continue;
            if (kind == Kind::Restrained &&
                (pendants & ~(class_mask[static_cast<size_t>(i)] | class_mask[static_cast<size_t>(j)] | unassigned_mask)) != 0)
                continue;
            return true;
        }
        if (used < k) {
            if ((class_dom[static_cast<size_t>(i)] | unassigned_dom) != full) return false;
            if (kind == Kind::Restrained &&
                (pendants & ~(class_mask[static_cast<size_t>(i)] | unassigned_mask)) != 0)
                return false;
            return true;
        }
        return false;
    }

    bool at_leaf() {
        auto pi = Partition::from_assignment(g.order(), assignment);
        auto verdict = verify_partition(g, pi, kind);
        if (auto* cert = std::get_if<CoalitionCertificate>(&verdict)) {
            found = std::move(*cert);
            return true;
        }
        return false;
    }

    bool search(int v) {
        int n = g.order();
        if (v == n) return at_leaf();
        ++stats->nodes;
        if (!budget_ok()) return false;

        int remaining_after = n - v - 1;
        bool pendant_forced = config.prune_pendant_merge && kind == Kind::Restrained &&
                              tree && k >= 3 && contains(pendants, v) && pendant_class >= 0;

        int last_choice = used < k ? used : used - 1;
        for (int c = 0; c <= last_choice; ++c) {
            bool opens = c == used;
            if (remaining_after < k - used - (opens ? 1 : 0)) {
                if (opens) break;
                continue;
            }
            if (pendant_forced && c != pendant_class) {
                ++stats->prunes_pendant;
                continue;
            }

            size_t ci = static_cast<size_t>(c);
            VertexSet old_dom = class_dom[ci];
            char old_singleton_q = singleton_qualifies[ci];
            bool was_big_dom = class_size[ci] >= 2 && class_dom[ci] == full;

            assignment[static_cast<size_t>(v)] = c;
            class_mask[ci] |= vertex_bit(v);
            class_dom[ci] |= g.closed_neighborhood(v);
            ++class_size[ci];
            if (opens) ++used;
            bool set_pendant_class = false;
            if (kind == Kind::Restrained && tree && k >= 3 && contains(pendants, v) &&
                pendant_class < 0) {
                pendant_class = c;
                set_pendant_class = true;
            }
            if (opens && class_size[ci] == 1)
                singleton_qualifies[ci] = qualifies(g, class_mask[ci], kind) ? 1 : 0;

            bool is_big_dom = class_size[ci] >= 2 && class_dom[ci] == full;
            if (is_big_dom && !was_big_dom) ++big_dominating_classes;

            bool pruned = false;
            if (config.prune_qualifying_class && is_big_dom) {
                // Dominating kind: a dominating class of size >= 2 stays
                // dominating (monotone) and can never be a singleton, so the
                // branch is dead. Restrained kind: such a class must end as
                // dominating-but-not-RD; a partition with two of those has
                // cardinality 2 (Theorem-style case analysis), so for
                // k >= 3 at most one is allowed.
                if (kind == Kind::Dominating ||
                    (k != 2 && big_dominating_classes >= 2)) {
                    ++stats->prunes_qualifying;
                    pruned = true;
                }
            }
            if (!pruned && config.prune_partner_feasibility) {
                VertexSet udom = suffix_dom[static_cast<size_t>(v) + 1];
                VertexSet umask = suffix_mask[static_cast<size_t>(v) + 1];
                for (int i = 0; i < used; ++i) {
                    size_t ii = static_cast<size_t>(i);
                    if (class_size[ii] == 1 && singleton_qualifies[ii]) continue;
                    if (!partner_possible(i, udom, umask)) {
                        ++stats->prunes_partner;
                        pruned = true;
                        break;
                    }
                }
            }

            bool done = !pruned && search(v + 1);

            if (is_big_dom && !was_big_dom) --big_dominating_classes;
            if (set_pendant_class) pendant_class = -1;
            if (opens) --used;
            --class_size[ci];
            class_mask[ci] &= ~vertex_bit(v);
            class_dom[ci] = old_dom;
            singleton_qualifies[ci] = old_singleton_q;
            assignment[static_cast<size_t>(v)] = -1;

            if (done) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

std::optional<CoalitionCertificate>
run_exact_k(const Graph& g, int k, Kind kind, const SolverConfig& config,
            SearchStats& stats, std::uint64_t node_limit,
            std::optional<Clock::time_point> deadline, bool& out_of_budget) {
    SearchContext ctx(g, kind, config, &stats);
    ctx.k = k;
    ctx.node_limit = node_limit;
    if (deadline) {
        ctx.deadline = *deadline;
        ctx.has_deadline = true;
    }
    ctx.search(0);
    out_of_budget = ctx.out_of_budget;
    return ctx.found;
}

} // namespace

std::optional<CoalitionCertificate>
find_partition_of_size(const Graph& g, int k, Kind kind,
                       const SolverConfig& config, SearchStats* stats) {
    if (k < 1 || k > g.order())
        throw std::invalid_argument("partition size must be in [1,n]");
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (config.time_budget_seconds > 0)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(config.time_budget_seconds));
    bool out_of_budget = false;
    auto found = run_exact_k(g, k, kind, config, st, config.node_budget, deadline, out_of_budget);
    st.seconds += std::chrono::duration<double>(Clock::now() - start).count();
    if (out_of_budget)
        throw std::runtime_error("solver budget exceeded in find_partition_of_size");
    return found;
}

SolveResult max_coalition_number(const Graph& g, Kind kind, const SolverConfig& config) {
    int n = g.order();
    int max_deg = g.max_degree();
    int ub = n;
    ub = std::min(ub, (max_deg + 3) * (max_deg + 3) / 4);
    if (kind == Kind::Restrained) {
        if (g.min_degree() == 1) ub = std::min(ub, max_deg + 2);
        if (n >= 2 && n <= 20) {
            int gr = restrained_domination_number(g).value();
            if (gr >= 2) ub = std::min(ub, n - gr + 2);
        }
    }
    if (config.upper_bound > 0) ub = std::min(ub, config.upper_bound);
    ub = std::max(ub, 1);

    SolveResult result;
    auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (config.time_budget_seconds > 0)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(config.time_budget_seconds));
    for (int k = ub; k >= 1; --k) {
        bool out_of_budget = false;
        auto found = run_exact_k(g, k, kind, config, result.stats, config.node_budget,
                                 deadline, out_of_budget);
        if (out_of_budget) {
            result.budget_exceeded = true;
            break;
        }
        if (found) {
            result.feasible = true;
            result.value = k;
            result.certificate = std::move(found);
            break;
        }
    }
    result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

int naive_max_oracle(const Graph& g, Kind kind) {
    int n = g.order();
    if (n > 10) throw std::invalid_argument("naive oracle limited to n <= 10");

    // Validity check written directly against the predicates, independent
    // of the branch-and-bound path.
    auto valid = [&](const std::vector<int>& assignment, int k) {
        std::vector<VertexSet> classes(static_cast<size_t>(k), 0);
        for (int v = 0; v < n; ++v) classes[static_cast<size_t>(assignment[static_cast<size_t>(v)])] |= vertex_bit(v);
        std::vector<bool> qual(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) qual[static_cast<size_t>(i)] = qualifies(g, classes[static_cast<size_t>(i)], kind);
        for (int i = 0; i < k; ++i) {
            if (qual[static_cast<size_t>(i)]) {
                if (set_size(classes[static_cast<size_t>(i)]) != 1) return false;
                continue;
            }
            bool partnered = false;
            for (int j = 0; j < k && !partnered; ++j) {
                if (j == i || qual[static_cast<size_t>(j)]) continue;
                if (qualifies(g, classes[static_cast<size_t>(i)] | classes[static_cast<size_t>(j)], kind)) partnered = true;
            }
            if (!partnered) return false;
        }
        return true;
    };

    int best = 0;
    std::vector<int> a(static_cast<size_t>(n), 0);
    // Restricted-growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
    auto rec = [&](auto&& self, int i, int maxc) -> void {
        if (i == n) {
            int k = maxc + 1;
            if (k > best && valid(a, k)) best = k;
            return;
        }
        for (int c = 0; c <= maxc + 1; ++c) {
            a[static_cast<size_t>(i)] = c;
            self(self, i + 1, std::max(maxc, c));
        }
    };
    rec(rec, 1, 0);
    return best;
}

std::string certificate_to_json(const CoalitionCertificate& cert) {
    nlohmann::ordered_json j;
    j["n"] = cert.partition.n;
    j["kind"] = kind_name(cert.kind);
    j["value"] = cert.partition.class_count();
    j["assignment"] = cert.partition.assignment;
    auto just = nlohmann::ordered_json::array();
    for (size_t i = 0; i < cert.justification.size(); ++i) {
        nlohmann::ordered_json item;
        item["class"] = i;
        item["self"] = cert.justification[i].self_sufficient;
        if (cert.justification[i].self_sufficient)
            item["partner"] = nullptr;
        else
            item["partner"] = cert.justification[i].partner;
        just.push_back(item);
    }
    j["justification"] = just;
    return j.dump();
}

} // namespace rcoal
