// Standalone verifiers for the structural claims behind the divisibility
// theorem and the levelling colorers: anticenter configurations around an odd
// antihole, and the inductive common-parent merge for cliques inside a level
// bucket. Claims are checked by direct enumeration; when one fails, the
// contradiction the argument would build (a hole, a forbidden pattern) is
// returned as the certificate.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chibound/exact_solvers.hpp"
#include "chibound/graph_core.hpp"
#include "chibound/pattern_detect.hpp"

namespace chibound {

// v sits outside X0 with no neighbour on it; X0 is an odd antihole listed in
// cyclic order (x0[i] ~ x0[j] iff |i-j| != 1 mod n); A is the full anticenter
// set of X0 and B its neighbourhood.
struct AnticenterConfig {
    int v = -1;
    std::vector<int> x0;
    VertexSet anticenters = 0;  // A
    VertexSet boundary = 0;     // B = N(A)
};

inline VertexSet compute_anticenters(const Graph& g, VertexSet x0_mask) {
    VertexSet a = 0;
    for_each_vertex(g.vertices() & ~x0_mask, [&](int u) {
        if ((g.neighbors(u) & x0_mask) == 0) a |= vbit(u);
    });
    return a;
}

inline AnticenterConfig make_anticenter_config(const Graph& g, int v, std::vector<int> x0) {
    AnticenterConfig cfg;
    cfg.v = v;
    cfg.x0 = std::move(x0);
    VertexSet x0_mask = vector_to_set(cfg.x0);
    cfg.anticenters = compute_anticenters(g, x0_mask);
    for_each_vertex(cfg.anticenters, [&](int a) { cfg.boundary |= g.neighbors(a); });
    cfg.boundary &= ~cfg.anticenters;
    return cfg;
}

// Validates the config invariants; returns an explanation naming the violated
// invariant and vertices, or empty when consistent.
inline std::string check_anticenter_config(const Graph& g, const AnticenterConfig& cfg) {
    int n = static_cast<int>(cfg.x0.size());
    if (n < 7 || n % 2 == 0) return "X0 must list an odd antihole on >= 7 vertices";
    VertexSet x0_mask = vector_to_set(cfg.x0);
    if (set_size(x0_mask) != n) return "X0 has repeated vertices";
    for (int v : cfg.x0)
        if (v < 0 || v >= g.order()) return "X0 vertex out of range";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int gap = j - i;
            bool want = !(gap == 1 || gap == n - 1);
            if (g.adjacent(cfg.x0[static_cast<std::size_t>(i)],
                           cfg.x0[static_cast<std::size_t>(j)]) != want)
                return "X0 adjacency violated between positions " + std::to_string(i) + " and " +
                       std::to_string(j) + " (vertices " +
                       std::to_string(cfg.x0[static_cast<std::size_t>(i)]) + "," +
                       std::to_string(cfg.x0[static_cast<std::size_t>(j)]) + ")";
        }
    if (cfg.v < 0 || cfg.v >= g.order() || contains(x0_mask, cfg.v))
        return "config vertex v must lie outside X0";
    if ((g.neighbors(cfg.v) & x0_mask) != 0)
        return "config vertex " + std::to_string(cfg.v) + " has a neighbour on X0";
    if (cfg.anticenters != compute_anticenters(g, x0_mask))
        return "A is not the full anticenter set of X0";
    VertexSet b = 0;
    for_each_vertex(cfg.anticenters, [&](int a) { b |= g.neighbors(a); });
    b &= ~cfg.anticenters;
    if (cfg.boundary != b) return "B is not N(A)";
    return {};
}

struct ClaimVerdict {
    bool holds = true;
    std::vector<int> witness;
    std::string note;
};

struct ClaimReport {
    bool vacuous = false;            // B empty: nothing to check
    ClaimVerdict nonneighbors;       // every u in B misses at most two X0 vertices,
                                     // and two misses are never adjacent
    ClaimVerdict boundary_cliques;   // N_B(a) is a clique for every anticenter a
    ClaimVerdict component_complete; // every component C of A is complete to N_B(C)

    bool all_hold() const {
        return nonneighbors.holds && boundary_cliques.holds && component_complete.holds;
    }
};

inline std::optional<Violation> check_thm1_class(const ClassRecord& rec) {
    auto fail = [](const std::string& check, std::string msg) {
        return Violation{"class_violation", check, std::move(msg), std::nullopt, std::nullopt,
                         false, std::nullopt, {}};
    };
    if (!rec.odd_hole_free) {
        Violation v = fail("odd_hole_free", "input has an odd hole");
        v.cycle = rec.odd_hole;
        return v;
    }
    if (!rec.hammer_free) {
        Violation v = fail("pattern:hammer", "input induces a hammer");
        v.embedding = rec.hammer;
        return v;
    }
    if (!rec.k23_free) {
        Violation v = fail("pattern:k23", "input induces K_{2,3}");
        v.embedding = rec.k23;
        return v;
    }
    return std::nullopt;
}

namespace detail {
// The three claims on a config assumed valid, host class assumed verified.
inline ClaimReport claims_on_config(const Graph& g, const AnticenterConfig& cfg) {
    ClaimReport report;
    VertexSet x0_mask = vector_to_set(cfg.x0);
    report.vacuous = cfg.boundary == 0;
    for_each_vertex(cfg.boundary, [&](int u) {
        if (!report.nonneighbors.holds) return;
        VertexSet misses = x0_mask & ~g.neighbors(u);
        if (set_size(misses) > 2) {
            report.nonneighbors.holds = false;
            report.nonneighbors.witness = {u};
            report.nonneighbors.note = "boundary vertex misses more than two X0 vertices";
            return;
        }
        if (set_size(misses) == 2) {
            std::vector<int> pair = set_to_vector(misses);
            if (g.adjacent(pair[0], pair[1])) {
                report.nonneighbors.holds = false;
                report.nonneighbors.witness = {u, pair[0], pair[1]};
                report.nonneighbors.note = "the two missed X0 vertices are adjacent";
            }
        }
    });
    for_each_vertex(cfg.anticenters, [&](int a) {
        if (!report.boundary_cliques.holds) return;
        VertexSet nb = g.neighbors(a) & cfg.boundary;
        for_each_vertex(nb, [&](int u) {
            if ((nb & ~g.closed_neighborhood(u)) != 0 && report.boundary_cliques.holds) {
                int w = lowest_vertex(nb & ~g.closed_neighborhood(u));
                report.boundary_cliques.holds = false;
                report.boundary_cliques.witness = {a, u, w};
                report.boundary_cliques.note = "anticenter with two nonadjacent boundary neighbours";
            }
        });
    });
    for (VertexSet comp : components_in(g, cfg.anticenters)) {
        if (!report.component_complete.holds) break;
        VertexSet nb = 0;
        for_each_vertex(comp, [&](int a) { nb |= g.neighbors(a); });
        nb &= cfg.boundary;
        for_each_vertex(comp, [&](int a) {
            if ((nb & ~g.neighbors(a)) != 0 && report.component_complete.holds) {
                int u = lowest_vertex(nb & ~g.neighbors(a));
                report.component_complete.holds = false;
                report.component_complete.witness = {a, u};
                report.component_complete.note =
                    "anticenter component member not adjacent to the component boundary";
            }
        });
    }
    return report;
}
}  // namespace detail

// Checks the three anticenter claims. Throws GraphError naming the violated
// invariant when the config is inconsistent; returns the class-violation
// certificate when the host graph is outside the theorem class.
inline std::variant<ClaimReport, Violation> verify_anticenter_claims(const Graph& g,
                                                                     const AnticenterConfig& cfg) {
    if (auto cls = check_thm1_class(classify_theorem_classes(g))) return *cls;
    if (std::string err = check_anticenter_config(g, cfg); !err.empty())
        throw GraphError("anticenter config invalid: " + err);
    return detail::claims_on_config(g, cfg);
}

// Every (v, odd antihole inside M(v)) pair, with its claim report. Empty when
// no configuration exists (distinct from "claims passed").
inline std::variant<std::vector<std::pair<AnticenterConfig, ClaimReport>>, Violation>
scan_antihole_configs(const Graph& g) {
    if (auto cls = check_thm1_class(classify_theorem_classes(g))) return *cls;
    std::vector<std::pair<AnticenterConfig, ClaimReport>> out;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet m = g.nonneighbors(v);
        InducedSubgraph sub = induced_subgraph(g, m);
        for (const std::vector<int>& hole :
             enumerate_holes(complement(sub.graph), 4, Parity::Odd)) {
            std::vector<int> x0;
            x0.reserve(hole.size());
            for (int x : hole) x0.push_back(sub.to_host[static_cast<std::size_t>(x)]);
            AnticenterConfig cfg = make_anticenter_config(g, v, std::move(x0));
            if (std::string err = check_anticenter_config(g, cfg); !err.empty())
                throw std::logic_error("scan built an invalid config: " + err);
            ClaimReport report = detail::claims_on_config(g, cfg);
            out.emplace_back(std::move(cfg), std::move(report));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Common parents. For a clique C inside one bucket of level k (all members
// carrying colour-i parents in L_{k-1}), some colour-i parent is adjacent to
// all of C. Found by the inductive merge: combine the common parents of the
// prefix and suffix sub-cliques; when neither extends, the two parents plus a
// path through the lower levels close a hole of length >= 5, which is exactly
// the certificate returned.
// ---------------------------------------------------------------------------

struct CommonParentResult {
    int parent = -1;
    std::optional<Violation> failure;

    bool ok() const { return parent >= 0; }
};

inline CommonParentResult find_common_parent(const Graph& g, const LevelStructure& ls, int k,
                                             const std::vector<int>& level_coloring,
                                             std::span<const int> clique, int color_index) {
    if (k < 1 || k > ls.top()) throw GraphError("bucket level out of range");
    if (clique.empty()) throw GraphError("empty clique");
    VertexSet prev = ls.levels[static_cast<std::size_t>(k - 1)];
    VertexSet cmask = vector_to_set(clique);
    if (set_size(cmask) != static_cast<int>(clique.size()))
        throw GraphError("clique has repeated vertices");
    for (int c : clique) {
        if (!contains(ls.levels[static_cast<std::size_t>(k)], c))
            throw GraphError("clique vertex " + std::to_string(c) + " not on level " +
                             std::to_string(k));
        if ((cmask & ~g.closed_neighborhood(c)) != 0)
            throw GraphError("clique vertices " + std::to_string(c) + " and " +
                             std::to_string(lowest_vertex(cmask & ~g.closed_neighborhood(c))) +
                             " are not adjacent");
    }
    auto colored_parents = [&](int c) {
        VertexSet out = 0;
        for_each_vertex(g.neighbors(c) & prev, [&](int w) {
            if (level_coloring[static_cast<std::size_t>(w)] == color_index) out |= vbit(w);
        });
        return out;
    };
    for (int c : clique)
        if (colored_parents(c) == 0)
            throw GraphError("clique vertex " + std::to_string(c) + " has no parent of colour " +
                             std::to_string(color_index));

    int t = static_cast<int>(clique.size());
    std::vector<std::vector<int>> memo(static_cast<std::size_t>(t),
                                       std::vector<int>(static_cast<std::size_t>(t), -2));
    std::optional<Violation> failure;
    // common parent of clique[l..r], or -1 when the merge broke (failure set)
    std::function<int(int, int)> merge = [&](int l, int r) -> int {
        int& slot = memo[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
        if (slot != -2) return slot;
        if (l == r) return slot = lowest_vertex(colored_parents(clique[static_cast<std::size_t>(l)]));
        int p = merge(l, r - 1);
        if (p < 0) return slot = -1;
        int q = merge(l + 1, r);
        if (q < 0) return slot = -1;
        int first = clique[static_cast<std::size_t>(l)];
        int last = clique[static_cast<std::size_t>(r)];
        if (g.adjacent(p, last)) return slot = p;
        if (g.adjacent(q, first)) return slot = q;
        // neither extends: first - last - q - Q - p - first closes a hole,
        // with Q a shortest p..q path through the levels below k-1
        VertexSet low = 0;
        for (int i = 0; i + 1 < k; ++i) low |= ls.levels[static_cast<std::size_t>(i)];
        VertexSet allowed = low | vbit(p) | vbit(q);
        std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
        parent[static_cast<std::size_t>(p)] = -1;
        std::vector<int> queue{p};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for_each_vertex(g.neighbors(queue[qi]) & allowed, [&](int w) {
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = queue[qi];
                    queue.push_back(w);
                }
            });
        }
        Violation v{"class_violation", "common_parent_merge",
                    "no common parent; the merge closes a hole of length >= 5", std::nullopt,
                    std::nullopt, false, std::nullopt, {p, q, first, last}};
        if (parent[static_cast<std::size_t>(q)] != -2) {
            std::vector<int> path;
            for (int u = q; u != -1; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
            // hole: first, last, q, ..., p (closing edge p-first)
            std::vector<int> hole{first, last};
            hole.insert(hole.end(), path.begin(), path.end());
            v.cycle = hole;
        }
        if (!failure) failure = v;
        return slot = -1;
    };
    CommonParentResult res;
    res.parent = merge(0, t - 1);
    if (res.parent < 0) res.failure = failure;
    return res;
}

}  // namespace chibound
