// Ground-truth kernels: exact clique number, exact chromatic number,
// per-subset omega/perfection tables, bipartition and chordal coloring.
// All searches are deterministic; runaway searches hit an explicit node
// budget instead of ever returning an approximate answer.
#pragma once

#include <cstdlib>
#include <optional>
#include <variant>
#include <vector>

#include "chibound/graph_core.hpp"
#include "chibound/pattern_detect.hpp"

namespace chibound {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline std::uint64_t default_node_budget() {
    if (const char* env = std::getenv("CHIBOUND_NODE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return v;
    }
    return 100'000'000ULL;
}

// Expansion counter shared across one solver invocation.
struct Budget {
    std::uint64_t limit = default_node_budget();
    std::uint64_t used = 0;

    void tick(const char* where) {
        if (++used > limit)
            throw BudgetExceeded(std::string(where) + ": node budget exceeded (" +
                                 std::to_string(limit) + "), result inconclusive");
    }
};

// ---------------------------------------------------------------------------
// Exact maximum clique: branch and bound with a greedy-colouring bound.
// ---------------------------------------------------------------------------

struct CliqueResult {
    int omega = 0;
    VertexSet witness = 0;
};

namespace detail {
struct CliqueSearch {
    const Graph& g;
    Budget* budget;
    int best = 0;
    VertexSet best_clique = 0;

    void expand(VertexSet r, int rsize, VertexSet p) {
        if (budget) budget->tick("clique_number");
        if (p == 0) {
            if (rsize > best) {
                best = rsize;
                best_clique = r;
            }
            return;
        }
        // greedy colouring of the candidate set, ascending vertex order
        std::vector<int> verts = set_to_vector(p);
        std::vector<int> color(verts.size(), 0);
        std::vector<VertexSet> classes;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::size_t c = 0;
            while (c < classes.size() && (classes[c] & g.neighbors(verts[i])) != 0) ++c;
            if (c == classes.size()) classes.push_back(0);
            classes[c] |= vbit(verts[i]);
            color[i] = static_cast<int>(c) + 1;
        }
        // highest colour first; once the bound fails it fails for the rest
        std::vector<std::size_t> order(verts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] > color[b]; });
        VertexSet remaining = p;
        for (std::size_t idx : order) {
            int v = verts[idx];
            if (rsize + color[idx] <= best) return;
            expand(r | vbit(v), rsize + 1, remaining & g.neighbors(v));
            remaining &= ~vbit(v);
        }
    }
};
}  // namespace detail

inline CliqueResult clique_number_in(const Graph& g, VertexSet sub, Budget* budget = nullptr) {
    detail::CliqueSearch search{g, budget};
    search.expand(0, 0, sub);
    return {search.best, search.best_clique};
}

inline CliqueResult clique_number(const Graph& g, Budget* budget = nullptr) {
    return clique_number_in(g, g.vertices(), budget);
}

// ---------------------------------------------------------------------------
// Colourings. color[v] == -1 means unassigned (vertex outside the target set).
// ---------------------------------------------------------------------------

struct Coloring {
    std::vector<int> color;
    int palette_size = 0;
    int used = 0;
};

inline int count_distinct_colors(const Coloring& c) {
    std::vector<int> seen;
    for (int x : c.color)
        if (x >= 0 && std::find(seen.begin(), seen.end(), x) == seen.end()) seen.push_back(x);
    return static_cast<int>(seen.size());
}

// True when every vertex of `mask` has a colour and no edge inside `mask` is
// monochromatic.
inline bool coloring_proper_on(const Graph& g, const Coloring& c, VertexSet mask) {
    bool ok = true;
    for_each_vertex(mask, [&](int v) {
        if (c.color[static_cast<std::size_t>(v)] < 0) ok = false;
    });
    if (!ok) return false;
    for_each_vertex(mask, [&](int v) {
        for_each_vertex(g.neighbors(v) & mask, [&](int u) {
            if (u > v && c.color[static_cast<std::size_t>(u)] == c.color[static_cast<std::size_t>(v)])
                ok = false;
        });
    });
    return ok;
}

// ---------------------------------------------------------------------------
// Exact chromatic number: iterative deepening on k with a backtracking
// feasibility search. Order: maximum-clique vertices first (seeded with
// colours 0..omega-1), then the rest by descending degree, ties by index;
// colours are tried ascending and at most one colour beyond the current
// maximum, so results are deterministic.
// ---------------------------------------------------------------------------

struct ChiResult {
    int chi = 0;
    Coloring coloring;
};

namespace detail {
inline std::vector<int> chi_vertex_order(const Graph& g, VertexSet clique) {
    std::vector<int> order = set_to_vector(clique);
    std::vector<int> rest = set_to_vector(g.vertices() & ~clique);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    order.insert(order.end(), rest.begin(), rest.end());
    return order;
}

inline bool try_k_coloring(const Graph& g, const std::vector<int>& order, int seeded, int k,
                           std::vector<int>& color, Budget* budget) {
    if (seeded > k) return false;
    int n = g.order();
    std::function<bool(int, int)> place = [&](int pos, int max_used) -> bool {
        if (pos == n) return true;
        int v = order[static_cast<std::size_t>(pos)];
        int cap = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            if (budget) budget->tick("chromatic_number");
            bool clash = false;
            for_each_vertex(g.neighbors(v), [&](int u) {
                if (color[static_cast<std::size_t>(u)] == c) clash = true;
            });
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (place(pos + 1, std::max(max_used, c))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    std::fill(color.begin(), color.end(), -1);
    for (int i = 0; i < seeded; ++i) color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    return place(seeded, seeded - 1);
}
}  // namespace detail

inline ChiResult chromatic_number(const Graph& g, Budget* budget = nullptr) {
    int n = g.order();
    if (n == 0) return {0, Coloring{{}, 0, 0}};
    CliqueResult clique = clique_number(g, budget);
    std::vector<int> order = detail::chi_vertex_order(g, clique.witness);
    // greedy upper bound along the same order
    Coloring greedy;
    greedy.color.assign(static_cast<std::size_t>(n), -1);
    int ub = 0;
    for (int v : order) {
        int c = 0;
        for (bool clash = true; clash;) {
            clash = false;
            for_each_vertex(g.neighbors(v), [&](int u) {
                if (greedy.color[static_cast<std::size_t>(u)] == c) clash = true;
            });
            if (clash) ++c;
        }
        greedy.color[static_cast<std::size_t>(v)] = c;
        ub = std::max(ub, c + 1);
    }
    greedy.palette_size = ub;
    greedy.used = ub;
    std::vector<int> work(static_cast<std::size_t>(n), -1);
    for (int k = clique.omega; k < ub; ++k) {
        if (detail::try_k_coloring(g, order, clique.omega, k, work, budget)) {
            Coloring col;
            col.color = work;
            col.palette_size = k;
            col.used = count_distinct_colors(col);
            return {k, col};
        }
    }
    return {ub, greedy};
}

// ---------------------------------------------------------------------------
// Per-subset tables over all 2^n vertex subsets (n <= 13): clique number by
// the pivot recurrence omega(S) = max(omega(S \ v), 1 + omega(S & N(v))) with
// v the lowest vertex of S, and Berge perfection by heredity: S is perfect
// iff every S \ v is and S itself is not an odd hole or odd antihole.
// ---------------------------------------------------------------------------

struct SubsetTables {
    int n = 0;
    std::vector<std::uint8_t> omega;
    std::vector<std::uint8_t> perfect;
};

namespace detail {
inline bool connected_in(const Graph& g, VertexSet s) {
    if (s == 0) return true;
    VertexSet comp = vbit(lowest_vertex(s));
    VertexSet frontier = comp;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v) & s; });
        next &= ~comp;
        comp |= next;
        frontier = next;
    }
    return comp == s;
}

// S induces a cycle of odd length >= 5 in g.
inline bool is_odd_hole_set(const Graph& g, VertexSet s) {
    int size = set_size(s);
    if (size < 5 || size % 2 == 0) return false;
    bool all_deg2 = true;
    for_each_vertex(s, [&](int v) {
        if (set_size(g.neighbors(v) & s) != 2) all_deg2 = false;
    });
    return all_deg2 && connected_in(g, s);
}

inline bool is_odd_antihole_set(const Graph& g, VertexSet s) {
    int size = set_size(s);
    if (size < 5 || size % 2 == 0) return false;
    bool all_codeg2 = true;
    for_each_vertex(s, [&](int v) {
        if (size - 1 - set_size(g.neighbors(v) & s) != 2) all_codeg2 = false;
    });
    if (!all_codeg2) return false;
    return is_odd_hole_set(complement(g), s);
}
}  // namespace detail

inline SubsetTables subset_tables(const Graph& g) {
    int n = g.order();
    if (n > 13) throw GraphError("subset_tables supports n <= 13");
    SubsetTables t;
    t.n = n;
    std::size_t size = std::size_t{1} << n;
    t.omega.assign(size, 0);
    t.perfect.assign(size, 1);
    for (VertexSet s = 1; s < size; ++s) {
        int v = lowest_vertex(s);
        VertexSet without = s & ~vbit(v);
        t.omega[s] = std::max<std::uint8_t>(t.omega[without],
                                            static_cast<std::uint8_t>(1 + t.omega[s & g.neighbors(v)]));
        bool perfect = true;
        for_each_vertex(s, [&](int u) {
            if (!t.perfect[s & ~vbit(u)]) perfect = false;
        });
        if (perfect && (detail::is_odd_hole_set(g, s) || detail::is_odd_antihole_set(g, s)))
            perfect = false;
        t.perfect[s] = perfect ? 1 : 0;
    }
    return t;
}

// ---------------------------------------------------------------------------
// Bipartition: BFS 2-colouring per component, or a concrete odd cycle pulled
// out of the conflicting BFS tree edge.
// ---------------------------------------------------------------------------

struct Bipartition {
    VertexSet side0 = 0;
    VertexSet side1 = 0;
};

using OddCycleWitness = std::vector<int>;

inline std::variant<Bipartition, OddCycleWitness> two_color_bipartite_in(const Graph& g,
                                                                         VertexSet mask) {
    Bipartition parts;
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
    for (VertexSet comp : components_in(g, mask)) {
        int root = lowest_vertex(comp);
        depth[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue = {root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            int dv = depth[static_cast<std::size_t>(v)];
            std::optional<std::pair<int, int>> conflict;
            for_each_vertex(g.neighbors(v) & comp, [&](int u) {
                if (depth[static_cast<std::size_t>(u)] < 0) {
                    depth[static_cast<std::size_t>(u)] = dv + 1;
                    parent[static_cast<std::size_t>(u)] = v;
                    queue.push_back(u);
                } else if (!conflict && depth[static_cast<std::size_t>(u)] % 2 == dv % 2) {
                    conflict = std::make_pair(v, u);
                }
            });
            if (conflict) {
                // walk both endpoints up to the common ancestor; the closed
                // walk (u..lca..v,u) is a simple cycle of odd length
                auto chain = [&](int x) {
                    std::vector<int> path{x};
                    while (parent[static_cast<std::size_t>(path.back())] >= 0)
                        path.push_back(parent[static_cast<std::size_t>(path.back())]);
                    return path;
                };
                std::vector<int> a = chain(conflict->first), b = chain(conflict->second);
                while (a.size() > 1 && b.size() > 1 && a[a.size() - 2] == b[b.size() - 2]) {
                    a.pop_back();
                    b.pop_back();
                }
                OddCycleWitness cycle(a.begin(), a.end());
                for (auto it = b.rbegin() + 1; it != b.rend(); ++it) cycle.push_back(*it);
                return cycle;
            }
        }
        for_each_vertex(comp, [&](int v) {
            (depth[static_cast<std::size_t>(v)] % 2 == 0 ? parts.side0 : parts.side1) |= vbit(v);
        });
    }
    return parts;
}

inline std::variant<Bipartition, OddCycleWitness> two_color_bipartite(const Graph& g) {
    return two_color_bipartite_in(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Chordal colouring: greedy along the reverse perfect elimination ordering,
// which uses exactly omega colours. Non-chordal inputs get the hole back.
// ---------------------------------------------------------------------------

struct ChordalColoringResult {
    std::optional<Coloring> coloring;
    std::vector<int> hole;
};

inline ChordalColoringResult chordal_peo_coloring(const Graph& g) {
    ChordalResult ch = is_chordal(g);
    if (!ch.chordal) return {std::nullopt, ch.hole};
    Coloring col;
    col.color.assign(static_cast<std::size_t>(g.order()), -1);
    for (auto it = ch.peo.rbegin(); it != ch.peo.rend(); ++it) {
        int v = *it;
        int c = 0;
        for (bool clash = true; clash;) {
            clash = false;
            for_each_vertex(g.neighbors(v), [&](int u) {
                if (col.color[static_cast<std::size_t>(u)] == c) clash = true;
            });
            if (clash) ++c;
        }
        col.color[static_cast<std::size_t>(v)] = c;
        col.used = std::max(col.used, c + 1);
    }
    col.palette_size = col.used;
    return {col, {}};
}

}  // namespace chibound
