// Induced-subgraph machinery: the small-graph catalog, embedding search,
// hole enumeration, chordality, Berge recognition and the class predicates
// the colorers and campaigns filter on.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chibound/graph_core.hpp"

namespace chibound {

struct Pattern {
    std::string name;
    Graph model;
};

// Injective pattern-vertex -> host-vertex assignment; induced (pattern edge
// iff host edge between images).
struct Embedding {
    std::string pattern;
    std::vector<int> map;
};

// Certificate attached to refused inputs, failed structural assertions and
// aborted solver runs across the detection, colouring and lemma modules.
struct Violation {
    std::string kind;     // "class_violation" | "internal_assertion" | "solver_budget"
    std::string check;    // which guard fired
    std::string message;
    std::optional<Embedding> embedding;
    std::optional<std::vector<int>> cycle;
    bool cycle_is_antihole = false;
    std::optional<VertexSet> subset;
    std::vector<int> vertices;
};

inline Graph path_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return build_graph(k, e);
}

inline Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return build_graph(k, e);
}

inline Graph complete_graph(int l) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) e.emplace_back(i, j);
    return build_graph(l, e);
}

inline Graph complete_bipartite(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return build_graph(p + q, e);
}

// New vertex adjacent to exactly `at`.
inline Graph with_pendant(const Graph& g, int at) {
    auto e = g.edges();
    e.emplace_back(at, g.order());
    return build_graph(g.order() + 1, e);
}

namespace detail {
inline int lowest_vertex_of_degree(const Graph& g, int d) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d) return v;
    throw GraphError("no vertex of requested degree");
}

inline void assert_counts(const Pattern& p, int n, std::size_t m) {
    if (p.model.order() != n || p.model.edge_count() != m)
        throw std::logic_error("pattern catalog entry '" + p.name + "' has wrong size");
}
}  // namespace detail

// The named small graphs. Composite entries come from the join/union
// constructors; every entry is asserted against its vertex/edge counts.
inline const std::vector<Pattern>& pattern_catalog() {
    static const std::vector<Pattern> catalog = [] {
        std::vector<Pattern> c;
        Graph k1 = complete_graph(1);
        c.push_back({"p3", path_graph(3)});
        c.push_back({"p4", path_graph(4)});
        c.push_back({"c4", cycle_graph(4)});
        c.push_back({"c5", cycle_graph(5)});
        c.push_back({"c6", cycle_graph(6)});
        c.push_back({"c7", cycle_graph(7)});
        c.push_back({"k3", complete_graph(3)});
        c.push_back({"claw", complete_bipartite(1, 3)});
        c.push_back({"k23", complete_bipartite(2, 3)});
        // triangle with a two-edge path hanging off one triangle vertex
        c.push_back({"hammer", build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}})});
        // claw with one edge subdivided
        c.push_back({"fork", build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}})});
        Graph k1p3 = graph_join(k1, path_graph(3));
        c.push_back({"cochair", with_pendant(k1p3, detail::lowest_vertex_of_degree(k1p3, 2))});
        c.push_back({"dart", with_pendant(k1p3, detail::lowest_vertex_of_degree(k1p3, 3))});
        // triangle with two disjoint pendant edges
        c.push_back({"bull", build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}})});
        // C_4 with one pendant edge
        c.push_back({"banner", with_pendant(cycle_graph(4), 0)});
        c.push_back({"wheel4", graph_join(k1, cycle_graph(4))});
        c.push_back({"k1uk3", graph_union(k1, complete_graph(3))});
        c.push_back({"apexk1uk3", graph_join(k1, graph_union(k1, complete_graph(3)))});
        static const std::map<std::string, std::pair<int, std::size_t>> expected = {
            {"p3", {3, 2}},     {"p4", {4, 3}},      {"c4", {4, 4}},     {"c5", {5, 5}},
            {"c6", {6, 6}},     {"c7", {7, 7}},      {"k3", {3, 3}},     {"claw", {4, 3}},
            {"k23", {5, 6}},    {"hammer", {5, 5}},  {"fork", {5, 4}},   {"cochair", {5, 6}},
            {"dart", {5, 6}},   {"bull", {5, 5}},    {"banner", {5, 5}}, {"wheel4", {5, 8}},
            {"k1uk3", {4, 3}},  {"apexk1uk3", {5, 7}},
        };
        for (const Pattern& p : c) detail::assert_counts(p, expected.at(p.name).first, expected.at(p.name).second);
        return c;
    }();
    return catalog;
}

// Catalog lookup plus the generic c<k>/p<k>/K_l families. Throws on unknown
// names; "oddballoon" is handled by find_odd_balloon, not here.
inline Pattern pattern_by_name(const std::string& name) {
    for (const Pattern& p : pattern_catalog())
        if (p.name == name) return p;
    auto family = [&](char prefix) -> std::optional<int> {
        if (name.size() < 2 || name[0] != prefix) return std::nullopt;
        int k = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            k = k * 10 + (name[i] - '0');
        }
        return k;
    };
    if (auto k = family('p'); k && *k >= 1) return {name, path_graph(*k)};
    if (auto k = family('c'); k && *k >= 3) return {name, cycle_graph(*k)};
    if (auto k = family('k'); k && *k >= 1) return {name, complete_graph(*k)};
    throw GraphError("unknown pattern name: " + name);
}

inline bool validate_embedding(const Graph& g, const Graph& model, std::span<const int> map) {
    if (static_cast<int>(map.size()) != model.order()) return false;
    VertexSet used = 0;
    for (int h : map) {
        if (h < 0 || h >= g.order() || contains(used, h)) return false;
        used |= vbit(h);
    }
    for (int i = 0; i < model.order(); ++i)
        for (int j = i + 1; j < model.order(); ++j)
            if (model.adjacent(i, j) != g.adjacent(map[static_cast<std::size_t>(i)],
                                                   map[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

// First induced embedding in lexicographic order over host tuples, if any.
inline std::optional<Embedding> find_induced_pattern(const Graph& g, const Pattern& p) {
    const Graph& m = p.model;
    int k = m.order();
    if (k > g.order()) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(k), -1);
    VertexSet used = 0;
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        for (int h = 0; h < g.order(); ++h) {
            if (contains(used, h)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = m.adjacent(j, i) == g.adjacent(map[static_cast<std::size_t>(j)], h);
            if (!ok) continue;
            map[static_cast<std::size_t>(i)] = h;
            used |= vbit(h);
            if (place(i + 1)) return true;
            used &= ~vbit(h);
        }
        return false;
    };
    if (!place(0)) return std::nullopt;
    return Embedding{p.name, map};
}

inline std::optional<Embedding> find_induced_pattern(const Graph& g, const std::string& name) {
    return find_induced_pattern(g, pattern_by_name(name));
}

// ---------------------------------------------------------------------------
// Hole enumeration. A hole is an induced cycle of length >= 4; each one is
// reported once, canonically: smallest vertex first, then its smaller cycle
// neighbor. Backtracking over chordless paths rooted at the smallest vertex.
// ---------------------------------------------------------------------------

enum class Parity { Any, Odd, Even };

inline bool parity_matches(Parity p, int len) {
    switch (p) {
        case Parity::Any: return true;
        case Parity::Odd: return len % 2 == 1;
        case Parity::Even: return len % 2 == 0;
    }
    return false;
}

namespace detail {
// emit(cycle) returns false to stop the search early.
template <typename Emit>
bool holes_walk(const Graph& g, int min_len, Parity parity, Emit&& emit) {
    if (min_len < 4) throw GraphError("hole length must be at least 4");
    int n = g.order();
    std::vector<int> path;
    path.reserve(static_cast<std::size_t>(n));
    std::function<bool(int, VertexSet)> extend = [&](int s, VertexSet used) -> bool {
        int u = path.back();
        VertexSet mid = used & ~vbit(s) & ~vbit(u);
        bool keep_going = true;
        for_each_vertex(g.neighbors(u) & ~used, [&](int w) {
            if (!keep_going || w <= s) return;
            if ((g.neighbors(w) & mid) != 0) return;  // chord to an interior vertex
            if (g.adjacent(w, s)) {
                int len = static_cast<int>(path.size()) + 1;
                if (len >= min_len && parity_matches(parity, len) && path[1] < w) {
                    path.push_back(w);
                    keep_going = emit(path);
                    path.pop_back();
                }
                return;  // an s-neighbor cannot be interior
            }
            path.push_back(w);
            keep_going = extend(s, used | vbit(w));
            path.pop_back();
        });
        return keep_going;
    };
    for (int s = 0; s < n; ++s) {
        bool keep_going = true;
        for_each_vertex(g.neighbors(s), [&](int a) {
            if (!keep_going || a <= s) return;
            path.assign({s, a});
            keep_going = extend(s, vbit(s) | vbit(a));
        });
        if (!keep_going) return false;
    }
    return true;
}
}  // namespace detail

inline std::vector<std::vector<int>> enumerate_holes(const Graph& g, int min_len, Parity parity) {
    std::vector<std::vector<int>> out;
    detail::holes_walk(g, min_len, parity, [&](const std::vector<int>& cycle) {
        out.push_back(cycle);
        return true;
    });
    return out;
}

inline std::optional<std::vector<int>> find_first_hole(const Graph& g, int min_len, Parity parity) {
    std::optional<std::vector<int>> found;
    detail::holes_walk(g, min_len, parity, [&](const std::vector<int>& cycle) {
        found = cycle;
        return false;
    });
    return found;
}

// ---------------------------------------------------------------------------
// Chordality via maximum-cardinality search. On success the returned order is
// a perfect elimination ordering (peo[0] eliminated first); on failure a
// concrete hole is attached.
// ---------------------------------------------------------------------------

struct ChordalResult {
    bool chordal = false;
    std::vector<int> peo;
    std::vector<int> hole;
};

inline ChordalResult is_chordal(const Graph& g) {
    int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit;
    visit.reserve(static_cast<std::size_t>(n));
    VertexSet unvisited = g.vertices();
    for (int step = 0; step < n; ++step) {
        int pick = -1, best = -1;
        for_each_vertex(unvisited, [&](int v) {
            if (weight[static_cast<std::size_t>(v)] > best) {
                best = weight[static_cast<std::size_t>(v)];
                pick = v;
            }
        });
        visit.push_back(pick);
        unvisited &= ~vbit(pick);
        for_each_vertex(g.neighbors(pick) & unvisited,
                        [&](int v) { ++weight[static_cast<std::size_t>(v)]; });
    }
    ChordalResult res;
    res.peo.assign(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(res.peo[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = res.peo[static_cast<std::size_t>(i)];
        VertexSet later = 0;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (pos[static_cast<std::size_t>(u)] > i) later |= vbit(u);
        });
        bool clique = true;
        for_each_vertex(later, [&](int u) {
            if ((later & ~g.closed_neighborhood(u)) != 0) clique = false;
        });
        if (!clique) {
            auto hole = find_first_hole(g, 4, Parity::Any);
            if (!hole) throw std::logic_error("elimination check failed but no hole found");
            res.chordal = false;
            res.hole = *hole;
            res.peo.clear();
            return res;
        }
    }
    res.chordal = true;
    return res;
}

// ---------------------------------------------------------------------------
// Berge recognition: neither the graph nor its complement has an odd hole.
// ---------------------------------------------------------------------------

struct BergeResult {
    bool perfect = false;
    std::vector<int> witness;  // odd hole of g, or odd hole of the complement
    bool witness_is_antihole = false;
};

inline BergeResult is_perfect_berge(const Graph& g) {
    BergeResult res;
    if (auto hole = find_first_hole(g, 4, Parity::Odd)) {
        res.witness = *hole;
        return res;
    }
    if (auto antihole = find_first_hole(complement(g), 4, Parity::Odd)) {
        res.witness = *antihole;
        res.witness_is_antihole = true;
        return res;
    }
    res.perfect = true;
    return res;
}

// ---------------------------------------------------------------------------
// Class membership for the theorem preconditions. Every false flag carries a
// witness; the containment chain chordal => short-holed => odd-hole-free is
// verified on every record.
// ---------------------------------------------------------------------------

struct ClassRecord {
    bool odd_hole_free = false;
    bool short_holed = false;
    bool chordal = false;
    bool hammer_free = false;
    bool k23_free = false;
    bool wheel4_free = false;      // (K_1 + C_4)-free
    bool k1uk3_free = false;       // (K_1 u K_3)-free
    bool apexk1uk3_free = false;   // (K_1 + (K_1 u K_3))-free
    bool perfect = false;

    std::optional<std::vector<int>> odd_hole;
    std::optional<std::vector<int>> long_hole;   // hole of length >= 5
    std::optional<std::vector<int>> any_hole;
    std::optional<Embedding> hammer, k23, wheel4, k1uk3, apexk1uk3;
    std::optional<std::vector<int>> berge_witness;
    bool berge_witness_is_antihole = false;
};

inline ClassRecord classify_theorem_classes(const Graph& g) {
    ClassRecord r;
    r.any_hole = find_first_hole(g, 4, Parity::Any);
    r.long_hole = find_first_hole(g, 5, Parity::Any);
    r.odd_hole = find_first_hole(g, 4, Parity::Odd);
    r.chordal = !r.any_hole;
    r.short_holed = !r.long_hole;
    r.odd_hole_free = !r.odd_hole;
    r.hammer = find_induced_pattern(g, "hammer");
    r.k23 = find_induced_pattern(g, "k23");
    r.wheel4 = find_induced_pattern(g, "wheel4");
    r.k1uk3 = find_induced_pattern(g, "k1uk3");
    r.apexk1uk3 = find_induced_pattern(g, "apexk1uk3");
    r.hammer_free = !r.hammer;
    r.k23_free = !r.k23;
    r.wheel4_free = !r.wheel4;
    r.k1uk3_free = !r.k1uk3;
    r.apexk1uk3_free = !r.apexk1uk3;
    BergeResult berge = is_perfect_berge(g);
    r.perfect = berge.perfect;
    if (!berge.perfect) {
        r.berge_witness = berge.witness;
        r.berge_witness_is_antihole = berge.witness_is_antihole;
    }
    if ((r.chordal && !r.short_holed) || (r.short_holed && !r.odd_hole_free))
        throw std::logic_error("class containment chain violated");
    return r;
}

// ---------------------------------------------------------------------------
// Odd balloon: an odd hole H (length >= 5), a vertex c adjacent to exactly
// two consecutive vertices of H and nothing else on H, and a pendant e
// adjacent to c and anticomplete to H. The family is parameterized by the
// hole length, so it is searched directly rather than matched from a fixed
// model. Embedding map layout: the hole in cyclic order, then c, then e.
// ---------------------------------------------------------------------------

inline std::optional<Embedding> find_odd_balloon(const Graph& g) {
    std::optional<Embedding> found;
    detail::holes_walk(g, 4, Parity::Odd, [&](const std::vector<int>& hole) {
        VertexSet hmask = vector_to_set(hole);
        int len = static_cast<int>(hole.size());
        for (int c = 0; c < g.order() && !found; ++c) {
            if (contains(hmask, c)) continue;
            VertexSet on_hole = g.neighbors(c) & hmask;
            if (set_size(on_hole) != 2) continue;
            bool consecutive = false;
            for (int i = 0; i < len && !consecutive; ++i)
                if (on_hole == (vbit(hole[static_cast<std::size_t>(i)]) |
                                vbit(hole[static_cast<std::size_t>((i + 1) % len)])))
                    consecutive = true;
            if (!consecutive) continue;
            for (int e = 0; e < g.order(); ++e) {
                if (e == c || contains(hmask, e)) continue;
                if (!g.adjacent(e, c)) continue;
                if ((g.neighbors(e) & hmask) != 0) continue;
                std::vector<int> map = hole;
                map.push_back(c);
                map.push_back(e);
                found = Embedding{"oddballoon", std::move(map)};
                break;
            }
        }
        return !found;
    });
    return found;
}

inline bool validate_odd_balloon(const Graph& g, const Embedding& emb) {
    if (emb.map.size() < 7) return false;
    std::vector<int> hole(emb.map.begin(), emb.map.end() - 2);
    int c = emb.map[emb.map.size() - 2];
    int e = emb.map[emb.map.size() - 1];
    int len = static_cast<int>(hole.size());
    if (len % 2 == 0 || len < 5) return false;
    VertexSet hmask = vector_to_set(hole);
    if (set_size(hmask) != len || contains(hmask, c) || contains(hmask, e) || c == e) return false;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool want = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.adjacent(hole[static_cast<std::size_t>(i)], hole[static_cast<std::size_t>(j)]) != want)
                return false;
        }
    VertexSet on_hole = g.neighbors(c) & hmask;
    bool consecutive = false;
    for (int i = 0; i < len && !consecutive; ++i)
        if (on_hole == (vbit(hole[static_cast<std::size_t>(i)]) |
                        vbit(hole[static_cast<std::size_t>((i + 1) % len)])))
            consecutive = true;
    return consecutive && g.adjacent(e, c) && (g.neighbors(e) & hmask) == 0;
}

}  // namespace chibound
