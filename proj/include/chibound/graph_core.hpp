// Bitmask graph kernel: construction, graph6/edge-list codecs, neighborhoods,
// BFS levellings and the unique-parent pruning used by the levelling colorers.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chibound {

// One machine word per vertex set. Hard cap: 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline bool contains(VertexSet s, int v) { return (s >> v) & 1; }

// Iterates the set ascending; fn(v) for each member.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s != 0) {
        int v = std::countr_zero(s);
        s &= s - 1;
        fn(v);
    }
}

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet vector_to_set(std::span<const int> vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

// Simple undirected graph on at most 64 vertices; immutable after construction.
// adj is symmetric and irreflexive with all bits below n.
class Graph {
public:
    Graph() = default;

    static Graph from_adjacency(int n, std::vector<VertexSet> adj) {
        Graph g;
        g.n_ = n;
        g.adj_ = std::move(adj);
        return g;
    }

    int order() const { return n_; }

    VertexSet vertices() const { return all_vertices(n_); }

    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    VertexSet closed_neighborhood(int v) const { return neighbors(v) | vbit(v); }

    // M(v): vertices outside N[v].
    VertexSet nonneighbors(int v) const { return vertices() & ~closed_neighborhood(v); }

    bool adjacent(int u, int v) const { return contains(neighbors(u), v); }

    int degree(int v) const { return set_size(neighbors(v)); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::size_t edge_count() const {
        std::size_t total = 0;
        for (int v = 0; v < n_; ++v) total += static_cast<std::size_t>(degree(v));
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            for_each_vertex(neighbors(v), [&](int u) {
                if (u > v) out.emplace_back(v, u);
            });
        return out;
    }

    void check_invariants() const {
        VertexSet all = vertices();
        for (int v = 0; v < n_; ++v) {
            if ((neighbors(v) & ~all) != 0) throw GraphError("adjacency bit out of range");
            if (contains(neighbors(v), v)) throw GraphError("self-loop in adjacency");
            for_each_vertex(neighbors(v), [&](int u) {
                if (!contains(neighbors(u), v)) throw GraphError("asymmetric adjacency");
            });
        }
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count out of range (0..64): " + std::to_string(n));
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edge_list) {
        if (u == v) throw GraphError("self-loop edge (" + std::to_string(u) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        adj[static_cast<std::size_t>(u)] |= vbit(v);
        adj[static_cast<std::size_t>(v)] |= vbit(u);
    }
    return Graph::from_adjacency(n, std::move(adj));
}

inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

inline Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = g.vertices() & ~g.closed_neighborhood(v);
    return Graph::from_adjacency(n, std::move(adj));
}

// Disjoint union: b's vertices are shifted above a's.
inline Graph graph_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    if (n > kMaxVertices) throw GraphError("union exceeds 64 vertices");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < a.order(); ++v) adj[static_cast<std::size_t>(v)] = a.neighbors(v);
    for (int v = 0; v < b.order(); ++v)
        adj[static_cast<std::size_t>(a.order() + v)] = b.neighbors(v) << a.order();
    return Graph::from_adjacency(n, std::move(adj));
}

// Join: disjoint union plus all edges between the two sides.
inline Graph graph_join(const Graph& a, const Graph& b) {
    Graph g = graph_union(a, b);
    int n = g.order();
    VertexSet left = all_vertices(a.order());
    VertexSet right = all_vertices(n) & ~left;
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[static_cast<std::size_t>(v)] = g.neighbors(v) | (contains(left, v) ? right : left);
    return Graph::from_adjacency(n, std::move(adj));
}

// Induced subgraph with both direction index maps. New indices follow
// ascending old-vertex order.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_sub;   // old -> new, -1 when not selected; size = host order
    std::vector<int> to_host;  // new -> old
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if ((s & ~g.vertices()) != 0) throw GraphError("induced set has vertex out of range");
    InducedSubgraph out;
    out.to_sub.assign(static_cast<std::size_t>(g.order()), -1);
    out.to_host = set_to_vector(s);
    for (std::size_t i = 0; i < out.to_host.size(); ++i)
        out.to_sub[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);
    std::vector<VertexSet> adj(out.to_host.size(), 0);
    for (std::size_t i = 0; i < out.to_host.size(); ++i) {
        for_each_vertex(g.neighbors(out.to_host[i]) & s, [&](int u) {
            adj[i] |= vbit(out.to_sub[static_cast<std::size_t>(u)]);
        });
    }
    out.graph = Graph::from_adjacency(static_cast<int>(out.to_host.size()), std::move(adj));
    return out;
}

// ---------------------------------------------------------------------------
// graph6 codec (McKay's format). Header: chr(63+n) for n < 63, '~' + 3 chars
// of 18-bit big-endian n for 63 <= n <= 64 (larger sizes rejected). Payload:
// upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),..., 6 bits per
// character, most significant first, value offset 63.
// ---------------------------------------------------------------------------

inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 62) throw GraphError("encode_graph6 supports n <= 62 (single-byte header)");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.size() >= 10 && line.substr(0, 10) == ">>graph6<<") line.remove_prefix(10);
    if (line.empty()) throw GraphError("empty graph6 line");
    auto val = [](char c) -> int {
        if (c < 63 || c > 126) throw GraphError(std::string("invalid graph6 character '") + c + "'");
        return c - 63;
    };
    std::size_t pos = 0;
    long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw GraphError("graph6 size header beyond supported range");
        if (line.size() < 4) throw GraphError("truncated graph6 size header");
        n = (static_cast<long>(val(line[1])) << 12) | (val(line[2]) << 6) | val(line[3]);
        pos = 4;
    } else {
        n = val(line[0]);
        pos = 1;
    }
    if (n > kMaxVertices) throw GraphError("graph6 order exceeds 64: " + std::to_string(n));
    std::size_t payload_bits = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t payload_chars = (payload_bits + 5) / 6;
    if (line.size() - pos < payload_chars) throw GraphError("truncated graph6 payload");
    if (line.size() - pos > payload_chars) throw GraphError("trailing characters after graph6 payload");
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    std::size_t bit_index = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit_index) {
            int c = val(line[pos + bit_index / 6]);
            if ((c >> (5 - bit_index % 6)) & 1) {
                adj[static_cast<std::size_t>(row)] |= vbit(col);
                adj[static_cast<std::size_t>(col)] |= vbit(row);
            }
        }
    }
    // padding bits must be zero
    for (std::size_t b = payload_bits; b < payload_chars * 6; ++b) {
        int c = val(line[pos + b / 6]);
        if ((c >> (5 - b % 6)) & 1) throw GraphError("nonzero padding in graph6 payload");
    }
    return Graph::from_adjacency(static_cast<int>(n), std::move(adj));
}

// Edge-list text: one "u v" pair per line (0-based). A line with a single
// integer declares the vertex count (otherwise n = max endpoint + 1).
// '#'-prefixed lines and blank lines are skipped.
inline Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edge_list;
    int declared_n = -1;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) throw GraphError("bad edge-list line: " + line);
        if (ls >> b) {
            if (a < 0 || b < 0 || a >= kMaxVertices || b >= kMaxVertices)
                throw GraphError("edge endpoint out of range: " + line);
            edge_list.emplace_back(static_cast<int>(a), static_cast<int>(b));
        } else {
            if (a < 0 || a > kMaxVertices) throw GraphError("bad vertex count line: " + line);
            declared_n = static_cast<int>(a);
        }
        std::string rest;
        if (ls.clear(), std::getline(ls, rest); rest.find_first_not_of(" \t\r") != std::string::npos)
            throw GraphError("trailing tokens on edge-list line: " + line);
    }
    int n = declared_n;
    for (auto [u, v] : edge_list) n = std::max(n, std::max(u, v) + 1);
    if (n < 0) n = 0;
    return build_graph(n, edge_list);
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

// ---------------------------------------------------------------------------
// Levellings: BFS distance classes L_0..L_m from a root within its component.
// Invariants: |L_0| = 1, every vertex of L_i (i >= 1) has a parent in L_{i-1},
// and no edges skip a level.
// ---------------------------------------------------------------------------

struct LevelStructure {
    int root = -1;
    std::vector<VertexSet> levels;

    VertexSet covered() const {
        VertexSet s = 0;
        for (VertexSet l : levels) s |= l;
        return s;
    }

    int level_of(int v) const {
        for (std::size_t i = 0; i < levels.size(); ++i)
            if (contains(levels[i], v)) return static_cast<int>(i);
        return -1;
    }

    int top() const { return static_cast<int>(levels.size()) - 1; }
};

inline VertexSet level_parents(const Graph& g, const LevelStructure& ls, int v) {
    int i = ls.level_of(v);
    if (i <= 0) return 0;
    return g.neighbors(v) & ls.levels[static_cast<std::size_t>(i - 1)];
}

inline VertexSet level_children(const Graph& g, const LevelStructure& ls, int v) {
    int i = ls.level_of(v);
    if (i < 0 || i + 1 > ls.top()) return 0;
    return g.neighbors(v) & ls.levels[static_cast<std::size_t>(i + 1)];
}

inline LevelStructure bfs_levelling(const Graph& g, int root) {
    if (root < 0 || root >= g.order()) throw GraphError("bfs root out of range");
    LevelStructure ls;
    ls.root = root;
    VertexSet seen = vbit(root);
    VertexSet frontier = vbit(root);
    while (frontier != 0) {
        ls.levels.push_back(frontier);
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return ls;
}

// Validates LevelStructure invariants against g; returns an explanation for
// the first violated one, or empty string when all hold.
inline std::string check_levelling(const Graph& g, const LevelStructure& ls) {
    if (ls.levels.empty() || set_size(ls.levels[0]) != 1) return "L_0 is not a single vertex";
    if (!contains(ls.levels[0], ls.root)) return "root not in L_0";
    VertexSet acc = 0;
    for (VertexSet l : ls.levels) {
        if (l == 0) return "empty level";
        if ((acc & l) != 0) return "levels not disjoint";
        acc |= l;
    }
    for (std::size_t i = 1; i < ls.levels.size(); ++i) {
        bool orphan = false;
        for_each_vertex(ls.levels[i], [&](int v) {
            if ((g.neighbors(v) & ls.levels[i - 1]) == 0) orphan = true;
        });
        if (orphan) return "vertex in L_" + std::to_string(i) + " has no parent";
    }
    for (std::size_t i = 2; i < ls.levels.size(); ++i) {
        for (std::size_t j = 0; j + 2 <= i; ++j) {
            bool skip = false;
            for_each_vertex(ls.levels[i], [&](int v) {
                if ((g.neighbors(v) & ls.levels[j]) != 0) skip = true;
            });
            if (skip)
                return "edge between L_" + std::to_string(i) + " and L_" + std::to_string(j);
        }
    }
    return {};
}

// Unique-parent pruning of levels 0..k-1. The criterion for a vertex
// v in L_i to survive: v is the only surviving parent of some surviving
// u in L_{i+1} (for i = k-1, u is further restricted to `target`).
// Deletions run in ascending vertex order per level, re-evaluated after each
// deletion, sweeping i = 0..k-1; sweeps repeat until none deletes, because a
// deletion at level i+1 can strip level i of its private children. No vertex
// of L_1..L_k ever loses its last parent: such a parent is by definition a
// unique parent and is kept. L_k and everything above stay untouched.
inline LevelStructure prune_levelling(const Graph& g, const LevelStructure& ls, int k,
                                      VertexSet target) {
    if (k < 1 || k > ls.top()) throw GraphError("prune level out of range");
    if ((target & ~ls.levels[static_cast<std::size_t>(k)]) != 0)
        throw GraphError("prune target not inside L_k");
    LevelStructure out = ls;
    auto child_set = [&](int i) {
        return i == k - 1 ? target : out.levels[static_cast<std::size_t>(i + 1)];
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < k; ++i) {
            VertexSet level = out.levels[static_cast<std::size_t>(i)];
            for_each_vertex(level, [&](int v) {
                VertexSet children = g.neighbors(v) & child_set(i);
                bool unique_parent_of_someone = false;
                for_each_vertex(children, [&](int u) {
                    VertexSet parents = g.neighbors(u) & out.levels[static_cast<std::size_t>(i)];
                    if (parents == vbit(v)) unique_parent_of_someone = true;
                });
                if (!unique_parent_of_someone) {
                    out.levels[static_cast<std::size_t>(i)] &= ~vbit(v);
                    changed = true;
                }
            });
        }
    }
    return out;
}

inline LevelStructure prune_levelling(const Graph& g, const LevelStructure& ls, int k) {
    if (k < 1 || k > ls.top()) throw GraphError("prune level out of range");
    return prune_levelling(g, ls, k, ls.levels[static_cast<std::size_t>(k)]);
}

// Connected components of g restricted to `mask`, ordered by lowest vertex.
inline std::vector<VertexSet> components_in(const Graph& g, VertexSet mask) {
    std::vector<VertexSet> comps;
    VertexSet rest = mask;
    while (rest != 0) {
        int s = lowest_vertex(rest);
        VertexSet comp = vbit(s);
        VertexSet frontier = comp;
        while (frontier != 0) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v) & mask; });
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        rest &= ~comp;
    }
    return comps;
}

}  // namespace chibound
