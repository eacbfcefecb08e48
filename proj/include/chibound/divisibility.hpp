// Perfect divisibility: a graph is perfectly divisible when every induced
// subgraph H with an edge splits into A with H[A] perfect and B with
// omega(H[B]) < omega(H). The oracle walks all 2^n induced-subgraph masks
// against the precomputed subset tables and returns either a full witness
// table or the smallest failing mask.
#pragma once

#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>

#include "chibound/exact_solvers.hpp"
#include "chibound/graph_core.hpp"

namespace chibound {

struct DivisionWitness {
    int n = 0;
    // one entry per induced-subgraph mask with at least one edge: (S, A, B)
    std::vector<std::array<VertexSet, 3>> splits;
};

struct PerfectDivision {
    VertexSet a = 0;
    VertexSet b = 0;
};

namespace detail {
inline bool mask_has_edge(const Graph& g, VertexSet s) {
    bool edge = false;
    for_each_vertex(s, [&](int v) {
        if ((g.neighbors(v) & s) != 0) edge = true;
    });
    return edge;
}

// Subsets of s ordered by descending popcount, ties ascending numeric, so the
// full set comes first and perfect graphs split as (S, empty) immediately.
inline void subsets_by_popcount(VertexSet s, std::vector<VertexSet>& out) {
    out.clear();
    VertexSet sub = s;
    while (true) {
        out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & s;
    }
    std::reverse(out.begin(), out.end());  // ascending numeric
    std::stable_sort(out.begin(), out.end(),
                     [](VertexSet a, VertexSet b) { return set_size(a) > set_size(b); });
}

inline std::optional<PerfectDivision> split_for_mask(const SubsetTables& t, VertexSet s,
                                                     std::vector<VertexSet>& scratch) {
    subsets_by_popcount(s, scratch);
    for (VertexSet a : scratch) {
        VertexSet b = s & ~a;
        if (t.perfect[a] && t.omega[b] < t.omega[s]) return PerfectDivision{a, b};
    }
    return std::nullopt;
}
}  // namespace detail

inline std::optional<PerfectDivision> find_perfect_division(const Graph& g) {
    if (g.order() > 13) throw GraphError("find_perfect_division supports n <= 13");
    if (!detail::mask_has_edge(g, g.vertices()))
        throw GraphError("perfect division is defined only for graphs with an edge");
    SubsetTables t = subset_tables(g);
    std::vector<VertexSet> scratch;
    return detail::split_for_mask(t, g.vertices(), scratch);
}

// true with a witness split for every mask, or false with the numerically
// smallest failing mask.
inline std::variant<DivisionWitness, VertexSet> is_perfectly_divisible(const Graph& g) {
    if (g.order() > 13) throw GraphError("is_perfectly_divisible supports n <= 13");
    SubsetTables t = subset_tables(g);
    DivisionWitness w;
    w.n = g.order();
    std::vector<VertexSet> scratch;
    std::size_t total = std::size_t{1} << g.order();
    for (VertexSet s = 0; s < total; ++s) {
        if (!detail::mask_has_edge(g, s)) continue;
        auto split = detail::split_for_mask(t, s, scratch);
        if (!split) return s;
        w.splits.push_back({s, split->a, split->b});
    }
    return w;
}

inline bool graph_is_perfectly_divisible(const Graph& g) {
    return std::holds_alternative<DivisionWitness>(is_perfectly_divisible(g));
}

// Witness export: one line per mask, "mask_hex A_hex B_hex".
inline std::string export_witness_text(const DivisionWitness& w) {
    std::string out;
    char buf[64];
    for (const auto& [s, a, b] : w.splits) {
        std::snprintf(buf, sizeof buf, "%llx %llx %llx\n", static_cast<unsigned long long>(s),
                      static_cast<unsigned long long>(a), static_cast<unsigned long long>(b));
        out += buf;
    }
    return out;
}

// Revalidates a witness from scratch: Berge perfection of each A and exact
// clique numbers, no table reuse. Returns the first explanation that fails,
// or empty when everything checks out.
inline std::string check_division_witness(const Graph& g, const DivisionWitness& w) {
    std::size_t seen = 0;
    std::size_t total = std::size_t{1} << g.order();
    std::size_t expected = 0;
    for (VertexSet s = 0; s < total; ++s)
        if (detail::mask_has_edge(g, s)) ++expected;
    for (const auto& [s, a, b] : w.splits) {
        ++seen;
        if ((a | b) != s || (a & b) != 0) return "split does not partition its mask";
        if (!is_perfect_berge(induced_subgraph(g, a).graph).perfect)
            return "A side is not perfect";
        if (clique_number_in(g, b).omega >= clique_number_in(g, s).omega)
            return "B side does not drop the clique number";
    }
    if (seen != expected) return "witness does not cover every mask with an edge";
    return {};
}

struct PdAudit {
    bool perfectly_divisible = false;
    std::optional<VertexSet> failing_mask;
    int chi = 0;
    int omega = 0;
    int bound = 0;  // omega+1 choose 2
    bool bound_ok = false;
};

inline PdAudit pd_bound_audit(const Graph& g, Budget* budget = nullptr) {
    if (g.order() > 13) throw GraphError("pd_bound_audit supports n <= 13");
    PdAudit audit;
    auto verdict = is_perfectly_divisible(g);
    audit.perfectly_divisible = std::holds_alternative<DivisionWitness>(verdict);
    if (!audit.perfectly_divisible) audit.failing_mask = std::get<VertexSet>(verdict);
    audit.omega = clique_number(g, budget).omega;
    audit.chi = chromatic_number(g, budget).chi;
    audit.bound = (audit.omega + 1) * audit.omega / 2;
    audit.bound_ok = !audit.perfectly_divisible || audit.chi <= audit.bound;
    return audit;
}

}  // namespace chibound
