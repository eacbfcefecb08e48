// nonisog6: stream every graph on 1..N vertices, one representative per
// isomorphism class, as graph6 lines (ascending n, deterministic order).
//
// Method: vertex augmentation. Level n is built by attaching a new vertex
// with every possible neighbour mask to every representative of level n-1;
// removing the last vertex of any n-vertex graph lands in level n-1, so every
// class is reached. Candidates are deduplicated through a Weisfeiler-Leman
// colour signature (iso-invariant, so duplicates always share a bucket) and
// an exact backtracking isomorphism test inside each bucket.
//
// nonisog6 N [--only-max] [--quiet]

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "chibound/graph_core.hpp"

namespace {

constexpr int kToolMaxN = 10;

using Row = std::uint16_t;

struct SmallGraph {
    int n = 0;
    std::array<Row, kToolMaxN> adj{};
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Three rounds of colour refinement; returns the per-vertex colours.
std::array<std::uint64_t, kToolMaxN> wl_colors(const SmallGraph& g) {
    std::array<std::uint64_t, kToolMaxN> color{}, next{};
    for (int v = 0; v < g.n; ++v) color[v] = static_cast<std::uint64_t>(std::popcount(g.adj[v]));
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < g.n; ++v) {
            std::uint64_t neigh[kToolMaxN];
            int cnt = 0;
            Row m = g.adj[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= static_cast<Row>(m - 1);
                neigh[cnt++] = color[u];
            }
            std::sort(neigh, neigh + cnt);
            std::uint64_t h = splitmix64(color[v] ^ 0x51ed270b7a4fd4bfULL);
            for (int i = 0; i < cnt; ++i) h = splitmix64(h ^ neigh[i]);
            next[v] = h;
        }
        color = next;
    }
    return color;
}

std::uint64_t wl_signature(const SmallGraph& g, const std::array<std::uint64_t, kToolMaxN>& colors) {
    std::uint64_t sorted[kToolMaxN];
    for (int v = 0; v < g.n; ++v) sorted[v] = colors[v];
    std::sort(sorted, sorted + g.n);
    std::uint64_t h = splitmix64(static_cast<std::uint64_t>(g.n));
    for (int v = 0; v < g.n; ++v) h = splitmix64(h ^ sorted[v]);
    return h;
}

// Exact isomorphism: backtracking restricted to equal WL colours.
bool isomorphic(const SmallGraph& a, const std::array<std::uint64_t, kToolMaxN>& ca,
                const SmallGraph& b, const std::array<std::uint64_t, kToolMaxN>& cb) {
    if (a.n != b.n) return false;
    int n = a.n;
    int order[kToolMaxN];
    for (int i = 0; i < n; ++i) order[i] = i;
    // rarest colours first keeps the branching narrow
    std::sort(order, order + n, [&](int x, int y) {
        int fx = 0, fy = 0;
        for (int v = 0; v < n; ++v) {
            fx += ca[v] == ca[x];
            fy += ca[v] == ca[y];
        }
        if (fx != fy) return fx < fy;
        return x < y;
    });
    int map[kToolMaxN];
    std::memset(map, -1, sizeof map);
    Row used = 0;
    std::function<bool(int)> place = [&](int pos) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            if (ca[v] != cb[w]) continue;
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j) {
                int pv = order[j];
                ok = (((a.adj[v] >> pv) & 1) == ((b.adj[w] >> map[pv]) & 1));
            }
            if (!ok) continue;
            map[v] = w;
            used |= static_cast<Row>(Row{1} << w);
            if (place(pos + 1)) return true;
            used &= static_cast<Row>(~(Row{1} << w));
        }
        return false;
    };
    return place(0);
}

std::string to_graph6(const SmallGraph& g) {
    std::vector<chibound::VertexSet> adj(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) adj[static_cast<std::size_t>(v)] = g.adj[v];
    return chibound::encode_graph6(chibound::Graph::from_adjacency(g.n, std::move(adj)));
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 0;
    bool only_max = false, quiet = false;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--only-max") only_max = true;
        else if (arg == "--quiet") quiet = true;
        else if (max_n == 0) max_n = std::atoi(arg.c_str());
        else {
            std::cerr << "usage: nonisog6 N [--only-max] [--quiet]\n";
            return 2;
        }
    }
    if (max_n < 1 || max_n > kToolMaxN) {
        std::cerr << "usage: nonisog6 N [--only-max] [--quiet]  (1 <= N <= " << kToolMaxN << ")\n";
        return 2;
    }

    std::vector<SmallGraph> reps;
    reps.push_back(SmallGraph{1, {}});
    if (!only_max || max_n == 1) std::cout << to_graph6(reps[0]) << "\n";
    if (!quiet) std::cerr << "n=1: 1\n";

    for (int n = 2; n <= max_n; ++n) {
        std::vector<SmallGraph> next;
        std::vector<std::array<std::uint64_t, kToolMaxN>> next_colors;
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        const Row mask_limit = static_cast<Row>(Row{1} << (n - 1));
        for (const SmallGraph& parent : reps) {
            for (Row mask = 0; mask < mask_limit; ++mask) {
                SmallGraph cand;
                cand.n = n;
                for (int v = 0; v < n - 1; ++v)
                    cand.adj[v] = static_cast<Row>(parent.adj[v] |
                                                   (((mask >> v) & 1) ? (Row{1} << (n - 1)) : 0));
                cand.adj[n - 1] = mask;
                auto colors = wl_colors(cand);
                std::uint64_t sig = wl_signature(cand, colors);
                auto& bucket = buckets[sig];
                bool known = false;
                for (std::size_t idx : bucket) {
                    if (isomorphic(cand, colors, next[idx], next_colors[idx])) {
                        known = true;
                        break;
                    }
                }
                if (!known) {
                    bucket.push_back(next.size());
                    next.push_back(cand);
                    next_colors.push_back(colors);
                }
            }
        }
        reps = std::move(next);
        if (!only_max || n == max_n)
            for (const SmallGraph& g : reps) std::cout << to_graph6(g) << "\n";
        if (!quiet) std::cerr << "n=" << n << ": " << reps.size() << "\n";
    }
    return 0;
}
