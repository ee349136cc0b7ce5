#pragma once

// Test-only oracles, written along routes independent of the library
// implementations they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "parakit/graph.hpp"

namespace brute {

using parakit::Graph;

// Independence number by direct subset scan.
inline int alpha(const Graph& g) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool indep = true;
        for (int v = 0; v < n && indep; ++v)
            if (((s >> v) & 1u) && (g.neighbors(v) & s)) indep = false;
        if (indep) best = std::max(best, std::popcount(s));
    }
    return best;
}

// Vertex cover via the complement identity vc = n - alpha.
inline int vc(const Graph& g) { return g.n() - alpha(g); }

inline int clique(const Graph& g) { return alpha(g.complement()); }

inline int ds(const Graph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::uint32_t dom = s;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) dom |= g.neighbors(v);
        if (dom == g.vertex_mask()) best = std::min(best, std::popcount(s));
    }
    return best;
}

// Degeneracy straight from the definition: the largest minimum degree over
// all induced subgraphs.
inline int degeneracy(const Graph& g) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int mindeg = n;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u)
                mindeg = std::min(mindeg, std::popcount(std::uint16_t(g.neighbors(v) & s)));
        best = std::max(best, mindeg);
    }
    return best;
}

inline bool is_forest(const Graph& g) {
    // union-find acyclicity
    std::vector<int> parent(g.n());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline bool forest_assign(const std::vector<std::pair<int, int>>& es, std::size_t at,
                          std::vector<Dsu>& forests, int used) {
    if (at == es.size()) return true;
    auto [u, v] = es[at];
    for (int f = 0; f < int(forests.size()) && f <= used; ++f) {
        Dsu saved = forests[f];
        if (forests[f].unite(u, v)) {
            if (forest_assign(es, at + 1, forests, std::max(used, f + 1))) return true;
        }
        forests[f] = saved;
    }
    return false;
}

} // namespace detail

// Can the edge set be partitioned into `a` forests? Explicit backtracking
// search with first-use symmetry breaking.
inline bool forest_partition_exists(const Graph& g, int a) {
    auto es = g.edges();
    if (es.empty()) return true;
    if (a <= 0) return false;
    std::vector<detail::Dsu> forests(a, detail::Dsu(g.n()));
    return detail::forest_assign(es, 0, forests, 0);
}

inline int arboricity_by_partition(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    for (int a = 1;; ++a)
        if (forest_partition_exists(g, a)) return a;
}

// Treewidth as the least over elimination orders of the largest clique
// created, simulated with explicit fill-in (independent of the subset DP).
inline int treewidth_by_elimination(const Graph& g) {
    const int n = g.n();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        Graph h = g;
        std::uint16_t alive = h.vertex_mask();
        int width = 0;
        for (int v : order) {
            std::uint16_t nb = std::uint16_t(h.neighbors(v) & alive & ~(1u << v));
            width = std::max(width, std::popcount(nb));
            if (width >= best) break;
            // fill-in among v's live neighbors
            std::uint16_t scan = nb;
            while (scan) {
                int a = std::countr_zero(scan);
                scan &= std::uint16_t(scan - 1);
                std::uint16_t rest = std::uint16_t(nb & ~((1u << (a + 1)) - 1));
                while (rest) {
                    int b = std::countr_zero(rest);
                    rest &= std::uint16_t(rest - 1);
                    if (!h.has_edge(a, b)) h.add_edge(a, b);
                }
            }
            alive &= std::uint16_t(~(1u << v));
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// K_t-minor witness by explicit branch-set assignment, feasible for n <= 5:
// every vertex gets a part 0..t (0 = unused), parts must be nonempty,
// connected, and pairwise adjacent.
inline bool has_kt_minor(const Graph& g, int t) {
    if (t == 0) return true;
    const int n = g.n();
    if (t > n) return false;
    std::vector<int> part(n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            std::vector<std::uint16_t> masks(t, 0);
            for (int u = 0; u < n; ++u)
                if (part[u] > 0) masks[part[u] - 1] |= std::uint16_t(1u << u);
            for (int p = 0; p < t; ++p)
                if (!masks[p] || !g.connected_set(masks[p])) return false;
            for (int p = 0; p < t; ++p)
                for (int q = p + 1; q < t; ++q) {
                    bool adj = false;
                    std::uint16_t scan = masks[p];
                    while (scan && !adj) {
                        int u = std::countr_zero(scan);
                        scan &= std::uint16_t(scan - 1);
                        if (g.neighbors(u) & masks[q]) adj = true;
                    }
                    if (!adj) return false;
                }
            return true;
        }
        for (int p = 0; p <= t; ++p) {
            part[v] = p;
            if (rec(v + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline int hadwiger(const Graph& g) {
    for (int t = g.n(); t >= 1; --t)
        if (has_kt_minor(g, t)) return t;
    return 0;
}

} // namespace brute
