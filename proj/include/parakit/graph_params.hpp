#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parakit/graph.hpp"
#include "parakit/meter.hpp"

namespace parakit {

inline void require_cap(const Graph& g, int cap, const char* op) {
    if (g.n() > cap)
        throw std::domain_error(std::string(op) + ": vertex cap " + std::to_string(cap) +
                                " exceeded (n=" + std::to_string(g.n()) + ")");
}

// Least k such that every induced subgraph has a vertex of degree <= k.
// Iterative minimum-degree peeling.
inline int degeneracy(const Graph& g, Meter& m) {
    std::uint16_t alive = g.vertex_mask();
    int best = 0;
    while (alive) {
        int min_v = -1, min_d = Graph::max_vertices + 1;
        std::uint16_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= std::uint16_t(scan - 1);
            int d = std::popcount(std::uint16_t(g.neighbors(v) & alive));
            m.tick();
            if (d < min_d) {
                min_d = d;
                min_v = v;
            }
        }
        best = std::max(best, min_d);
        alive &= std::uint16_t(~(1u << min_v));
    }
    return best;
}

inline int degeneracy(const Graph& g) {
    Meter m;
    return degeneracy(g, m);
}

// Nash-Williams density: max over vertex sets S, |S| >= 2, of
// ceil(|E(G[S])| / (|S|-1)).
inline int arboricity(const Graph& g, Meter& m) {
    const int n = g.n();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        const int size = std::popcount(s);
        if (size < 2) continue;
        int edges = 0;
        std::uint32_t scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            edges += std::popcount(std::uint16_t(g.neighbors(v) & s));
            m.tick();
        }
        edges /= 2;
        best = std::max(best, (edges + size - 2) / (size - 1));
    }
    return best;
}

inline int arboricity(const Graph& g) {
    Meter m;
    return arboricity(g, m);
}

// Exact treewidth by dynamic programming over elimination prefixes: the
// width of eliminating v after the set S is the number of vertices outside
// S u {v} reachable from v through S.
inline int treewidth(const Graph& g, int cap = 12) {
    require_cap(g, cap, "treewidth");
    const int n = g.n();
    if (n == 0) return 0;
    const std::uint32_t full = (1u << n) - 1;

    auto reach_width = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t hit = 0;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t nb = g.neighbors(u) & ~seen;
            hit |= nb & ~s;
            std::uint32_t through = nb & s;
            seen |= nb;
            frontier |= through;
        }
        return std::popcount(std::uint32_t(hit & ~(1u << v)));
    };

    std::vector<int> dp(full + 1, n + 1);
    dp[0] = 0;
    for (std::uint32_t s = 0; s < full; ++s) {
        if (dp[s] > n) continue;
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1u) continue;
            const int w = std::max(dp[s], reach_width(s, v));
            const std::uint32_t t = s | (1u << v);
            dp[t] = std::min(dp[t], w);
        }
    }
    return dp[full];
}

// Exact vertex cover number by subset enumeration.
inline int vc_number(const Graph& g, int cap = 12) {
    require_cap(g, cap, "vc_number");
    const int n = g.n();
    const auto es = g.edges();
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) >= best) continue;
        bool covers = true;
        for (auto [u, v] : es)
            if (!((s >> u) & 1u) && !((s >> v) & 1u)) {
                covers = false;
                break;
            }
        if (covers) best = std::popcount(s);
    }
    return best;
}

// Exact dominating set number by subset enumeration.
inline int ds_number(const Graph& g, int cap = 12) {
    require_cap(g, cap, "ds_number");
    const int n = g.n();
    if (n == 0) return 0;
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) >= best) continue;
        std::uint32_t dominated = s;
        std::uint32_t scan = s;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            dominated |= g.neighbors(v);
        }
        if (dominated == g.vertex_mask()) best = std::popcount(s);
    }
    return best;
}

inline int clique_number(const Graph& g, int cap = 12) {
    require_cap(g, cap, "clique_number");
    const int n = g.n();
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) <= best) continue;
        bool clique = true;
        std::uint32_t scan = s;
        while (clique && scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if ((g.neighbors(v) & s) != (s & ~(1u << v))) clique = false;
        }
        if (clique) best = std::popcount(s);
    }
    return best;
}

inline int independence_number(const Graph& g, int cap = 12) {
    return clique_number(g.complement(), cap);
}

namespace detail {

inline int hadwiger_memo(const Graph& g, std::map<std::pair<int, std::uint64_t>, int>& memo);

} // namespace detail

// Largest t such that G has a K_t minor: the maximum clique size over all
// graphs reachable by edge contractions (deletions are absorbed by taking
// the clique number at every stage).
inline int hadwiger(const Graph& g, int cap = 8) {
    require_cap(g, cap, "hadwiger");
    static std::map<std::pair<int, std::uint64_t>, int> memo;
    return detail::hadwiger_memo(g, memo);
}

namespace detail {

inline int hadwiger_memo(const Graph& g, std::map<std::pair<int, std::uint64_t>, int>& memo) {
    if (g.n() == 0) return 0;
    const std::uint64_t key = canonical_key(g);
    auto it = memo.find({g.n(), key});
    if (it != memo.end()) return it->second;
    int best = clique_number(g);
    if (best < g.n()) {
        for (auto [u, v] : g.edges()) {
            best = std::max(best, hadwiger_memo(g.contract(u, v), memo));
            if (best == g.n()) break;
        }
    }
    memo.emplace(std::make_pair(g.n(), key), best);
    return best;
}

} // namespace detail

// True iff G contains K_{t,t} as a (not necessarily induced) subgraph.
inline bool has_ktt_subgraph(const Graph& g, int t) {
    if (t == 0) return true;
    const int n = g.n();
    if (2 * t > n) return false;
    for (std::uint32_t a = 0; a < (1u << n); ++a) {
        if (std::popcount(a) != t) continue;
        std::uint32_t common = g.vertex_mask();
        std::uint32_t scan = a;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            common &= g.neighbors(v);
        }
        if (std::popcount(std::uint32_t(common & ~a)) >= t) return true;
    }
    return false;
}

// Least t >= 1 such that G has no K_{t,t} subgraph.
inline int kij_index(const Graph& g, int cap = 12) {
    require_cap(g, cap, "kij_index");
    for (int t = 1;; ++t)
        if (!has_ktt_subgraph(g, t)) return t;
}

// Wagner: planar iff no K_5 minor and no K_{3,3} minor. The K_{3,3} minor
// search enumerates six branch sets (singletons plus at most one edge, the
// only shapes possible at n <= 7).
inline bool has_k33_minor(const Graph& g) {
    const int n = g.n();
    if (n < 6) return false;
    if (n > 7) throw std::domain_error("has_k33_minor: implemented for n <= 7");

    std::vector<std::uint16_t> parts;
    auto ok = [&]() {
        // parts[0..2] left side, parts[3..5] right side
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) {
                bool adj = false;
                std::uint16_t a = parts[i];
                while (a && !adj) {
                    int v = std::countr_zero(a);
                    a &= std::uint16_t(a - 1);
                    if (g.neighbors(v) & parts[j]) adj = true;
                }
                if (!adj) return false;
            }
        return true;
    };

    // Candidate branch sets: all singletons and all edges.
    std::vector<std::uint16_t> cands;
    for (int v = 0; v < n; ++v) cands.push_back(std::uint16_t(1u << v));
    for (auto [u, v] : g.edges()) cands.push_back(std::uint16_t((1u << u) | (1u << v)));

    std::function<bool(std::size_t, std::uint16_t)> rec = [&](std::size_t k,
                                                              std::uint16_t used) -> bool {
        if (k == 6) return ok();
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (cands[c] & used) continue;
            // At most one non-singleton part fits in 7 vertices.
            parts.push_back(cands[c]);
            if (rec(k + 1, std::uint16_t(used | cands[c]))) return true;
            parts.pop_back();
        }
        return false;
    };
    return rec(0, 0);
}

inline bool is_planar(const Graph& g) {
    if (g.n() <= 4) return true;
    require_cap(g, 7, "is_planar");
    if (g.n() >= 3 && g.edge_count() > 3 * g.n() - 6) return false;
    if (hadwiger(g) >= 5) return false;
    return !has_k33_minor(g);
}

} // namespace parakit
