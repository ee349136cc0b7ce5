#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "parakit/graph.hpp"
#include "parakit/graph_params.hpp"

namespace parakit {

namespace detail {

inline bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map, int v,
                       std::uint16_t used) {
    const int n = a.n();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if ((used >> w) & 1u) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool consistent = true;
        for (int u = 0; u < v && consistent; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) consistent = false;
        if (!consistent) continue;
        map[v] = w;
        if (iso_extend(a, b, map, v + 1, std::uint16_t(used | (1u << w)))) return true;
    }
    return false;
}

} // namespace detail

// Exact isomorphism by permutation backtracking (independent of the
// canonical-form machinery).
inline bool oracle_iso(const Graph& a, const Graph& b, int cap = 12) {
    require_cap(a, cap, "oracle_iso");
    require_cap(b, cap, "oracle_iso");
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(a.n(), -1);
    return detail::iso_extend(a, b, map, 0, 0);
}

namespace detail {

inline bool ham_extend(const Graph& g, int v, std::uint16_t used, int count) {
    const int n = g.n();
    if (count == n) return g.has_edge(v, 0);
    std::uint16_t nb = std::uint16_t(g.neighbors(v) & ~used);
    while (nb) {
        int w = std::countr_zero(nb);
        nb &= std::uint16_t(nb - 1);
        if (ham_extend(g, w, std::uint16_t(used | (1u << w)), count + 1)) return true;
    }
    return false;
}

} // namespace detail

// Exact Hamiltonian-cycle test by cycle search; cycles need >= 3 vertices.
inline bool oracle_hamiltonian(const Graph& g, int cap = 12) {
    require_cap(g, cap, "oracle_hamiltonian");
    if (g.n() < 3) return false;
    return detail::ham_extend(g, 0, 1u, 1);
}

} // namespace parakit
