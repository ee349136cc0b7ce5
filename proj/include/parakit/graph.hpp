#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parakit {

// Simple undirected graph on 0-indexed vertices, adjacency stored as one
// bitmask row per vertex. Sized for desk-scale exact algorithms.
class Graph {
public:
    static constexpr int max_vertices = 16;

    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > max_vertices) throw std::invalid_argument("Graph: bad vertex count");
        adj_.fill(0);
    }

    int n() const { return n_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("Graph: vertex");
        adj_[u] |= std::uint16_t(1u << v);
        adj_[v] |= std::uint16_t(1u << u);
    }

    void remove_edge(int u, int v) {
        adj_[u] &= std::uint16_t(~(1u << v));
        adj_[v] &= std::uint16_t(~(1u << u));
    }

    std::uint16_t neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return std::popcount(adj_[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (has_edge(u, v)) es.emplace_back(u, v);
        return es;
    }

    std::uint16_t vertex_mask() const { return std::uint16_t((1u << n_) - 1); }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = std::uint16_t(~adj_[v] & vertex_mask() & ~(1u << v));
        return g;
    }

    Graph induced(std::uint16_t mask) const {
        std::array<int, max_vertices> map{};
        int m = 0;
        for (int v = 0; v < n_; ++v)
            if ((mask >> v) & 1u) map[v] = m++;
        Graph g(m);
        for (int v = 0; v < n_; ++v) {
            if (!((mask >> v) & 1u)) continue;
            for (int u = v + 1; u < n_; ++u)
                if (((mask >> u) & 1u) && has_edge(u, v)) g.add_edge(map[v], map[u]);
        }
        return g;
    }

    // Deletes vertex v, shifting higher labels down.
    Graph remove_vertex(int v) const { return induced(std::uint16_t(vertex_mask() & ~(1u << v))); }

    // Merges v into u and deletes v.
    Graph contract(int u, int v) const {
        Graph g(n_);
        for (auto [a, b] : edges()) {
            int x = (a == v) ? u : a;
            int y = (b == v) ? u : b;
            if (x != y) g.add_edge(x, y);
        }
        return g.remove_vertex(v);
    }

    bool connected_set(std::uint16_t mask) const {
        if (mask == 0) return false;
        std::uint16_t seen = std::uint16_t(mask & (~mask + 1)); // lowest bit
        for (;;) {
            std::uint16_t grow = seen;
            std::uint16_t rest = std::uint16_t(seen);
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= std::uint16_t(rest - 1);
                grow |= std::uint16_t(adj_[v] & mask);
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == mask;
    }

    bool is_connected() const { return n_ <= 1 || connected_set(vertex_mask()); }

private:
    int n_ = 0;
    std::array<std::uint16_t, max_vertices> adj_{};
};

inline Graph permute(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph edgeless_graph(int n) { return Graph(n); }

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

namespace detail {

// Upper-triangle bit position of pair (i, j), i < j, in graph6 column order.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

// Packs the upper triangle under a permutation into a key whose integer
// order equals lexicographic order of the bit sequence (bit 0 most
// significant). Requires n <= 11 (55 pair bits).
inline std::uint64_t triangle_key(const Graph& g, const std::array<int, Graph::max_vertices>& pos) {
    std::uint64_t key = 0;
    const int n = g.n();
    for (auto [u, v] : g.edges()) {
        int i = pos[u], j = pos[v];
        if (i > j) std::swap(i, j);
        key |= std::uint64_t(1) << (63 - pair_bit(i, j));
    }
    (void)n;
    return key;
}

inline void canon_search(const Graph& g, std::array<int, Graph::max_vertices>& pos,
                         std::uint16_t used, int depth, std::uint64_t partial,
                         std::uint64_t& best) {
    const int n = g.n();
    if (depth == n) {
        if (partial < best) best = partial;
        return;
    }
    // Bits of column `depth` depend only on vertices placed so far, so the
    // partial key is comparable against the best prefix.
    for (int v = 0; v < n; ++v) {
        if ((used >> v) & 1u) continue;
        std::uint64_t next = partial;
        for (int u = 0; u < n; ++u) {
            if (!((used >> u) & 1u)) continue;
            if (g.has_edge(u, v)) next |= std::uint64_t(1) << (63 - pair_bit(pos[u], depth));
        }
        // Prefix through column `depth` is final; prune when it already
        // exceeds the best complete key's prefix.
        const int bits_done = pair_bit(0, depth + 1 <= n - 1 ? depth + 1 : depth);
        const std::uint64_t prefix_mask =
            depth + 1 < n ? (bits_done ? ~((std::uint64_t(1) << (64 - bits_done)) - 1) : 0)
                          : ~std::uint64_t(0);
        if ((next & prefix_mask) > (best & prefix_mask)) continue;
        pos[v] = depth;
        canon_search(g, pos, std::uint16_t(used | (1u << v)), depth + 1, next, best);
        pos[v] = -1;
    }
}

} // namespace detail

// Canonical key: the lexicographically least upper-triangle bit sequence
// over all vertex orderings. Two graphs are isomorphic iff their keys and
// vertex counts agree.
inline std::uint64_t canonical_key(const Graph& g) {
    if (g.n() > 11) throw std::domain_error("canonical_key: vertex cap 11 exceeded");
    std::array<int, Graph::max_vertices> pos;
    pos.fill(-1);
    std::uint64_t best = ~std::uint64_t(0);
    detail::canon_search(g, pos, 0, 0, 0, best);
    return best;
}

inline Graph canonical_form(const Graph& g) {
    const std::uint64_t key = canonical_key(g);
    Graph h(g.n());
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if ((key >> (63 - detail::pair_bit(u, v))) & 1u) h.add_edge(u, v);
    return h;
}

} // namespace parakit
