#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "parakit/graph.hpp"
#include "parakit/meter.hpp"

namespace parakit {

enum class WlVerdict { distinguished, same_colors };

// k-dimensional Weisfeiler-Lehman refinement, k in 1..3.
//
// k = 1 is classic color refinement on vertices. For k >= 2 the folklore
// variant is used: tuples start at their atomic type (equality pattern plus
// adjacency pattern) and each round hashes in, per substituted vertex w,
// the k-vector of colors of the one-position substitutions. Colors are
// shared across the whole batch, so equal stable histograms mean the
// refinement cannot tell two graphs apart.
//
// "distinguished" is sound for non-isomorphism; "same_colors" is
// inconclusive.

namespace detail {

inline int tuple_count(int n, int k) {
    int c = 1;
    for (int i = 0; i < k; ++i) c *= n;
    return c;
}

// Atomic type of a tuple: equality and adjacency of every position pair.
inline int atomic_type(const Graph& g, const std::vector<int>& tup) {
    int code = 0;
    for (std::size_t i = 0; i < tup.size(); ++i)
        for (std::size_t j = i + 1; j < tup.size(); ++j)
            code = code * 4 + (tup[i] == tup[j] ? 1 : 0) * 2 +
                   (g.has_edge(tup[i], tup[j]) ? 1 : 0);
    return code;
}

inline std::vector<int> unrank_tuple(int idx, int n, int k) {
    std::vector<int> tup(k);
    for (int p = k - 1; p >= 0; --p) {
        tup[p] = idx % n;
        idx /= n;
    }
    return tup;
}

// Refines the whole batch to stability; returns per-graph final tuple
// colors, consistently named across graphs.
inline std::vector<std::vector<int>> wl_refine(int k, const std::vector<Graph>& gs, Meter& m) {
    if (k < 1 || k > 3) throw std::domain_error("wl: dimension must be in 1..3");
    const std::size_t gcount = gs.size();
    std::vector<std::vector<int>> colors(gcount);

    std::map<int, int> init_ids;
    for (std::size_t gi = 0; gi < gcount; ++gi) {
        const Graph& g = gs[gi];
        const int tc = tuple_count(g.n(), k);
        colors[gi].resize(tc);
        for (int t = 0; t < tc; ++t) {
            int code = (k > 1) ? atomic_type(g, unrank_tuple(t, g.n(), k)) : 0;
            auto [it, fresh] = init_ids.emplace(code, int(init_ids.size()));
            colors[gi][t] = it->second;
            m.tick();
        }
    }

    std::size_t color_count = init_ids.size();
    for (;;) {
        std::map<std::pair<int, std::vector<int>>, int> next_ids;
        std::vector<std::vector<int>> next(gcount);
        for (std::size_t gi = 0; gi < gcount; ++gi) {
            const Graph& g = gs[gi];
            const int n = g.n();
            const int tc = tuple_count(n, k);
            next[gi].resize(tc);
            for (int t = 0; t < tc; ++t) {
                std::vector<int> sig;
                if (k == 1) {
                    for (int w = 0; w < n; ++w)
                        if (g.has_edge(t, w)) {
                            sig.push_back(colors[gi][w]);
                            m.tick();
                        }
                    std::sort(sig.begin(), sig.end());
                } else {
                    auto tup = unrank_tuple(t, n, k);
                    std::vector<std::vector<int>> subs;
                    subs.reserve(n);
                    for (int w = 0; w < n; ++w) {
                        std::vector<int> entry(k);
                        for (int p = 0; p < k; ++p) {
                            const int save = tup[p];
                            tup[p] = w;
                            int idx = 0;
                            for (int q = 0; q < k; ++q) idx = idx * n + tup[q];
                            entry[p] = colors[gi][idx];
                            tup[p] = save;
                            m.tick();
                        }
                        subs.push_back(std::move(entry));
                    }
                    std::sort(subs.begin(), subs.end());
                    for (const auto& e : subs)
                        for (int c : e) sig.push_back(c);
                }
                auto key = std::make_pair(colors[gi][t], std::move(sig));
                auto [it, fresh] = next_ids.emplace(std::move(key), int(next_ids.size()));
                next[gi][t] = it->second;
            }
        }
        const std::size_t new_count = next_ids.size();
        colors = std::move(next);
        if (new_count == color_count) break; // stable
        color_count = new_count;
    }
    return colors;
}

} // namespace detail

// Runs the refinement jointly over a batch and returns one class id per
// graph; equal ids iff equal stable color histograms.
inline std::vector<std::size_t> wl_equivalence_classes(int k, const std::vector<Graph>& gs,
                                                       Meter& m) {
    auto colors = detail::wl_refine(k, gs, m);
    std::map<std::vector<int>, std::size_t> hist_ids;
    std::vector<std::size_t> out(gs.size());
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        std::vector<int> h = colors[gi];
        std::sort(h.begin(), h.end());
        auto [it, fresh] = hist_ids.emplace(std::move(h), hist_ids.size());
        out[gi] = it->second;
    }
    return out;
}

inline WlVerdict wl(int k, const Graph& a, const Graph& b, Meter& m) {
    auto cls = wl_equivalence_classes(k, {a, b}, m);
    return cls[0] == cls[1] ? WlVerdict::same_colors : WlVerdict::distinguished;
}

inline WlVerdict wl(int k, const Graph& a, const Graph& b) {
    Meter m;
    return wl(k, a, b, m);
}

// Vertex partition induced by the stable coloring of diagonal tuples.
inline std::vector<std::vector<int>> wl_vertex_partition(int k, const Graph& g) {
    Meter m;
    auto colors = detail::wl_refine(k, {g}, m);
    const int n = g.n();
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        int idx = 0;
        for (int q = 0; q < k; ++q) idx = idx * n + v;
        classes[colors[0][idx]].push_back(v);
    }
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : classes) out.push_back(vs);
    std::sort(out.begin(), out.end());
    return out;
}

// True iff every class of `finer` lies inside a class of `coarser`.
inline bool partition_refines(const std::vector<std::vector<int>>& finer,
                              const std::vector<std::vector<int>>& coarser) {
    std::map<int, int> cls;
    for (std::size_t i = 0; i < coarser.size(); ++i)
        for (int v : coarser[i]) cls[v] = int(i);
    for (const auto& f : finer)
        for (std::size_t j = 1; j < f.size(); ++j)
            if (cls[f[j]] != cls[f[0]]) return false;
    return true;
}

} // namespace parakit
