#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parakit/enumerate.hpp"
#include "parakit/families.hpp"
#include "parakit/graph.hpp"
#include "parakit/graph6.hpp"
#include "parakit/graph_params.hpp"
#include "parakit/kernel.hpp"
#include "parakit/language.hpp"
#include "parakit/oracles.hpp"
#include "parakit/promise.hpp"
#include "parakit/universe.hpp"
#include "parakit/wl.hpp"

namespace parakit {

// Instance of a solution-size problem: a graph together with a budget k.
struct GraphNat {
    Graph graph;
    std::uint64_t k = 0;
};

using GraphPair = std::pair<Graph, Graph>;

inline std::string encode_graphnat(const GraphNat& x) {
    return encode_graph6(canonical_form(x.graph)) + "," + std::to_string(x.k);
}

inline std::optional<GraphNat> decode_graphnat(const std::string& w) {
    const auto sep = w.rfind(',');
    if (sep == std::string::npos) return std::nullopt;
    std::uint64_t k = 0;
    if (sep + 1 >= w.size()) return std::nullopt;
    for (std::size_t i = sep + 1; i < w.size(); ++i) {
        if (w[i] < '0' || w[i] > '9') return std::nullopt;
        k = k * 10 + std::uint64_t(w[i] - '0');
    }
    try {
        return GraphNat{decode_graph6(w.substr(0, sep)), k};
    } catch (const Graph6ParseError&) {
        return std::nullopt;
    }
}

// Pairs (G, k) enumerated by the Cantor pairing of (corpus index, k+1).
inline Universe<GraphNat> graphnat_universe(std::shared_ptr<const std::vector<Graph>> corpus,
                                            std::string name = "graph-nat-pairs") {
    Universe<GraphNat> u;
    u.name = std::move(name);
    u.enumerate = [corpus](std::uint64_t p) {
        auto [a, b] = cantor_unpair(p);
        if (a == 0 || a > corpus->size())
            throw std::out_of_range("graphnat universe: graph index " + std::to_string(a));
        return GraphNat{(*corpus)[a - 1], b - 1};
    };
    u.encode = [](const GraphNat& x) { return encode_graphnat(x); };
    return u;
}

inline Universe<GraphPair> graphpair_universe(std::shared_ptr<const std::vector<Graph>> corpus,
                                              std::string name = "graph-pairs") {
    Universe<GraphPair> u;
    u.name = std::move(name);
    u.enumerate = [corpus](std::uint64_t p) {
        auto [a, b] = cantor_unpair(p);
        if (a == 0 || a > corpus->size() || b == 0 || b > corpus->size())
            throw std::out_of_range("graphpair universe index");
        return GraphPair{(*corpus)[a - 1], (*corpus)[b - 1]};
    };
    u.encode = [](const GraphPair& x) {
        return encode_graph6(canonical_form(x.first)) + "|" +
               encode_graph6(canonical_form(x.second));
    };
    return u;
}

// Truncation of the pair universe covering every (G, k) with G in the
// first `graphs` corpus entries and k <= max_k, in enumeration order.
inline Truncation<GraphNat> graphnat_truncation(const Universe<GraphNat>& u, std::uint64_t graphs,
                                                std::uint64_t max_k, int max_n = -1) {
    const std::uint64_t scan = cantor_index(graphs, max_k + 1) + graphs + max_k + 2;
    Truncation<GraphNat> out;
    for (std::uint64_t p = 1; p <= scan; ++p) {
        auto [a, b] = cantor_unpair(p);
        if (a == 0 || a > graphs || b == 0 || b > max_k + 1) continue;
        GraphNat x = u.enumerate(p);
        if (max_n >= 0 && x.graph.n() > max_n) continue;
        out.push_back({p, std::move(x)});
    }
    return out;
}

// ---- Languages -----------------------------------------------------------

inline Language<GraphNat> vc_language() {
    return {"VC", [](const GraphNat& x) { return vc_number(x.graph) <= int(x.k); }};
}

inline Language<GraphNat> ds_language() {
    return {"DS", [](const GraphNat& x) { return ds_number(x.graph) <= int(x.k); }};
}

inline Language<GraphNat> clique_language() {
    return {"Clique", [](const GraphNat& x) { return clique_number(x.graph) >= int(x.k); }};
}

inline Language<GraphNat> is_language() {
    return {"IS", [](const GraphNat& x) { return independence_number(x.graph) >= int(x.k); }};
}

inline Language<GraphPair> gi_language() {
    return {"GI", [](const GraphPair& x) { return oracle_iso(x.first, x.second); }};
}

// ---- Parameters ----------------------------------------------------------

inline Parameter<Graph> degeneracy_param() {
    return {"degeneracy", [](const Graph& g, Meter& m) { return std::uint64_t(degeneracy(g, m)); }};
}

inline Parameter<Graph> arboricity_param() {
    return {"arboricity", [](const Graph& g, Meter& m) { return std::uint64_t(arboricity(g, m)); }};
}

inline Parameter<Graph> treewidth_param() {
    return {"treewidth", [](const Graph& g, Meter& m) {
                m.tick(std::uint64_t(1) << g.n());
                return std::uint64_t(treewidth(g));
            }};
}

inline Parameter<Graph> hadwiger_param() {
    return {"hadwiger", [](const Graph& g, Meter& m) {
                m.tick(std::uint64_t(g.edge_count() + 1));
                return std::uint64_t(hadwiger(g));
            }};
}

inline Parameter<Graph> kij_param() {
    return {"kij-index", [](const Graph& g, Meter& m) {
                m.tick(std::uint64_t(g.n() + 1));
                return std::uint64_t(kij_index(g));
            }};
}

// Component parameters on pairs.
inline Parameter<GraphNat> graph_part(const Parameter<Graph>& p) {
    return {p.name + "(G)",
            [p](const GraphNat& x, Meter& m) { return p.eval(x.graph, m); }};
}

// Index of the numeric part under the naturals enumeration: k + 1.
inline Parameter<GraphNat> k_index_param() {
    return {"k-index", [](const GraphNat& x, Meter& m) {
                m.tick();
                return x.k + 1;
            }};
}

// Solution-size parameter, shifted so values start at 1 (value vc(G)+1);
// slice i then covers instances whose cover number is below i.
inline Parameter<GraphNat> vc_size_param() {
    return {"vc-size", [](const GraphNat& x, Meter& m) {
                const std::uint64_t n = std::uint64_t(x.graph.n());
                m.tick((std::uint64_t(1) << n) / (n ? n : 1) + 1);
                return std::uint64_t(vc_number(x.graph)) + 1;
            }};
}

// The paper's standard parameterization of solution-size problems:
// anything on the graph part, finite on the numeric part.
inline Parameterization<GraphNat> all_times_fin(const std::string& universe_name) {
    return {k_index_param(), "canonical", universe_name};
}

// ---- Algorithm families --------------------------------------------------

namespace detail {

inline bool vc_branch(const Graph& g, std::uint64_t budget, Meter& m) {
    m.tick();
    // find any edge
    int eu = -1, ev = -1;
    for (int v = 0; v < g.n() && eu < 0; ++v) {
        m.tick();
        const std::uint16_t nb = g.neighbors(v);
        if (nb) {
            eu = v;
            ev = std::countr_zero(nb);
        }
    }
    if (eu < 0) return true; // edgeless
    if (budget == 0) return false;
    Graph gu = g;
    for (int w = 0; w < g.n(); ++w)
        if (gu.has_edge(eu, w)) {
            gu.remove_edge(eu, w);
            m.tick();
        }
    if (vc_branch(gu, budget - 1, m)) return true;
    Graph gv = g;
    for (int w = 0; w < g.n(); ++w)
        if (gv.has_edge(ev, w)) {
            gv.remove_edge(ev, w);
            m.tick();
        }
    return vc_branch(gv, budget - 1, m);
}

inline bool ds_branch(const Graph& g, std::uint16_t dominated, std::uint64_t budget, Meter& m) {
    m.tick();
    if (dominated == g.vertex_mask()) return true;
    if (budget == 0) return false;
    // lowest-closed-degree undominated vertex; any dominating set must
    // contain a member of its closed neighborhood
    int pick = -1, pick_size = Graph::max_vertices + 2;
    for (int v = 0; v < g.n(); ++v) {
        if ((dominated >> v) & 1u) continue;
        m.tick();
        const int size = 1 + g.degree(v);
        if (size < pick_size) {
            pick_size = size;
            pick = v;
        }
    }
    std::uint16_t cands = std::uint16_t(g.neighbors(pick) | (1u << pick));
    while (cands) {
        const int u = std::countr_zero(cands);
        cands &= std::uint16_t(cands - 1);
        m.tick();
        if (ds_branch(g, std::uint16_t(dominated | g.neighbors(u) | (1u << u)), budget - 1, m))
            return true;
    }
    return false;
}

} // namespace detail

// Exact bounded-depth branching when the instance budget k' is within the
// family index; answers no beyond it (one-sided for VC).
inline Solver<GraphNat> vc_family_member(std::uint64_t k) {
    return {"A_" + std::to_string(k), [k](const GraphNat& x, Meter& m) {
                m.tick();
                if (x.k > k) return false;
                return detail::vc_branch(x.graph, x.k, m);
            }};
}

inline AlgorithmFamily<GraphNat> vc_family() {
    return AlgorithmFamily<GraphNat>("vc-branching", vc_family_member);
}

// Diagonal dominating-set family A_{j,j}: degeneracy-guided branching,
// correct whenever degeneracy(G) <= j and k' <= j, answers no otherwise.
inline Solver<GraphNat> ds_family_member(std::uint64_t j) {
    return {"A_" + std::to_string(j) + "," + std::to_string(j),
            [j](const GraphNat& x, Meter& m) {
                if (x.k > j) {
                    m.tick();
                    return false;
                }
                if (std::uint64_t(degeneracy(x.graph, m)) > j) return false;
                return detail::ds_branch(x.graph, 0, x.k, m);
            }};
}

inline AlgorithmFamily<GraphNat> ds_family() {
    return AlgorithmFamily<GraphNat>("ds-degeneracy-branching", ds_family_member);
}

// W_k as a solver for the isomorphism language: answers yes on
// same-colors, so a yes may be wrong outside the promise while
// "distinguished" is always sound.
inline Solver<GraphPair> wl_family_member(std::uint64_t k) {
    if (k < 1 || k > 3) throw std::domain_error("wl family: index must be in 1..3");
    return {"W_" + std::to_string(k), [k](const GraphPair& x, Meter& m) {
                return wl(int(k), x.first, x.second, m) == WlVerdict::same_colors;
            }};
}

inline AlgorithmFamily<GraphPair> wl_family() {
    return AlgorithmFamily<GraphPair>("weisfeiler-lehman", wl_family_member);
}

// Complement translation (G, k) -> (complement G, k); the classical
// reduction between Clique and IS in both directions.
inline PromiseReductionFn<GraphNat, GraphNat> complement_translation() {
    return {"complement", [](const GraphNat& x, Meter& m) {
                m.tick(std::uint64_t(x.graph.n()) * std::uint64_t(x.graph.n() ? x.graph.n() : 1));
                return GraphNat{x.graph.complement(), x.k};
            }};
}

// Ungated complement reduction: every r_i is the complement translation,
// so coherence is immediate and the image of slice i is exactly slice i.
inline UniformReduction<GraphNat, GraphNat> complement_reduction() {
    UniformReduction<GraphNat, GraphNat> red(
        "complement", [](std::uint64_t) { return complement_translation(); }, k_index_param());
    red.f = [](std::uint64_t) { return std::uint64_t(1); };
    red.c = 2;
    return red;
}

} // namespace parakit
