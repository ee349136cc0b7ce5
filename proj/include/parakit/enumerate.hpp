#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "parakit/graph.hpp"
#include "parakit/graph6.hpp"
#include "parakit/universe.hpp"

namespace parakit {

// Cumulative corpus of all non-isomorphic graphs, strata n = 1..max_n,
// each stratum in canonical form sorted by graph6 word. Built by extending
// the previous stratum with every neighborhood of a fresh vertex and
// deduplicating canonically; every n-vertex graph arises from deleting its
// last vertex, so the extension step is exhaustive.
inline std::vector<Graph> graph_corpus(int max_n) {
    std::vector<Graph> out;
    if (max_n < 1) return out;
    std::vector<Graph> stratum = {Graph(1)};
    out.push_back(Graph(1));
    for (int m = 2; m <= max_n; ++m) {
        std::map<std::string, Graph> seen;
        for (const Graph& g : stratum) {
            for (std::uint32_t mask = 0; mask < (1u << (m - 1)); ++mask) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if ((mask >> u) & 1u) h.add_edge(u, m - 1);
                Graph c = canonical_form(h);
                seen.emplace(encode_graph6(c), c);
            }
        }
        stratum.clear();
        for (auto& [w, g] : seen) {
            stratum.push_back(g);
            out.push_back(g);
        }
    }
    return out;
}

inline std::vector<Graph> nonisomorphic_graphs_exactly(int n) {
    std::vector<Graph> out;
    for (const Graph& g : graph_corpus(n))
        if (g.n() == n) out.push_back(g);
    return out;
}

inline void write_corpus(const std::vector<Graph>& corpus, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open corpus file for writing: " + path);
    for (const Graph& g : corpus) f << encode_graph6(g) << '\n';
}

inline std::vector<Graph> read_corpus(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

// Universe over a fixed corpus vector; enumeration order is corpus order.
inline Universe<Graph> graph_universe(std::shared_ptr<const std::vector<Graph>> corpus,
                                      std::string name = "graphs") {
    Universe<Graph> u;
    u.name = std::move(name);
    u.enumerate = [corpus](std::uint64_t i) {
        if (i == 0 || i > corpus->size())
            throw std::out_of_range("graph universe index " + std::to_string(i));
        return (*corpus)[i - 1];
    };
    u.encode = [](const Graph& g) { return encode_graph6(canonical_form(g)); };
    return u;
}

inline std::shared_ptr<const std::vector<Graph>> shared_corpus(int max_n) {
    return std::make_shared<const std::vector<Graph>>(graph_corpus(max_n));
}

} // namespace parakit
