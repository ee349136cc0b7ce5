#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "parakit/enumerate.hpp"
#include "parakit/graph.hpp"
#include "parakit/graph6.hpp"
#include "parakit/oracles.hpp"

using namespace parakit;

TEST_CASE("named graphs have the expected shape") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(star_graph(4).n() == 5);
    CHECK(complete_bipartite(2, 2).edge_count() == 4);
    CHECK(edgeless_graph(3).edge_count() == 0);
    CHECK(disjoint_union(cycle_graph(3), cycle_graph(3)).n() == 6);
}

TEST_CASE("contract merges and deletes") {
    Graph p3 = path_graph(3);
    Graph c = p3.contract(1, 2); // path 0-1-2, merge 2 into 1
    CHECK(c.n() == 2);
    CHECK(c.edge_count() == 1);

    Graph k3 = complete_graph(3);
    Graph c2 = k3.contract(0, 1);
    CHECK(c2.n() == 2);
    CHECK(c2.edge_count() == 1);
}

TEST_CASE("graph6 smallest cases") {
    // "A_" is the single edge on two vertices
    Graph g = decode_graph6("A_");
    CHECK(g.n() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(encode_graph6(g) == "A_");

    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(decode_graph6("@").n() == 1);
    CHECK(encode_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 malformed input reports the byte offset") {
    // truncated: K4 needs one edge byte after the size byte
    try {
        decode_graph6("C");
        FAIL("expected parse error");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 1);
    }
    // bad byte inside edge data
    try {
        decode_graph6(std::string("A") + char(30));
        FAIL("expected parse error");
    } catch (const Graph6ParseError& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(decode_graph6("A_x"), Graph6ParseError);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(20240811);
    auto corpus = graph_corpus(5);
    for (const Graph& g : corpus) {
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 4; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = permute(g, perm);
            CHECK(canonical_key(h) == canonical_key(g));
            CHECK(encode_graph6(canonical_form(h)) == encode_graph6(canonical_form(g)));
        }
    }
}

TEST_CASE("corpus strata match the known counts") {
    auto corpus = graph_corpus(6);
    std::map<int, int> per_n;
    for (const Graph& g : corpus) per_n[g.n()]++;
    CHECK(per_n[1] == 1);
    CHECK(per_n[2] == 2);
    CHECK(per_n[3] == 4);
    CHECK(per_n[4] == 11);
    CHECK(per_n[5] == 34);
    CHECK(per_n[6] == 156);
    CHECK(corpus.size() == 208);
}

TEST_CASE("corpus n<=4 agrees with labeled enumeration deduplicated by the iso oracle") {
    // independent route: enumerate all labeled graphs on 4 vertices and
    // group them by oracle_iso
    std::vector<Graph> reps;
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
        Graph g(4);
        int b = 0;
        for (int j = 1; j < 4; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if ((bits >> b) & 1u) g.add_edge(i, j);
        bool fresh = true;
        for (const Graph& r : reps)
            if (oracle_iso(r, g)) fresh = false;
        if (fresh) reps.push_back(g);
    }
    CHECK(reps.size() == 11);
    CHECK(nonisomorphic_graphs_exactly(4).size() == 11);
}

TEST_CASE("corpus order is deterministic and sorted by (n, graph6 word)") {
    auto corpus = graph_corpus(5);
    for (std::size_t i = 1; i < corpus.size(); ++i) {
        const Graph &a = corpus[i - 1], &b = corpus[i];
        const bool ordered =
            a.n() < b.n() || (a.n() == b.n() && encode_graph6(a) < encode_graph6(b));
        REQUIRE(ordered);
    }
    // all entries canonical and distinct
    std::set<std::string> words;
    for (const Graph& g : corpus) {
        CHECK(encode_graph6(canonical_form(g)) == encode_graph6(g));
        words.insert(encode_graph6(g));
    }
    CHECK(words.size() == corpus.size());
}

TEST_CASE("graph6 round-trips across the corpus") {
    for (const Graph& g : graph_corpus(6)) {
        const std::string w = encode_graph6(g);
        CHECK(encode_graph6(decode_graph6(w)) == w);
    }
}

TEST_CASE("iso oracle") {
    Graph c5 = cycle_graph(5);
    Graph c5r = permute(c5, {2, 4, 0, 3, 1});
    CHECK(oracle_iso(c5, c5r));
    CHECK_FALSE(oracle_iso(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK_FALSE(oracle_iso(path_graph(4), star_graph(3)));
}

TEST_CASE("hamiltonian oracle") {
    CHECK(oracle_hamiltonian(complete_graph(4)));
    CHECK_FALSE(oracle_hamiltonian(star_graph(3)));
    CHECK(oracle_hamiltonian(cycle_graph(5)));
    CHECK_FALSE(oracle_hamiltonian(path_graph(5)));
    CHECK_FALSE(oracle_hamiltonian(complete_graph(2)));
}
