#include <random>

#include "doctest.h"

#include "covreg/betti.hpp"
#include "covreg/enumerate.hpp"
#include "covreg/families.hpp"
#include "covreg/recursions.hpp"

using namespace covreg;

TEST_CASE("jk_pdim examples") {
    CHECK(jk_pdim(parse_edge_list("4:0-1,1-2,2-3")) == 2);
    CHECK(jk_pdim(parse_edge_list("5:0-1,0-2,0-3,0-4")) == 4);  // star K_{1,4}
    // Radius-2 tree with L1 = 2 branches of one leaf each: max{B, L2+1} = 4.
    CHECK(jk_pdim(build_radius2(Radius2Spec(2, {1, 1}))) == 4);
    CHECK(jk_pdim(Graph(5)) == 0);
    CHECK(jk_pdim(parse_edge_list("4:0-1,2-3")) == 2);  // additive over components
    CHECK_THROWS_AS(jk_pdim(parse_edge_list("3:0-1,1-2,0-2")), std::invalid_argument);
}

TEST_CASE("jk_alpha_M examples") {
    JkAlphaM p4 = jk_alpha_M(parse_edge_list("4:0-1,1-2,2-3"));
    CHECK(p4.alpha == 2);
    CHECK(p4.M == 1);
    CHECK(p4.c == -2);
    JkAlphaM p5 = jk_alpha_M(parse_edge_list("5:0-1,1-2,2-3,3-4"));
    CHECK(p5.alpha == 3);
    CHECK(p5.M == 0);
    CHECK(p5.c == 1);
    JkAlphaM k2 = jk_alpha_M(parse_edge_list("2:0-1"));
    CHECK(k2.alpha == 1);
    CHECK(k2.M == 0);
    CHECK(k2.c == -1);
    CHECK_THROWS_AS(jk_alpha_M(parse_edge_list("4:0-1,1-2,2-3,0-3")), std::invalid_argument);
}

TEST_CASE("recursions agree with direct computation on all trees n <= 8") {
    long fallbacks = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : free_trees(n)) {
            CHECK(jk_pdim(t) == hochster_pdim(t));
            JkAlphaM jk = jk_alpha_M(t);
            InvariantBundle b = bundle(t);
            CHECK(jk.alpha == b.alpha);
            CHECK(jk.M == b.M);
            CHECK(jk.c == b.c);
            if (jk.fallback) ++fallbacks;
        }
    // The equal-order equal-lead case occurs, and only then is the flag set.
    CHECK(fallbacks > 0);
}

TEST_CASE("jk split structure") {
    Graph star = parse_edge_list("4:0-1,0-2,0-3");
    JKSplit s = jk_split(star, star.vertices());
    CHECK(s.pivot == 0);
    CHECK(vcount(s.leaves) == 2);
    CHECK(s.fdoubleprime == 0);
    CHECK(vcount(s.fprime_mult) == 1);
    CHECK(vcount(s.fprime_pdim) == 3);
}

TEST_CASE("leaf clique decomposition") {
    LeafCliqueSplit p4 = leaf_clique_decompose(parse_edge_list("4:0-1,1-2,2-3"));
    CHECK(p4.r == 1);
    CHECK(vcount(p4.K) == 2);

    Graph bow = parse_edge_list("5:0-1,1-2,0-2,2-3,3-4,2-4");  // two triangles at 2
    LeafCliqueSplit b = leaf_clique_decompose(bow);
    CHECK(b.s == 2);
    CHECK(b.r == 2);
    CHECK(vcount(b.L) == 0);  // the cut vertex dominates everything

    CHECK_THROWS_AS(leaf_clique_decompose(parse_edge_list("4:0-1,0-2,0-3,1-2,1-3,2-3")),
                    std::invalid_argument);  // a clique has no split
    CHECK_THROWS_AS(leaf_clique_decompose(parse_edge_list("4:0-1,1-2,2-3,0-3")),
                    std::invalid_argument);  // not a block graph
    CHECK_THROWS_AS(leaf_clique_decompose(parse_edge_list("4:0-1,2-3")), std::invalid_argument);
}

TEST_CASE("block graph checks") {
    BlockCheckReport clique = block_check(parse_edge_list("4:0-1,0-2,0-3,1-2,1-3,2-3"));
    CHECK(clique.M == 0);
    CHECK(clique.i == 1);
    CHECK(clique.satisfied);

    BlockCheckReport p4 = block_check(parse_edge_list("4:0-1,1-2,2-3"), true);
    CHECK(p4.M == 1);
    CHECK(p4.i == 2);
    CHECK(p4.satisfied);
    CHECK(p4.poly_identity);
    CHECK(p4.i_recursion);
    CHECK(!p4.trace.empty());
}

TEST_CASE("random block graphs satisfy M <= i") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> kd(2, 4);
    for (int t = 0; t < 60; ++t) {
        // Grow a block graph by gluing random cliques at random vertices.
        Graph g(1);
        while (g.n <= 12 - 2) {
            int k = kd(rng);
            if (g.n + k - 1 > 12) break;
            std::uniform_int_distribution<int> vd(0, g.n - 1);
            int glue = vd(rng);
            Graph h(g.n + k - 1);
            for (int v = 0; v < g.n; ++v) h.adj[v] = g.adj[v];
            std::vector<int> kl = {glue};
            for (int j = 0; j < k - 1; ++j) kl.push_back(g.n + j);
            for (std::size_t a = 0; a < kl.size(); ++a)
                for (std::size_t b = a + 1; b < kl.size(); ++b) h.add_edge(kl[a], kl[b]);
            g = h;
        }
        if (!g.has_any_edge()) continue;
        REQUIRE(classify(g).block_graph);
        BlockCheckReport rep = block_check(g);
        CHECK(rep.satisfied);
        CHECK(rep.poly_identity);
        CHECK(rep.i_recursion);
        CHECK(rep.reg_minus_deg <= 1);
    }
}
