#include <random>

#include "doctest.h"

#include "covreg/enumerate.hpp"
#include "covreg/hilbert.hpp"

using namespace covreg;

namespace {
InvariantBundle bun(const char* el) { return bundle(parse_edge_list(el)); }
}  // namespace

TEST_CASE("h-polynomial of the edge ideal, both forms") {
    InvariantBundle p4 = bun("4:0-1,1-2,2-3");
    CHECK(h_edge_fvector(p4) == IntPoly{1, 2});
    CHECK(h_edge_Ds(p4) == IntPoly{1, 2});
    InvariantBundle c3 = bun("3:0-1,1-2,0-2");
    CHECK(h_edge_fvector(c3) == IntPoly{1, 2});
    CHECK(h_edge_Ds(c3) == IntPoly{1, 2});
    CHECK(h_edge_fvector(bundle(Graph(4))) == IntPoly{1});  // polynomial ring
    CHECK(h_edge_Ds(bundle(Graph(2))) == IntPoly{1});
}

TEST_CASE("cover Hilbert function: closed form and oracle") {
    InvariantBundle c3 = bun("3:0-1,1-2,0-2");
    CHECK(hf_cover(3, c3.gvec, 1) == 3);
    CHECK(hf_cover(3, c3.gvec, 2) == 3);
    CHECK(hf_cover_oracle(parse_edge_list("3:0-1,1-2,0-2"), 1) == 3);
    CHECK(hf_cover_oracle(parse_edge_list("3:0-1,1-2,0-2"), 2) == 3);

    InvariantBundle p4 = bun("4:0-1,1-2,2-3");
    CHECK(hf_cover(4, p4.gvec, 1) == 4);
    CHECK(hf_cover_oracle(parse_edge_list("4:0-1,1-2,2-3"), 1) == 4);

    // J(K_2) is the maximal ideal: HF vanishes in positive degrees.
    Graph k2 = parse_edge_list("2:0-1");
    CHECK(hf_cover_oracle(k2, 3) == 0);
    CHECK(hf_cover(2, bundle(k2).gvec, 3) == 0);
    CHECK_THROWS_AS(hf_cover(3, c3.gvec, 0), std::invalid_argument);
}

TEST_CASE("h_cover profiles") {
    HilbertProfile c3 = h_cover(bun("3:0-1,1-2,0-2"));
    CHECK(c3.h == IntPoly{1, 2});
    CHECK(c3.deg_h == 1);
    CHECK(c3.a_invariant == 0);

    HilbertProfile p4 = h_cover(bun("4:0-1,1-2,2-3"));
    CHECK(p4.h == IntPoly{1, 2});
    CHECK(p4.deg_h == 1);
    CHECK(p4.a_invariant == -1);

    HilbertProfile k2 = h_cover(bun("2:0-1"));
    CHECK(k2.h == IntPoly{1});
    CHECK(k2.deg_h == 0);
    CHECK(k2.dim == 0);

    CHECK_THROWS_AS(h_cover(bundle(Graph(3))), std::invalid_argument);  // edgeless
}

TEST_CASE("hypergraph duals") {
    // One 3-edge on 3 vertices.
    Hypergraph tri(3, {0b111});
    HilbertProfile h = h_dual_hypergraph(tri);
    CHECK(h.h == IntPoly{1});
    CHECK(h.dim == 0);

    // The 2-uniform hypergraph of C_3 specializes to the cover ideal.
    Hypergraph c3h(3, {0b011, 0b110, 0b101});
    CHECK(h_dual_hypergraph(c3h).h == h_cover(bun("3:0-1,1-2,0-2")).h);

    // Mixed edge sizes, checked against the brute-force series.
    Hypergraph mix(3, {0b011, 0b100});
    HilbertProfile hm = h_dual_hypergraph(mix);
    CHECK(hm.dim == 2);
    CHECK(series_h_extract(hf_dual_oracle_series(mix, 14), hm.dim) == hm.h);

    // Minimization drops edges that contain other edges.
    Hypergraph red(3, {0b011, 0b111});
    CHECK(red.edges.size() == 1);
    CHECK_THROWS_AS(Hypergraph(3, {0}), std::invalid_argument);
    CHECK_THROWS_AS(h_dual_hypergraph(Hypergraph(3, {})), std::invalid_argument);
}

TEST_CASE("hypergraph duals against the series oracle on random hypergraphs") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> nd(2, 7);
    for (int t = 0; t < 120; ++t) {
        int n = nd(rng);
        std::uniform_int_distribution<int> ed(1, 2 * n);
        std::uniform_int_distribution<VertexSet> sd(1, vall(n));
        std::vector<VertexSet> edges;
        int m = ed(rng);
        for (int k = 0; k < m; ++k) edges.push_back(sd(rng));
        Hypergraph h(n, edges);
        if (h.edges.empty()) continue;
        HilbertProfile prof = h_dual_hypergraph(h);
        int len = 2 * n + 3;
        CHECK(series_h_extract(hf_dual_oracle_series(h, len), prof.dim) == prof.h);
    }
}

TEST_CASE("degree report cases") {
    DegreeReport c3 = degree_report(bun("3:0-1,1-2,0-2"));
    CHECK(c3.kind == DegreeCase::Max);  // gG = 3 != 1
    CHECK(c3.deg_h_cover == 1);

    DegreeReport p4 = degree_report(bun("4:0-1,1-2,2-3"));
    CHECK(p4.kind == DegreeCase::Floor);
    CHECK(p4.deg_h_cover == 1);

    DegreeReport k13 = degree_report(bun("4:0-1,0-2,0-3"));
    CHECK(k13.kind == DegreeCase::Max);  // gG = 2
    CHECK(k13.deg_h_cover == 2);

    // An intermediate case: P_4 with one extra pendant at an end has gG = 1
    // with a nonvanishing E_3.
    for (const Graph& g : enumerate_connected(6)) {
        InvariantBundle b = bundle(g);
        if (b.gG != 1 || b.M != 1 || b.alpha < 4) continue;
        DegreeReport rep = degree_report(b);
        CHECK(rep.kind == DegreeCase::Intermediate);
        CHECK(rep.d == b.M - 1);
        break;
    }
}

TEST_CASE("thm-level degree identities on the n <= 6 census") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            InvariantBundle b = bundle(g);
            HilbertProfile hj = h_cover(b);
            IntPoly hi = h_edge_fvector(b);
            CHECK(hj.deg_h == g.n - 2 - b.M);
            CHECK(hi.degree() == b.alpha - b.M);
            CHECK(hj.a_invariant == -b.M);
            // deg alignment between the two ideals
            CHECK(hi.degree() - b.alpha == hj.deg_h - (g.n - 2));
            // max degree iff gG != 1
            CHECK((hj.deg_h == g.n - 2) == (b.gG != 1));
            // no-cancellation: the staircase part is intact
            for (int k = 0; k <= g.n - b.alpha - 1; ++k) CHECK(hj.h.coeff(k) == k + 1);
        }
}
