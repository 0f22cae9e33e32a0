#include <random>

#include "doctest.h"

#include "covreg/betti.hpp"
#include "covreg/enumerate.hpp"
#include "covreg/indpoly.hpp"

using namespace covreg;

TEST_CASE("independence complexes") {
    SimplicialComplex p4 = independence_complex(parse_edge_list("4:0-1,1-2,2-3"));
    std::vector<VertexSet> expect = {vbit(0) | vbit(2), vbit(0) | vbit(3), vbit(1) | vbit(3)};
    CHECK(p4.facets == expect);

    SimplicialComplex k3 = independence_complex(parse_edge_list("3:0-1,1-2,0-2"));
    CHECK(k3.facets == std::vector<VertexSet>{vbit(0), vbit(1), vbit(2)});

    SimplicialComplex c4 = independence_complex(parse_edge_list("4:0-1,1-2,2-3,0-3"));
    CHECK(c4.facets == std::vector<VertexSet>{vbit(0) | vbit(2), vbit(1) | vbit(3)});
}

TEST_CASE("reduced homology ranks") {
    auto q = FieldOpt::rationals();
    // Three points: H~_0 has rank 2.
    auto r = reduced_homology_ranks(independence_complex(parse_edge_list("3:0-1,1-2,0-2")), q);
    CHECK(r[0] == 0);
    CHECK(r[1] == 2);
    // Two disjoint edges: connected complexes minus one.
    r = reduced_homology_ranks(independence_complex(parse_edge_list("4:0-1,1-2,2-3,0-3")), q);
    CHECK(r[1] == 1);
    CHECK(r[2] == 0);
    // Full simplex: contractible.
    r = reduced_homology_ranks(independence_complex(Graph(4)), q);
    for (long x : r) CHECK(x == 0);
    // The empty-set complex has H~_{-1} = 1.
    SimplicialComplex empty_cx;
    empty_cx.n = 0;
    empty_cx.facets = {0};
    r = reduced_homology_ranks(empty_cx, q);
    CHECK(r[0] == 1);
    // Void complex: nothing at all.
    SimplicialComplex void_cx;
    CHECK(reduced_homology_ranks(void_cx, q).empty());
    // Hollow square (C_4 as a complex boundary): one circle.
    SimplicialComplex sq;
    sq.n = 4;
    sq.facets = {0b0011, 0b0110, 0b1100, 0b1001};
    r = reduced_homology_ranks(sq, q);
    CHECK(r[1] == 0);
    CHECK(r[2] == 1);
}

TEST_CASE("GF(p) coefficients") {
    auto f2 = FieldOpt::prime(2);
    auto r = reduced_homology_ranks(independence_complex(parse_edge_list("3:0-1,1-2,0-2")), f2);
    CHECK(r[1] == 2);
    CHECK_THROWS_AS(FieldOpt::prime(6), std::invalid_argument);
    // Rational and F_p tables agree on the small census (no torsion there).
    for (const Graph& g : enumerate_connected(5)) {
        CHECK(hochster_table(g, FieldOpt::rationals()).entries ==
              hochster_table(g, FieldOpt::prime(2)).entries);
    }
}

TEST_CASE("hochster tables") {
    BettiTable c3 = hochster_table(parse_edge_list("3:0-1,1-2,0-2"));
    CHECK(c3.entries.at({0, 0}) == 1);
    CHECK(c3.entries.at({1, 2}) == 3);
    CHECK(c3.entries.at({2, 3}) == 2);
    CHECK(c3.pdim() == 2);

    BettiTable k2 = hochster_table(parse_edge_list("2:0-1"));
    CHECK(k2.entries.at({1, 2}) == 1);
    CHECK(k2.pdim() == 1);

    CHECK(hochster_table(parse_edge_list("4:0-1,1-2,2-3")).pdim() == 2);
    CHECK(hochster_pdim(parse_edge_list("4:0-1,1-2,2-3")) == 2);

    // reg of the edge ideal of C_5 is 1 (its complex is a 5-cycle).
    BettiTable c5 = hochster_table(parse_edge_list("5:0-1,1-2,2-3,3-4,0-4"));
    CHECK(c5.reg() == 2);  // includes the top homology of the pentagon complex
    CHECK(c5.pdim() == 3);
}

TEST_CASE("reg_cover and the chordal fast path") {
    CHECK(reg_cover(parse_edge_list("3:0-1,1-2,0-2")) == 1);
    CHECK(reg_cover(parse_edge_list("3:0-1,1-2")) == 1);
    CHECK(reg_cover(parse_edge_list("4:0-1,1-2,2-3")) == 1);
    Graph k14 = parse_edge_list("5:0-1,0-2,0-3,0-4");
    CHECK(reg_cover(k14) == 3);  // star: pdim = B, reg = B - 1
    CHECK(chordal_reg_cover(k14, true) == 3);
    CHECK(chordal_reg_cover(parse_edge_list("4:0-1,1-2,2-3"), true) == 1);
    CHECK_THROWS_AS(chordal_reg_cover(parse_edge_list("4:0-1,1-2,2-3,0-3")), std::invalid_argument);
    CHECK_THROWS_AS(reg_cover(Graph(3)), std::invalid_argument);
}

TEST_CASE("independent domination number") {
    CHECK(i_number(parse_edge_list("4:0-1,0-2,0-3,1-2,1-3,2-3")) == 1);  // K_4
    CHECK(i_number(parse_edge_list("4:0-1,1-2,2-3,0-3")) == 2);          // C_4
    CHECK(i_number(Graph(3)) == 3);
    CHECK(i_number(Graph(0)) == 0);
}

TEST_CASE("euler characteristic") {
    SimplicialComplex pts;
    pts.n = 3;
    pts.facets = {vbit(0), vbit(1), vbit(2)};
    CHECK(euler_characteristic(pts) == 3);
    CHECK(euler_characteristic(independence_complex(parse_edge_list("4:0-1,1-2,2-3,0-3"))) == 2);
    CHECK(euler_characteristic(independence_complex(Graph(5))) == 1);  // full simplex

    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(euler_characteristic(independence_complex(g)) == bundle(g).gG);
}

TEST_CASE("homology alternating sum equals the reduced euler characteristic") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    for (int t = 0; t < 40; ++t) {
        Graph g(7);
        std::uniform_real_distribution<double> coin(0, 1);
        double p = pd(rng);
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                if (coin(rng) < p) g.add_edge(a, b);
        auto ranks = reduced_homology_ranks(independence_complex(g), FieldOpt::rationals());
        Int alt = 0;
        for (std::size_t k = 0; k < ranks.size(); ++k)
            alt += (k % 2 == 0 ? -ranks[k] : ranks[k]);  // index k is dimension k-1
        CHECK(alt == bundle(g).gG - 1);                  // reduced chi
    }
}

TEST_CASE("H_{7,3} has independent domination number 3") {
    // The p = 3, k = 0 member of the triangle-glued family.
    Graph h = parse_edge_list("7:0-1,0-2,0-3,0-4,1-5,2-6");
    CHECK(i_number(h) == 3);
    CHECK(chordal_reg_cover(h, true) == 3);
}
