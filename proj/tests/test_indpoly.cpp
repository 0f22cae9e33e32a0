#include <random>

#include "doctest.h"

#include "covreg/enumerate.hpp"
#include "covreg/families.hpp"
#include "covreg/indpoly.hpp"

using namespace covreg;

TEST_CASE("independence polynomial examples") {
    CHECK(independence_polynomial(parse_edge_list("4:0-1,1-2,2-3")) == IntPoly{1, 4, 3});
    CHECK(independence_polynomial(parse_edge_list("4:0-1,0-2,0-3")) == IntPoly{1, 4, 3, 1});
    CHECK(independence_polynomial(parse_edge_list("4:0-1,1-2,2-3,0-3")) == IntPoly{1, 4, 2});
    CHECK(independence_polynomial(Graph(5)) == IntPoly::one_plus_x_pow(5));
    CHECK(independence_polynomial(parse_edge_list("5:0-1,1-2,2-3,3-4")) == IntPoly{1, 5, 6, 1});
}

TEST_CASE("bundle invariants") {
    InvariantBundle p4 = bundle(parse_edge_list("4:0-1,1-2,2-3"));
    CHECK(p4.alpha == 2);
    CHECK(p4.M == 1);
    CHECK(p4.gG == 1);
    CHECK(p4.c == -2);

    InvariantBundle c3 = bundle(parse_edge_list("3:0-1,1-2,0-2"));
    CHECK(c3.alpha == 1);
    CHECK(c3.M == 0);
    CHECK(c3.c == -2);
    CHECK(c3.gG == 3);  // 1 - P(-1) with P(-1) = -2

    InvariantBundle p5 = bundle(parse_edge_list("5:0-1,1-2,2-3,3-4"));
    CHECK(p5.alpha == 3);
    CHECK(p5.M == 0);
    CHECK(p5.gG == 0);  // P(-1) = 1

    CHECK(p4.gvec[0] == 1);
    CHECK(p4.gvec[1] == p4.n);
}

TEST_CASE("D and E coefficients") {
    InvariantBundle p4 = bundle(parse_edge_list("4:0-1,1-2,2-3"));
    CHECK(D_coeff(p4, 0) == -2);  // g_1 - 2 g_2
    CHECK(D_coeff(p4, 1) == 3);
    InvariantBundle c3 = bundle(parse_edge_list("3:0-1,1-2,0-2"));
    CHECK(D_coeff(c3, 0) == 3);
    CHECK_THROWS_AS(D_coeff(c3, 1), std::invalid_argument);

    CHECK(E_coeff(p4, -1) == 0);  // gG = 1
    InvariantBundle c5 = bundle(parse_edge_list("5:0-1,1-2,2-3,3-4,0-4"));
    CHECK(c5.gG == 0);
    CHECK(E_coeff(c5, -1) == -1);
    InvariantBundle k13 = bundle(parse_edge_list("4:0-1,0-2,0-3"));
    CHECK(k13.gG == 2);
    CHECK(E_coeff(k13, -1) == 1);  // E_2 = gG - 1
    CHECK_THROWS_AS(E_coeff(p4, 0), std::invalid_argument);  // alpha - 3 < 0

    // D_{alpha-1} is a single term, so it never vanishes.
    for (const Graph& g : enumerate_connected(5)) {
        InvariantBundle b = bundle(g);
        Int top = D_coeff(b, b.alpha - 1);
        CHECK(top != 0);
        CHECK((top == b.gvec[b.alpha] || top == -b.gvec[b.alpha]));
    }
}

TEST_CASE("M via the D_s sequence") {
    CHECK(M_via_Ds(bundle(parse_edge_list("4:0-1,1-2,2-3"))) == 1);
    CHECK(M_via_Ds(bundle(parse_edge_list("5:0-1,1-2,2-3,3-4"))) == 0);
    CHECK(M_via_Ds(bundle(Graph(3))) == 3);  // (1+x)^3
}

TEST_CASE("g-vector equals the subset brute force, exhaustive n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            InvariantBundle b = bundle(g);
            CHECK(gvector_bruteforce(g) == b.gvec);
            CHECK(M_via_Ds(b) == b.M);
            if (g.has_any_edge()) CHECK(b.M <= b.alpha - 1);
        }
}

TEST_CASE("isolated vertices shift alpha and M together") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> nd(2, 8);
    std::uniform_real_distribution<double> pd(0.2, 0.8);
    for (int t = 0; t < 50; ++t) {
        int n = nd(rng);
        Graph g(n);
        std::uniform_real_distribution<double> coin(0, 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng) < pd(rng)) g.add_edge(a, b);
        InvariantBundle before = bundle(g);
        InvariantBundle after = bundle(disjoint_union(g, Graph(1)));
        CHECK(after.alpha == before.alpha + 1);
        CHECK(after.M == before.M + 1);
        CHECK(after.alpha - after.M == before.alpha - before.M);
        CHECK(after.c == before.c);
    }
}

TEST_CASE("non-monotone M under induced subgraphs is expected") {
    // M(P_4) = 1 exceeds both M(P_3) and M(P_5).
    CHECK(bundle(parse_edge_list("3:0-1,1-2")).M == 0);
    CHECK(bundle(parse_edge_list("4:0-1,1-2,2-3")).M == 1);
    CHECK(bundle(parse_edge_list("5:0-1,1-2,2-3,3-4")).M == 0);
}
