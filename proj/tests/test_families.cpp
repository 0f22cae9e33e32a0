#include "doctest.h"

#include "covreg/betti.hpp"
#include "covreg/families.hpp"
#include "covreg/hilbert.hpp"

using namespace covreg;

TEST_CASE("radius-2 predictions") {
    Radius2Spec p4spec(1, {1});
    Graph p4 = build_radius2(p4spec);
    CHECK(p4.n == 4);
    Prediction pred = predict_radius2(p4spec);
    CHECK(*pred.pdim == 2);
    CHECK(*pred.M == 1);
    CHECK(*pred.deg_h_cover == 1);
    CHECK(prediction_mismatches(pred, measure_graph(p4)).empty());

    Radius2Spec star(4, {});
    pred = predict_radius2(star);
    CHECK(*pred.pdim == 4);
    CHECK(*pred.M == 0);
    CHECK(*pred.deg_h_cover == 3);
    CHECK(prediction_mismatches(pred, measure_graph(build_radius2(star))).empty());

    // K_{1,3} described from a non-center root: L1 = 0, ts = [2].
    Radius2Spec rerooted(0, {2});
    pred = predict_radius2(rerooted);
    CHECK(*pred.pdim == 3);
    CHECK(*pred.M == 0);
    CHECK(*pred.deg_h_cover == 2);
    CHECK(prediction_mismatches(pred, measure_graph(build_radius2(rerooted))).empty());
}

TEST_CASE("radius-2 realizable pairs at n = 9") {
    std::set<RegDegPair> expect = {{4, 3}, {4, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 5},
                                   {5, 6}, {5, 7}, {6, 6}, {6, 7}, {7, 7}};
    CHECK(radius2_pairs(9) == expect);

    Radius2Spec w = radius2_witness(9, 4, 3);
    CHECK(w.L1 == 3);
    CHECK(w.L2() == 3);
    CHECK(w.m() == 2);
    Measured meas = measure_graph(build_radius2(w));
    CHECK(*meas.reg_cover == 4);
    CHECK(*meas.deg_h_cover == 3);

    Radius2Spec star = radius2_witness(9, 7, 7);
    CHECK(star.L1 == 8);
    CHECK(star.m() == 0);

    CHECK_THROWS_AS(radius2_witness(9, 3, 3), std::invalid_argument);
}

TEST_CASE("split predictions") {
    // H_{4,4}: K_4 with 4 pendants per clique vertex.
    Graph h44 = build_Hpq(4, 4);
    CHECK(h44.n == 20);
    Prediction pred = predict_Hpq(4, 4);
    CHECK(*pred.M == 12);
    CHECK(*pred.pdim == 7);
    CHECK(*pred.reg_cover == 6);
    CHECK(*pred.deg_h_cover == 6);
    CHECK(prediction_mismatches(pred, measure_graph(h44)).empty());
    CHECK(prediction_mismatches(predict_split(h44), measure_graph(h44)).empty());

    // H_{2,1} = P_4 sits at (1,1).
    Graph h21 = build_Hpq(2, 1);
    Measured m21 = measure_graph(h21);
    CHECK(*m21.reg_cover == 1);
    CHECK(*m21.deg_h_cover == 1);

    // B_2 as a split graph.
    Graph b2 = build_Bk(2);
    Prediction ps = predict_split(b2);
    CHECK(*ps.M == 0);
    CHECK(*ps.P == IntPoly{1, 4, 2});
    CHECK(prediction_mismatches(ps, measure_graph(b2)).empty());
}

TEST_CASE("split realizable pairs") {
    std::set<RegDegPair> expect9 = {{3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}};
    CHECK(split_pairs(9) == expect9);
    CHECK(split_q_min(9) == 3);
    CHECK(split_pairs(4) == std::set<RegDegPair>{{1, 1}, {2, 2}});
    CHECK(split_pairs(2) == std::set<RegDegPair>{{0, 0}});

    SplitSpec top = split_witness(9, 7);
    Measured m = measure_graph(build_split(top));
    CHECK(*m.reg_cover == 7);
    SplitSpec w2 = split_witness(2, 0);  // K_2
    CHECK(build_split(w2).edge_count() == 1);
    CHECK(*measure_graph(build_split(w2)).reg_cover == 0);
}

TEST_CASE("B_k and G_{k,r}") {
    CHECK(*predict_Bk(2).P == IntPoly{1, 4, 2});
    CHECK(independence_polynomial(build_Bk(2)) == IntPoly{1, 4, 2});
    CHECK(build_Bk(1).n == 2);

    Graph g11 = build_Gkr(1, 1);
    CHECK(g11.n == 5);
    CHECK(independence_polynomial(g11) == IntPoly{1, 5, 4});
    Prediction p11 = predict_Gkr(1, 1);
    CHECK(*p11.M == 1);
    CHECK(prediction_mismatches(p11, measure_graph(g11)).empty());

    // n = 8 realizes (6,5) via k=1 and (6,4) via k=2.
    Measured m14 = measure_graph(build_Gkr(1, 4));
    CHECK(*m14.reg_cover == 6);
    CHECK(*m14.deg_h_cover == 5);
    Measured m22 = measure_graph(build_Gkr(2, 2));
    CHECK(*m22.reg_cover == 6);
    CHECK(*m22.deg_h_cover == 4);
    CHECK_THROWS_AS(build_Gkr(2, 1), std::invalid_argument);
}

TEST_CASE("H_{n,p}") {
    Measured m73 = measure_graph(build_Hnp(7, 3));
    CHECK(*m73.reg_cover == 3);
    CHECK(*m73.deg_h_cover == 2);
    CHECK(*m73.i == 3);
    CHECK(m73.M == 3);

    Measured m94 = measure_graph(build_Hnp(9, 4));
    CHECK(*m94.reg_cover == 4);
    CHECK(*m94.deg_h_cover == 3);

    Measured m62 = measure_graph(build_Hnp(6, 2));
    CHECK(*m62.reg_cover == 3);
    CHECK(*m62.deg_h_cover == 2);
    CHECK(m62.M == 2);
    CHECK(*m62.i == 2);

    CHECK_THROWS_AS(build_Hnp(6, 3), std::invalid_argument);   // needs n >= 7
    CHECK_THROWS_AS(build_Hnp(5, 2), std::invalid_argument);   // p = 2 needs n >= 6
    CHECK(prediction_mismatches(predict_Hnp(12, 4), measure_graph(build_Hnp(12, 4))).empty());
}

TEST_CASE("whiskering") {
    Graph k2 = parse_edge_list("2:0-1");
    Graph w = whisker_all(k2, 2);
    CHECK(w.n == 6);
    Prediction pred = predict_whisker_all(k2, 2);
    CHECK(*pred.M == 2);
    CHECK(*pred.deg_h_cover == 2);
    CHECK(*pred.alpha == 4);
    CHECK(prediction_mismatches(pred, measure_graph(w, false)).empty());

    // The one-vertex whisker min rule, non-tie case: P_5 whiskered at an end
    // vertex has M(G) = 0 != M(G - v) = 1 (G - v = P_4).
    Graph p5 = parse_edge_list("5:0-1,1-2,2-3,3-4");
    Prediction pv = predict_whisker_vertex(p5, 0);
    CHECK(*pv.M == 0);
    CHECK(prediction_mismatches(pv, measure_graph(whisker_vertex(p5, 0), false)).empty());

    // Cone: B_1 + K_{1,1} coned is G_{1,1}, and P = P_H + x.
    Graph h = disjoint_union(build_Bk(1), parse_edge_list("2:0-1"));
    Graph coned = cone(h);
    CHECK(independence_polynomial(coned) ==
          independence_polynomial(h) + IntPoly::monomial(1));
    Prediction pc = predict_cone(h);
    CHECK(prediction_mismatches(pc, measure_graph(coned)).empty());
    CHECK(*pc.reg_cover == coned.n - 2);
}
