#ifndef COVREG_FAMILIES_HPP
#define COVREG_FAMILIES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "covreg/graph.hpp"
#include "covreg/indpoly.hpp"
#include "covreg/poly.hpp"

namespace covreg {

/// Tree of radius <= 2: a center with L1 pendant leaves and m = |ts| branch
/// vertices, branch i carrying ts[i] >= 1 leaves. B = L1 + m, L2 = sum ts,
/// n = 1 + B + L2. ts is kept sorted descending (specs equal iff trees
/// isomorphic). m = 0 encodes the star K_{1,L1}.
struct Radius2Spec {
    int L1 = 0;
    std::vector<int> ts;

    Radius2Spec() = default;
    Radius2Spec(int L1_, std::vector<int> ts_);
    int m() const { return static_cast<int>(ts.size()); }
    int B() const { return L1 + m(); }
    int L2() const;
    int n() const { return 1 + B() + L2(); }
    std::string str() const;
};

/// Split-graph witness: clique x_1..x_c, with x_j joined to pendants[j]
/// private independent vertices.
struct SplitSpec {
    int clique_size = 0;
    std::vector<int> pendants;  // size clique_size, entries >= 0

    SplitSpec() = default;
    SplitSpec(int c, std::vector<int> pendants_);
    int n() const;
    std::string str() const;
};

/// Closed-form predictions; every filled field must equal the measured
/// value on the constructed graph. `source` names the rule that filled a
/// field, so a mismatch report can say which formula broke.
struct Prediction {
    std::optional<IntPoly> P;
    std::optional<int> alpha, M, i, pdim, reg_cover, deg_h_cover, deg_h_edge;
    std::map<std::string, std::string> source;
};

Graph build_radius2(const Radius2Spec& spec);
Prediction predict_radius2(const Radius2Spec& spec);

Graph build_split(const SplitSpec& spec);
/// Predictions for any connected split graph with an edge, from one split
/// partition (the classify() one).
Prediction predict_split(const Graph& g);

/// Nested-neighborhood split graph on 2k vertices with P = 2(1+x)^k - 1.
Graph build_Bk(int k);
Prediction predict_Bk(int k);

/// Cone over (B_k + K_{1,r}), r >= k >= 1: chordal, n = 2k+r+2, M = k,
/// reg = n-2, deg h_J = n-2-k.
Graph build_Gkr(int k, int r);
Prediction predict_Gkr(int k, int r);

/// Radius-2 chordal graph with i = M = p and pair (n-p-1, n-p-2);
/// p >= 3 with n >= 2p+1, or p = 2 with n >= 6.
Graph build_Hnp(int n, int p);
Prediction predict_Hnp(int n, int p);

/// Clique K_p with q pendants at every clique vertex (split), n = p(q+1).
Graph build_Hpq(int p, int q);
Prediction predict_Hpq(int p, int q);

/// q pendant leaves attached to every vertex.
Graph whisker_all(const Graph& g, int q);
Prediction predict_whisker_all(const Graph& g, int q);

/// One pendant leaf attached at v. In the tie case M(G) = M(G-v) the
/// multiplicity is computed exactly and the source notes whether the tie
/// saturated the lower bound.
Graph whisker_vertex(const Graph& g, int v);
Prediction predict_whisker_vertex(const Graph& g, int v);

/// Join of g with one new vertex.
Graph cone(const Graph& g);
Prediction predict_cone(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// realizable (reg, deg h) pairs

using RegDegPair = std::pair<int, int>;

/// Pairs realized by radius <= 2 trees on n >= 4 vertices.
std::set<RegDegPair> radius2_pairs(int n);
/// A spec realizing (r, d); throws when the pair is not in radius2_pairs(n).
Radius2Spec radius2_witness(int n, int r, int d);

/// Diagonal pairs realized by connected split graphs on n >= 2 vertices.
std::set<RegDegPair> split_pairs(int n);
int split_q_min(int n);
SplitSpec split_witness(int n, int q);

// ---------------------------------------------------------------------------
// measurement against predictions

struct Measured {
    IntPoly P;
    int alpha = 0, M = 0;
    std::optional<int> i, pdim, reg_cover, deg_h_cover, deg_h_edge;
};

/// Measures everything a Prediction can claim. reg comes from the chordal
/// formula when the graph is connected chordal, else from Hochster when
/// n <= 14; i is measured for n <= 32; the h degrees need an edge.
/// want_reg = false skips the regularity measurement (whisker grids only
/// predict polynomial data).
Measured measure_graph(const Graph& g, bool want_reg = true);

/// Mismatch report, one line per broken field, naming the source rule.
std::vector<std::string> prediction_mismatches(const Prediction& pred, const Measured& meas);

}  // namespace covreg

#endif
