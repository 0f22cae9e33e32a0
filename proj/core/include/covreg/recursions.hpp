#ifndef COVREG_RECURSIONS_HPP
#define COVREG_RECURSIONS_HPP

#include <string>

#include "covreg/graph.hpp"
#include "covreg/indpoly.hpp"

namespace covreg {

/// Pivot data for the forest recursions: a vertex v of degree >= 2 whose
/// neighbors are all leaves except at most one. Two subforest conventions
/// are carried: the projective-dimension recursion removes one leaf
/// (fprime_pdim), the multiplicity recursion removes v and all chosen
/// leaves (fprime_mult); both share fdoubleprime = F minus N[v].
struct JKSplit {
    int pivot = -1;
    VertexSet leaves = 0;       // the n-1 leaf neighbors used as v_1..v_{n-1}
    int last = -1;              // v_n: the non-leaf neighbor, or one more leaf
    VertexSet fprime_pdim = 0;  // F \ {v_1}
    VertexSet fprime_mult = 0;  // F \ ({v} + leaves)
    VertexSet fdoubleprime = 0; // F \ N[v]
};

/// Deterministic pivot choice inside one tree component: deepest valid
/// vertex (BFS from the smallest-index vertex), ties to the smallest index.
/// Requires a vertex of degree >= 2 in the component.
JKSplit jk_split(const Graph& forest, VertexSet component);

/// pdim(R/I(F)) for a forest, by the leaf recursion
/// pdim(F) = max{pdim(F \ v1), pdim(F \ N[v]) + deg v}, with component
/// additivity, isolated vertices ignored, and memoization on canonical
/// forms. Throws on non-forests.
int jk_pdim(const Graph& forest);

struct JkAlphaM {
    int alpha = 0;
    int M = 0;
    Int c = 1;
    /// Set when some subtree hit the equal-order, equal-leading-coefficient
    /// case, which the recursion does not decide; that subtree was resolved
    /// by direct polynomial computation.
    bool fallback = false;
};

/// (alpha, M, c) for a forest via the order/leading-coefficient recursion
/// with r1 = (deg v - 1) + M(F'), r2 = M(F''); isolated vertices contribute
/// alpha += 1, M += 1 each, and c multiplies over components.
JkAlphaM jk_alpha_M(const Graph& forest);

/// Leaf maximal clique split of a connected block graph that is not itself
/// a clique: K a leaf of the clique tree, s its cut vertex.
struct LeafCliqueSplit {
    VertexSet K = 0;
    int s = -1;
    VertexSet C = 0;  // K \ {s}
    int r = 0;        // |C|
    VertexSet H = 0;  // V \ K
    VertexSet L = 0;  // V \ N[s]
};

LeafCliqueSplit leaf_clique_decompose(const Graph& g);

struct BlockCheckReport {
    int M = 0;
    int i = 0;
    bool satisfied = false;   // M <= i
    int reg_minus_deg = 0;    // = M - i + 1
    bool poly_identity = false;  // P_G = (1+rx) P_H + x P_L at every split
    bool i_recursion = false;    // i(G) = 1 + min{i(H), i(L)} at every split
    std::string trace;
};

/// Verifies the leaf-clique polynomial identity and the independent
/// domination recursion on every decomposable induced piece, and reports
/// whether M <= i holds. want_trace emits the indented recursion tree.
BlockCheckReport block_check(const Graph& g, bool want_trace = false);

}  // namespace covreg

#endif
