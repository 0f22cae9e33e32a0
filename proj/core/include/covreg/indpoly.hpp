#ifndef COVREG_INDPOLY_HPP
#define COVREG_INDPOLY_HPP

#include "covreg/graph.hpp"
#include "covreg/poly.hpp"

namespace covreg {

/// Per-graph record of the independence-polynomial invariants.
///   gvec[i]  counts independent sets of size i (g_0 = 1, g_1 = n)
///   alpha    independence number = deg P_G
///   M        multiplicity of x = -1 as a root of P_G
///   c        first nonzero Taylor coefficient of P_G at -1
///   gG       alternating sum sum_{i>=1} (-1)^{i-1} g_i = 1 - P_G(-1)
///   euler    unreduced Euler characteristic of the independence complex (= gG)
struct InvariantBundle {
    int n = 0;
    std::vector<Int> gvec;
    int alpha = 0;
    int M = 0;
    Int c;
    Int gG;
    Int euler;

    IntPoly poly() const { return IntPoly(gvec); }
    Int p_at_minus1() const { return 1 - gG; }
};

/// P_G(x), computed by the pivot recursion P_G = P_{G-v} + x P_{G-N[v]} on a
/// maximum-degree vertex, memoized on vertex subsets of the original graph;
/// edgeless subsets short-circuit to (1+x)^k.
IntPoly independence_polynomial(const Graph& g);

/// Restriction of the recursion to an induced vertex subset.
IntPoly independence_polynomial(const Graph& g, VertexSet within);

InvariantBundle bundle(const Graph& g);
InvariantBundle bundle_of(const IntPoly& p, int n);

/// D_s = sum_{j=s+1}^{alpha} (-1)^{j-1-s} C(j, s+1) g_j, for 0 <= s <= alpha-1.
/// Equals P_G^{(s+1)}(-1) / (s+1)!.
Int D_coeff(const InvariantBundle& b, int s);

/// E_{s+3} = (n-s-2) - sum_{j=s+3}^{alpha} C(j-2, s+1) (-1)^{j-s-1} g_j,
/// for -1 <= s <= alpha-3. E_2 equals gG - 1.
Int E_coeff(const InvariantBundle& b, int s);

/// M recovered from the D_s sequence: 0 when P_G(-1) != 0, otherwise
/// min{s : D_s != 0} + 1. Always equals bundle.M.
int M_via_Ds(const InvariantBundle& b);

/// Brute-force g-vector over all 2^n subsets (test oracle).
std::vector<Int> gvector_bruteforce(const Graph& g);

}  // namespace covreg

#endif
