#ifndef COVREG_HILBERT_HPP
#define COVREG_HILBERT_HPP

#include "covreg/graph.hpp"
#include "covreg/indpoly.hpp"
#include "covreg/poly.hpp"

namespace covreg {

/// Hypergraph with inclusion-minimal, nonempty edges (minimized on
/// construction; the Alexander-dual formulas assume minimal generators).
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;

    Hypergraph(int n_, std::vector<VertexSet> edges_);
    int min_edge_size() const;  // delta
};

struct HilbertProfile {
    int dim = 0;
    IntPoly h;
    int deg_h = 0;
    int a_invariant = 0;  // deg_h - dim
};

/// h-polynomial of R/I(G) from the f-vector: sum_i g_i t^i (1-t)^{alpha-i}.
IntPoly h_edge_fvector(const InvariantBundle& b);

/// Same polynomial via the derivative expansion
/// P(-1)(1-t)^alpha + sum_s D_s (1-t)^{alpha-s-1}.
IntPoly h_edge_Ds(const InvariantBundle& b);

/// Closed-form Hilbert function of R/J(G) in degree d >= 1:
/// C(n+d-1,n-1) - n C(d-1,n-2) - C(d-1,n-1) - sum_{j=2}^{n-1} g_j C(d-1,n-j-1).
Int hf_cover(int n, const std::vector<Int>& gvec, long d);

/// Standard-monomial oracle for the same value: sum over F subset of [n]
/// whose complement is not independent of C(d-1, |F|-1). Brute force over
/// 2^n subsets.
Int hf_cover_oracle(const Graph& g, long d);

/// Monomial-count oracle for HF of R/I(G) (supports are independent sets).
Int hf_edge_oracle(const Graph& g, long d);

/// h-polynomial of R/J(G) assembled from Thm-HS1 style sums:
/// sum_{k=0}^{n-alpha-1} (k+1) t^k + sum_{s=-1}^{alpha-3} E_{s+3} t^{n-s-3}.
/// Requires at least one edge (dim R/J = n-2). Throws on edgeless input.
HilbertProfile h_cover(const InvariantBundle& b);

/// h-polynomial of R/I(H)^dual for a hypergraph with at least one edge;
/// dim = n - delta.
HilbertProfile h_dual_hypergraph(const Hypergraph& h);

/// Brute-force Hilbert function of R/I(H)^dual, degrees 0..len-1.
std::vector<Int> hf_dual_oracle_series(const Hypergraph& h, int len);

/// Hypergraph analogue of the g-vector: g_i counts i-subsets containing no
/// edge (brute force; guard n <= 22).
std::vector<Int> hypergraph_gvector(const Hypergraph& h);

enum class DegreeCase { Max, Floor, Intermediate };

struct DegreeReport {
    int deg_h_edge = 0;
    int deg_h_cover = 0;
    DegreeCase kind = DegreeCase::Max;
    int d = 0;  // min{s : E_{s+3} != 0} in the intermediate case
};

/// Degrees of both h-polynomials via M, with the case label of the cover
/// bound corollary; cross-checks n-d-3 against n-2-M when g(G) = 1.
DegreeReport degree_report(const InvariantBundle& b);

std::string degree_case_name(DegreeCase c);

}  // namespace covreg

#endif
