#include "covreg/indpoly.hpp"

#include <stdexcept>
#include <unordered_map>

namespace covreg {

namespace {

IntPoly ind_rec(const Graph& g, VertexSet s, std::unordered_map<VertexSet, IntPoly>& memo) {
    // Pivot on a maximum-degree vertex of the induced subgraph.
    int pivot = -1, best = 0;
    for (VertexSet t = s; t; t &= t - 1) {
        int v = vfirst(t);
        int d = vcount(g.adj[v] & s);
        if (d > best) {
            best = d;
            pivot = v;
        }
    }
    if (pivot < 0) return IntPoly::one_plus_x_pow(vcount(s));  // edgeless

    auto it = memo.find(s);
    if (it != memo.end()) return it->second;

    IntPoly p = ind_rec(g, s & ~vbit(pivot), memo) +
                IntPoly::monomial(1) * ind_rec(g, s & ~(g.adj[pivot] | vbit(pivot)), memo);
    memo.emplace(s, p);
    return p;
}

}  // namespace

IntPoly independence_polynomial(const Graph& g, VertexSet within) {
    if (within & ~g.vertices())
        throw std::invalid_argument("independence_polynomial: subset exceeds vertex set");
    std::unordered_map<VertexSet, IntPoly> memo;
    return ind_rec(g, within, memo);
}

IntPoly independence_polynomial(const Graph& g) {
    return independence_polynomial(g, g.vertices());
}

InvariantBundle bundle_of(const IntPoly& p, int n) {
    InvariantBundle b;
    b.n = n;
    b.gvec = p.coeffs();
    b.alpha = p.degree();
    auto [m, lead] = ord_at_minus1(p);
    b.M = m;
    b.c = lead;
    b.gG = 1 - p.eval(Int(-1));
    b.euler = b.gG;
    return b;
}

InvariantBundle bundle(const Graph& g) {
    return bundle_of(independence_polynomial(g), g.n);
}

Int D_coeff(const InvariantBundle& b, int s) {
    if (s < 0 || s > b.alpha - 1) throw std::invalid_argument("D_coeff: s out of range");
    Int acc = 0;
    for (int j = s + 1; j <= b.alpha; ++j) {
        Int term = binom(j, s + 1) * b.gvec[j];
        if ((j - 1 - s) & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

Int E_coeff(const InvariantBundle& b, int s) {
    if (s < -1 || s > b.alpha - 3) throw std::invalid_argument("E_coeff: s out of range");
    Int acc = b.n - s - 2;
    for (int j = s + 3; j <= b.alpha; ++j) {
        // subtracting (-1)^{j-s-1} C(j-2, s+1) g_j
        Int term = binom(j - 2, s + 1) * b.gvec[j];
        if ((j - s - 1) & 1)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

int M_via_Ds(const InvariantBundle& b) {
    if (b.p_at_minus1() != 0) return 0;
    for (int s = 0; s <= b.alpha - 1; ++s)
        if (D_coeff(b, s) != 0) return s + 1;
    throw std::logic_error("M_via_Ds: all D_s vanish for a root at -1");
}

std::vector<Int> gvector_bruteforce(const Graph& g) {
    std::vector<Int> gv(g.n + 1, Int(0));
    const VertexSet all = g.vertices();
    VertexSet s = 0;
    for (;;) {
        if (is_independent(g, s)) gv[vcount(s)] += 1;
        if (s == all) break;
        ++s;
    }
    while (gv.size() > 1 && gv.back() == 0) gv.pop_back();
    return gv;
}

}  // namespace covreg
