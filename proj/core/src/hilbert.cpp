#include "covreg/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace covreg {

Hypergraph::Hypergraph(int n_, std::vector<VertexSet> edges_) : n(n_) {
    if (n_ < 0 || n_ > kMaxVertices) throw std::invalid_argument("Hypergraph: bad vertex count");
    for (VertexSet e : edges_) {
        if (!e) throw std::invalid_argument("Hypergraph: empty edge");
        if (e & ~vall(n_)) throw std::invalid_argument("Hypergraph: edge exceeds vertex set");
    }
    // Keep only inclusion-minimal edges, dropping duplicates.
    std::sort(edges_.begin(), edges_.end(),
              [](VertexSet a, VertexSet b) { return vcount(a) != vcount(b) ? vcount(a) < vcount(b) : a < b; });
    for (VertexSet e : edges_) {
        bool contains_smaller = false;
        for (VertexSet kept : edges)
            if ((kept & e) == kept) {
                contains_smaller = true;
                break;
            }
        if (!contains_smaller) edges.push_back(e);
    }
}

int Hypergraph::min_edge_size() const {
    if (edges.empty()) throw std::invalid_argument("Hypergraph: no edges");
    int d = kMaxVertices + 1;
    for (VertexSet e : edges) d = std::min(d, vcount(e));
    return d;
}

namespace {
IntPoly one_minus_t_pow(int k) {
    std::vector<Int> c(k + 1);
    for (int i = 0; i <= k; ++i) c[i] = (i & 1) ? -binom(k, i) : binom(k, i);
    return IntPoly(std::move(c));
}
}  // namespace

IntPoly h_edge_fvector(const InvariantBundle& b) {
    IntPoly acc;
    for (int i = 0; i <= b.alpha; ++i)
        acc += IntPoly::monomial(i, b.gvec[i]) * one_minus_t_pow(b.alpha - i);
    return acc;
}

IntPoly h_edge_Ds(const InvariantBundle& b) {
    IntPoly acc = one_minus_t_pow(b.alpha).scale(b.p_at_minus1());
    for (int s = 0; s <= b.alpha - 1; ++s) acc += one_minus_t_pow(b.alpha - s - 1).scale(D_coeff(b, s));
    return acc;
}

Int hf_cover(int n, const std::vector<Int>& gvec, long d) {
    if (d < 1) throw std::invalid_argument("hf_cover: defined for d >= 1 (HF(0) = 1 by convention)");
    Int acc = binom(n + d - 1, n - 1) - Int(n) * binom(d - 1, n - 2) - binom(d - 1, n - 1);
    for (int j = 2; j <= n - 1; ++j) {
        if (j >= static_cast<int>(gvec.size())) break;
        acc -= gvec[j] * binom(d - 1, n - j - 1);
    }
    return acc;
}

Int hf_cover_oracle(const Graph& g, long d) {
    if (d < 1) throw std::invalid_argument("hf_cover_oracle: d >= 1");
    Int acc = 0;
    const VertexSet all = g.vertices();
    VertexSet f = 0;
    for (;;) {
        if (!is_independent(g, all & ~f)) acc += binom(d - 1, vcount(f) - 1);
        if (f == all) break;
        ++f;
    }
    return acc;
}

Int hf_edge_oracle(const Graph& g, long d) {
    if (d == 0) return 1;
    Int acc = 0;
    const VertexSet all = g.vertices();
    VertexSet f = 0;
    for (;;) {
        if (f && is_independent(g, f)) acc += binom(d - 1, vcount(f) - 1);
        if (f == all) break;
        ++f;
    }
    return acc;
}

HilbertProfile h_cover(const InvariantBundle& b) {
    if (b.alpha >= b.n) throw std::invalid_argument("h_cover: edgeless graph (dim R/J undefined)");
    std::vector<Int> c(std::max(b.n - 1, 1), Int(0));
    for (int k = 0; k <= b.n - b.alpha - 1; ++k) c[k] = k + 1;
    for (int s = -1; s <= b.alpha - 3; ++s) c[b.n - s - 3] += E_coeff(b, s);
    HilbertProfile out;
    out.dim = b.n - 2;
    out.h = IntPoly(std::move(c));
    out.deg_h = out.h.degree();
    out.a_invariant = out.deg_h - out.dim;
    return out;
}

std::vector<Int> hypergraph_gvector(const Hypergraph& h) {
    if (h.n > 22) throw std::invalid_argument("hypergraph_gvector: n too large for brute force");
    std::vector<Int> gv(h.n + 1, Int(0));
    const VertexSet all = vall(h.n);
    VertexSet w = 0;
    for (;;) {
        bool free_of_edges = true;
        for (VertexSet e : h.edges)
            if ((w & e) == e) {
                free_of_edges = false;
                break;
            }
        if (free_of_edges) gv[vcount(w)] += 1;
        if (w == all) break;
        ++w;
    }
    while (gv.size() > 1 && gv.back() == 0) gv.pop_back();
    return gv;
}

HilbertProfile h_dual_hypergraph(const Hypergraph& h) {
    const int delta = h.min_edge_size();  // throws when edgeless
    const std::vector<Int> gv = hypergraph_gvector(h);
    const int alpha = static_cast<int>(gv.size()) - 1;
    const int n = h.n;
    std::vector<Int> c(n - delta + 1, Int(0));
    for (int k = 0; k <= n - alpha - 1; ++k) c[k] = binom(k + delta - 1, delta - 1);
    for (int k = n - alpha; k <= n - delta; ++k) {
        // C(k+delta-1,delta-1) - sum_j (-1)^{k-n+j} C(j-delta, k-n+j) g_j
        Int acc = binom(k + delta - 1, delta - 1);
        for (int j = n - k; j <= alpha; ++j) {
            Int term = binom(j - delta, k - n + j) * gv[j];
            if ((k - n + j) & 1)
                acc += term;
            else
                acc -= term;
        }
        c[k] = std::move(acc);
    }
    HilbertProfile out;
    out.dim = n - delta;
    out.h = IntPoly(std::move(c));
    out.deg_h = out.h.degree();
    out.a_invariant = out.deg_h - out.dim;
    return out;
}

std::vector<Int> hf_dual_oracle_series(const Hypergraph& h, int len) {
    std::vector<Int> out(len, Int(0));
    if (len == 0) return out;
    const VertexSet all = vall(h.n);
    // Collect the face sizes of the dual complex: F with complement
    // containing an edge of H.
    std::vector<long> size_count(h.n + 1, 0);
    VertexSet f = 0;
    for (;;) {
        VertexSet comp = all & ~f;
        for (VertexSet e : h.edges)
            if ((comp & e) == e) {
                ++size_count[vcount(f)];
                break;
            }
        if (f == all) break;
        ++f;
    }
    out[0] = 1;
    for (long d = 1; d < len; ++d) {
        Int acc = 0;
        for (int s = 1; s <= h.n; ++s)
            if (size_count[s]) acc += Int(size_count[s]) * binom(d - 1, s - 1);
        out[d] = std::move(acc);
    }
    return out;
}

DegreeReport degree_report(const InvariantBundle& b) {
    if (b.alpha >= b.n) throw std::invalid_argument("degree_report: edgeless graph");
    DegreeReport r;
    r.deg_h_edge = b.alpha - b.M;
    r.deg_h_cover = b.n - 2 - b.M;
    if (b.gG != 1) {
        r.kind = DegreeCase::Max;
        return r;
    }
    int d = -1;
    for (int s = 0; s <= b.alpha - 3; ++s)
        if (E_coeff(b, s) != 0) {
            d = s;
            break;
        }
    if (d < 0) {
        r.kind = DegreeCase::Floor;
        if (r.deg_h_cover != b.n - b.alpha - 1)
            throw std::logic_error("degree_report: floor case disagrees with n-2-M");
    } else {
        r.kind = DegreeCase::Intermediate;
        r.d = d;
        if (b.n - d - 3 != r.deg_h_cover)
            throw std::logic_error("degree_report: E-scan degree disagrees with n-2-M");
    }
    return r;
}

std::string degree_case_name(DegreeCase c) {
    switch (c) {
        case DegreeCase::Max: return "max";
        case DegreeCase::Floor: return "floor";
        case DegreeCase::Intermediate: return "intermediate";
    }
    return "?";
}

}  // namespace covreg
