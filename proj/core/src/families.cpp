#include "covreg/families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "covreg/betti.hpp"
#include "covreg/hilbert.hpp"

namespace covreg {

Radius2Spec::Radius2Spec(int L1_, std::vector<int> ts_) : L1(L1_), ts(std::move(ts_)) {
    if (L1 < 0) throw std::invalid_argument("Radius2Spec: L1 < 0");
    for (int t : ts)
        if (t < 1) throw std::invalid_argument("Radius2Spec: every t_i must be >= 1");
    std::sort(ts.begin(), ts.end(), std::greater<int>());
}

int Radius2Spec::L2() const {
    int s = 0;
    for (int t : ts) s += t;
    return s;
}

std::string Radius2Spec::str() const {
    std::ostringstream out;
    out << "radius2(L1=" << L1 << ", ts=[";
    for (std::size_t i = 0; i < ts.size(); ++i) out << (i ? "," : "") << ts[i];
    out << "])";
    return out.str();
}

SplitSpec::SplitSpec(int c, std::vector<int> pendants_) : clique_size(c), pendants(std::move(pendants_)) {
    if (c < 1) throw std::invalid_argument("SplitSpec: clique size < 1");
    if (static_cast<int>(pendants.size()) != c)
        throw std::invalid_argument("SplitSpec: need one pendant count per clique vertex");
    for (int s : pendants)
        if (s < 0) throw std::invalid_argument("SplitSpec: negative pendant count");
}

int SplitSpec::n() const {
    int s = clique_size;
    for (int p : pendants) s += p;
    return s;
}

std::string SplitSpec::str() const {
    std::ostringstream out;
    out << "split(c=" << clique_size << ", s=[";
    for (std::size_t i = 0; i < pendants.size(); ++i) out << (i ? "," : "") << pendants[i];
    out << "])";
    return out.str();
}

// ---------------------------------------------------------------------------
// radius-2 trees

Graph build_radius2(const Radius2Spec& spec) {
    if (spec.B() < 1) throw std::invalid_argument("build_radius2: tree needs at least one edge");
    Graph g(spec.n());
    int next = 1;
    for (int i = 0; i < spec.L1; ++i) g.add_edge(0, next++);
    for (int t : spec.ts) {
        int branch = next++;
        g.add_edge(0, branch);
        for (int j = 0; j < t; ++j) g.add_edge(branch, next++);
    }
    return g;
}

Prediction predict_radius2(const Radius2Spec& spec) {
    if (spec.B() < 1) throw std::invalid_argument("predict_radius2: tree needs at least one edge");
    const int L1 = spec.L1, m = spec.m(), B = spec.B(), L2 = spec.L2();
    Prediction p;

    if (L2 == 0) {
        p.P = IntPoly::one_plus_x_pow(B) + IntPoly::monomial(1);
        p.source["P"] = "star independence polynomial (1+x)^B + x";
        p.alpha = B;
        p.M = 0;
        p.deg_h_cover = B - 1;
    } else {
        IntPoly prod = IntPoly::one_plus_x_pow(L1);
        for (int t : spec.ts) prod = prod * (IntPoly::monomial(1) + IntPoly::one_plus_x_pow(t));
        p.P = prod + IntPoly::monomial(1) * IntPoly::one_plus_x_pow(L2);
        p.source["P"] = "radius-2 product formula";
        p.alpha = (L1 == 0) ? L2 + 1 : L1 + L2;
        if (L1 == 0)
            p.M = 0;
        else if (L1 != L2)
            p.M = std::min(L1, L2);
        else
            p.M = (m % 2 == 1) ? L1 : L1 + 1;
        if (L1 == 0)
            p.deg_h_cover = B + L2 - 1;
        else if (L1 != L2)
            p.deg_h_cover = m + std::max(L1, L2) - 1;
        else
            p.deg_h_cover = (m % 2 == 1) ? B - 1 : B - 2;
    }
    p.source["alpha"] = "radius-2 alpha cases";
    p.source["M"] = "radius-2 multiplicity cases";
    p.source["deg_h_cover"] = "radius-2 cover degree cases";
    p.pdim = std::max(B, L2 + 1);
    p.source["pdim"] = "radius-2 pdim = max(B, L2+1)";
    p.reg_cover = *p.pdim - 1;
    p.source["reg_cover"] = "Terai: reg = pdim - 1";
    p.deg_h_edge = *p.alpha - *p.M;
    p.source["deg_h_edge"] = "deg h_I = alpha - M";
    return p;
}

std::set<RegDegPair> radius2_pairs(int n) {
    if (n < 4) throw std::invalid_argument("radius2_pairs: n >= 4");
    std::set<RegDegPair> out;
    const int rlo = (n - 1) / 2;  // ceil((n-2)/2)
    for (int r = rlo; r <= n - 2; ++r)
        for (int d = r; d <= std::min(n - 2, 2 * r - 1); ++d) out.insert({r, d});
    if (n % 2 == 1)
        for (int r = rlo; r <= (2 * n - 5) / 3; ++r) out.insert({r, r - 1});
    return out;
}

Radius2Spec radius2_witness(int n, int r, int d) {
    if (!radius2_pairs(n).count({r, d}))
        throw std::invalid_argument("radius2_witness: pair not realizable by radius-2 trees");
    if (r == n - 2 && d == n - 2) return Radius2Spec(n - 1, {});
    if (d == r - 1) {
        const int L2 = n - 2 - r;
        const int m = 2 * r - n + 3;
        std::vector<int> ts(m, 1);
        ts[0] = L2 - m + 1;
        return Radius2Spec(L2, std::move(ts));
    }
    const int m = d - r + 1;
    std::vector<int> ts(m, 1);
    ts[0] = 2 * r - d;
    return Radius2Spec(n - 2 - d, std::move(ts));
}

// ---------------------------------------------------------------------------
// split graphs

Graph build_split(const SplitSpec& spec) {
    if (spec.n() > kMaxVertices) throw std::invalid_argument("build_split: too many vertices");
    Graph g(spec.n());
    const int c = spec.clique_size;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) g.add_edge(a, b);
    int next = c;
    for (int j = 0; j < c; ++j)
        for (int t = 0; t < spec.pendants[j]; ++t) g.add_edge(j, next++);
    return g;
}

Prediction predict_split(const Graph& g) {
    GraphClass cls = classify(g);
    if (!cls.split) throw std::invalid_argument("predict_split: graph is not split");
    if (!cls.connected) throw std::invalid_argument("predict_split: graph is disconnected");
    if (!g.has_any_edge()) throw std::invalid_argument("predict_split: graph has no edge");

    const VertexSet C = cls.split_clique, I = cls.split_independent;
    const int m = vcount(I);
    const int csz = vcount(C);
    int DeltaI = 0, deltaI = g.n;
    IntPoly sum;
    for (VertexSet t = C; t; t &= t - 1) {
        int v = vfirst(t);
        int degI = vcount(g.adj[v] & I);
        DeltaI = std::max(DeltaI, degI);
        deltaI = std::min(deltaI, degI);
        sum += IntPoly::one_plus_x_pow(m - degI);
    }
    Prediction p;
    p.P = IntPoly::one_plus_x_pow(m) + IntPoly::monomial(1) * sum;
    p.source["P"] = "split independence polynomial (1+x)^m + x sum (1+x)^{a(c)}";
    p.alpha = std::max(m, 1 + m - deltaI);
    p.source["alpha"] = "split alpha = max(m, 1+m-delta_I)";
    p.M = m - DeltaI;
    p.source["M"] = "split M = m - Delta_I";
    p.i = m - DeltaI + 1;
    p.source["i"] = "split i = m - Delta_I + 1";
    p.reg_cover = DeltaI + csz - 2;
    p.deg_h_cover = DeltaI + csz - 2;
    p.source["reg_cover"] = "split diagonal reg = Delta_I + |C| - 2";
    p.source["deg_h_cover"] = "split diagonal deg = Delta_I + |C| - 2";
    p.pdim = *p.reg_cover + 1;
    p.source["pdim"] = "Terai: pdim = reg + 1";
    p.deg_h_edge = (deltaI == 0) ? DeltaI + 1 : DeltaI;
    p.source["deg_h_edge"] = "split edge degree (Delta_I, +1 when delta_I = 0)";
    return p;
}

int split_q_min(int n) {
    int best = n;
    for (int c = 1; c <= n - 1; ++c) best = std::min(best, c + (n + c - 1) / c - 3);
    return best;
}

std::set<RegDegPair> split_pairs(int n) {
    if (n < 2) throw std::invalid_argument("split_pairs: n >= 2");
    std::set<RegDegPair> out;
    for (int q = split_q_min(n); q <= n - 2; ++q) out.insert({q, q});
    return out;
}

SplitSpec split_witness(int n, int q) {
    if (n < 2 || q < split_q_min(n) || q > n - 2)
        throw std::invalid_argument("split_witness: q outside the realizable diagonal range");
    for (int c = 1; c <= n - 1; ++c) {
        const int m = n - c;
        const int DeltaI = q - c + 2;
        if (DeltaI < 1 || DeltaI > m) continue;
        if (static_cast<long>(c) * DeltaI < m) continue;
        std::vector<int> s(c, 0);
        s[0] = DeltaI;
        int left = m - DeltaI;
        for (int j = 1; j < c && left > 0; ++j) {
            s[j] = std::min(DeltaI, left);
            left -= s[j];
        }
        if (left != 0) continue;
        return SplitSpec(c, std::move(s));
    }
    throw std::logic_error("split_witness: no feasible clique size");
}

// ---------------------------------------------------------------------------
// the reg = n-2 family

Graph build_Bk(int k) {
    if (k < 1) throw std::invalid_argument("build_Bk: k >= 1");
    Graph g(2 * k);
    for (int a = 0; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) g.add_edge(a, b);
    for (int j = 1; j <= k - 1; ++j)
        for (int a = 0; a < j; ++a) g.add_edge(k + j, a);
    return g;
}

Prediction predict_Bk(int k) {
    if (k < 1) throw std::invalid_argument("predict_Bk: k >= 1");
    Prediction p;
    p.P = IntPoly::one_plus_x_pow(k).scale(2) - IntPoly({1});
    p.source["P"] = "nested split family P = 2(1+x)^k - 1";
    p.alpha = k;
    p.source["alpha"] = "deg P";
    return p;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n + b.n);
    for (int v = 0; v < a.n; ++v) g.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) g.adj[a.n + v] = b.adj[v] << a.n;
    return g;
}

Graph cone(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("cone: base graph needs a vertex");
    Graph out(g.n + 1);
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v] | vbit(g.n);
    out.adj[g.n] = vall(g.n);
    return out;
}

Prediction predict_cone(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("predict_cone: base graph needs a vertex");
    Prediction p;
    p.P = independence_polynomial(g) + IntPoly::monomial(1);
    p.source["P"] = "cone adds the apex singleton: P + x";
    p.pdim = g.n;  // apex point disconnects the complex: depth 1
    p.source["pdim"] = "cone pdim = n_cone - 1";
    p.reg_cover = g.n - 1;
    p.source["reg_cover"] = "cone reg = n_cone - 2";
    return p;
}

Graph build_Gkr(int k, int r) {
    if (k < 1 || r < k) throw std::invalid_argument("build_Gkr: need r >= k >= 1");
    Graph star(r + 1);
    for (int j = 1; j <= r; ++j) star.add_edge(0, j);
    return cone(disjoint_union(build_Bk(k), star));
}

Prediction predict_Gkr(int k, int r) {
    if (k < 1 || r < k) throw std::invalid_argument("predict_Gkr: need r >= k >= 1");
    const int n = 2 * k + r + 2;
    Prediction p;
    IntPoly star = IntPoly::one_plus_x_pow(r) + IntPoly::monomial(1);
    p.P = *predict_Bk(k).P * star + IntPoly::monomial(1);
    p.source["P"] = "cone over B_k + star: P_{B_k} P_{K_{1,r}} + x";
    p.M = k;
    p.source["M"] = "factored form has order k at -1";
    p.pdim = n - 1;
    p.reg_cover = n - 2;
    p.source["pdim"] = "cone pdim = n - 1";
    p.source["reg_cover"] = "cone reg = n - 2";
    p.deg_h_cover = n - 2 - k;
    p.source["deg_h_cover"] = "deg h_J = n - 2 - M";
    return p;
}

// ---------------------------------------------------------------------------
// the deg = reg - 1 family

Graph build_Hnp(int n, int p) {
    const bool ok = (p >= 3 && n >= 2 * p + 1) || (p == 2 && n >= 6);
    if (!ok) throw std::invalid_argument("build_Hnp: need p >= 3, n >= 2p+1 (or p = 2, n >= 6)");
    const int k = n - 2 * p - 1;
    Graph g(n);
    const int c = 0, v1 = 1, v2 = 2;
    g.add_edge(c, v1);
    g.add_edge(c, v2);
    int next = 3;
    for (int j = 0; j < p - 1; ++j) g.add_edge(c, next++);        // u_1..u_{p-1}
    for (int l = 0; l < p - 2; ++l) g.add_edge(v1, next++);       // y_1..y_{p-2}
    g.add_edge(v2, next++);                                        // z
    for (int t = 0; t < k; ++t) {                                  // triangles on cv1
        g.add_edge(c, next);
        g.add_edge(v1, next);
        ++next;
    }
    return g;
}

Prediction predict_Hnp(int n, int p) {
    const bool ok = (p >= 3 && n >= 2 * p + 1) || (p == 2 && n >= 6);
    if (!ok) throw std::invalid_argument("predict_Hnp: parameter range");
    const int k = n - 2 * p - 1;
    Prediction pr;
    // (1+x)^p (2x + x(1+x)^{p+k-3} + (1+x)^{p+k-2})
    IntPoly q = IntPoly({0, 2}) + IntPoly::monomial(1) * IntPoly::one_plus_x_pow(p + k - 3) +
                IntPoly::one_plus_x_pow(p + k - 2);
    pr.P = IntPoly::one_plus_x_pow(p) * q;
    pr.source["P"] = "triangle-glued radius-2 case count";
    pr.M = p;
    pr.i = p;
    pr.source["M"] = "factored form has order p at -1";
    pr.source["i"] = "independent domination i = p";
    pr.reg_cover = n - p - 1;
    pr.pdim = n - p;
    pr.deg_h_cover = n - p - 2;
    pr.source["reg_cover"] = "chordal reg = n - i - 1";
    pr.source["pdim"] = "chordal pdim = n - i";
    pr.source["deg_h_cover"] = "deg h_J = n - 2 - M";
    return pr;
}

Graph build_Hpq(int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("build_Hpq: need p >= 2, q >= 1");
    return build_split(SplitSpec(p, std::vector<int>(p, q)));
}

Prediction predict_Hpq(int p, int q) {
    if (p < 2 || q < 1) throw std::invalid_argument("predict_Hpq: need p >= 2, q >= 1");
    Prediction pr;
    pr.M = (p - 1) * q;
    pr.source["M"] = "clique-with-pendants M = (p-1)q";
    pr.i = 1 + (p - 1) * q;
    pr.source["i"] = "clique-with-pendants i = 1 + (p-1)q";
    pr.pdim = p + q - 1;
    pr.reg_cover = p + q - 2;
    pr.deg_h_cover = p + q - 2;
    pr.source["pdim"] = "pdim = n - i";
    pr.source["reg_cover"] = "diagonal pair (p+q-2, p+q-2)";
    pr.source["deg_h_cover"] = "diagonal pair (p+q-2, p+q-2)";
    return pr;
}

// ---------------------------------------------------------------------------
// whiskering

Graph whisker_all(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("whisker_all: q >= 1");
    if (g.n < 1) throw std::invalid_argument("whisker_all: empty base graph");
    if (g.n * (q + 1) > kMaxVertices) throw std::invalid_argument("whisker_all: too many vertices");
    Graph out(g.n * (q + 1));
    for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
    int next = g.n;
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t < q; ++t) out.add_edge(v, next++);
    return out;
}

Prediction predict_whisker_all(const Graph& g, int q) {
    if (q < 1 || g.n < 1) throw std::invalid_argument("predict_whisker_all: bad parameters");
    InvariantBundle b = bundle(g);
    const int n = g.n;
    Prediction p;
    IntPoly acc;
    for (int k = 0; k <= b.alpha; ++k)
        acc += IntPoly::monomial(k, b.gvec[k]) * IntPoly::one_plus_x_pow(q * (n - k));
    p.P = acc;
    p.source["P"] = "corona with q pendant sets: sum g_k x^k (1+x)^{q(n-k)}";
    p.alpha = q * n;
    p.source["alpha"] = "whiskered alpha = qn";
    p.M = q * (n - b.alpha);
    p.source["M"] = "uniform whisker M = q(n - alpha)";
    p.deg_h_edge = q * b.alpha;
    p.source["deg_h_edge"] = "uniform whisker deg h_I = q alpha";
    p.deg_h_cover = n - 2 + q * b.alpha;
    p.source["deg_h_cover"] = "uniform whisker deg h_J = n - 2 + q alpha";
    return p;
}

Graph whisker_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("whisker_vertex: vertex out of range");
    Graph out(g.n + 1);
    for (int u = 0; u < g.n; ++u) out.adj[u] = g.adj[u];
    out.add_edge(v, g.n);
    return out;
}

Prediction predict_whisker_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("predict_whisker_vertex: vertex out of range");
    IntPoly pg = independence_polynomial(g);
    IntPoly pgv = independence_polynomial(g, g.vertices() & ~vbit(v));
    Prediction p;
    p.P = pg + IntPoly::monomial(1) * pgv;
    p.source["P"] = "pendant split: P_G + x P_{G-v}";
    auto [a, ca] = ord_at_minus1(pg);
    auto [b, cb] = ord_at_minus1(pgv);
    p.alpha = std::max(pg.degree(), 1 + pgv.degree());
    p.source["alpha"] = "alpha = max(alpha(G), 1 + alpha(G-v))";
    if (a != b) {
        p.M = std::min(a, b);
        p.source["M"] = "one-vertex whisker M = min(M(G), M(G-v))";
    } else {
        auto [mm, cc] = ord_at_minus1(*p.P);
        p.M = mm;
        p.source["M"] = mm == a ? "tie M(G) = M(G-v): computed exactly, no cancellation"
                                : "tie M(G) = M(G-v): computed exactly, cancellation raised M";
    }
    return p;
}

// ---------------------------------------------------------------------------
// measurement

Measured measure_graph(const Graph& g, bool want_reg) {
    Measured m;
    m.P = independence_polynomial(g);
    InvariantBundle b = bundle_of(m.P, g.n);
    m.alpha = b.alpha;
    m.M = b.M;
    if (g.n <= 32) m.i = i_number(g);
    if (g.has_any_edge()) {
        m.deg_h_cover = h_cover(b).deg_h;
        m.deg_h_edge = h_edge_fvector(b).degree();
        if (want_reg) {
            GraphClass cls = classify(g);
            if (cls.chordal && cls.connected && m.i)
                m.reg_cover = g.n - *m.i - 1;
            else if (g.n <= 14)
                m.reg_cover = reg_cover(g, FieldOpt::rationals());
            if (m.reg_cover) m.pdim = *m.reg_cover + 1;
        }
    }
    return m;
}

std::vector<std::string> prediction_mismatches(const Prediction& pred, const Measured& meas) {
    std::vector<std::string> out;
    auto src = [&](const char* field) {
        auto it = pred.source.find(field);
        return it == pred.source.end() ? std::string("?") : it->second;
    };
    auto cmp = [&](const char* field, const std::optional<int>& want, const std::optional<int>& got) {
        if (!want) return;
        if (!got) {
            out.push_back(std::string(field) + ": predicted " + std::to_string(*want) + " [" +
                          src(field) + "] but not measurable");
            return;
        }
        if (*want != *got)
            out.push_back(std::string(field) + ": predicted " + std::to_string(*want) + " [" +
                          src(field) + "] measured " + std::to_string(*got));
    };
    if (pred.P && *pred.P != meas.P)
        out.push_back("P: predicted " + pred.P->str("x") + " [" + src("P") + "] measured " +
                      meas.P.str("x"));
    cmp("alpha", pred.alpha, meas.alpha);
    cmp("M", pred.M, meas.M);
    cmp("i", pred.i, meas.i);
    cmp("pdim", pred.pdim, meas.pdim);
    cmp("reg_cover", pred.reg_cover, meas.reg_cover);
    cmp("deg_h_cover", pred.deg_h_cover, meas.deg_h_cover);
    cmp("deg_h_edge", pred.deg_h_edge, meas.deg_h_edge);
    return out;
}

}  // namespace covreg
