#include "covreg/verify.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "covreg/betti.hpp"
#include "covreg/enumerate.hpp"
#include "covreg/families.hpp"
#include "covreg/hilbert.hpp"
#include "covreg/indpoly.hpp"
#include "covreg/recursions.hpp"
#include "covreg/survey.hpp"

namespace covreg {

namespace {

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count < 4) {
        for (std::size_t k = 0; k < count; ++k) f(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&] {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= count) return;
                f(k);
            }
        });
    for (auto& w : workers) w.join();
}

// Thread-safe failure collector keeping only a few sample messages.
struct Failures {
    std::mutex mu;
    long count = 0;
    std::vector<std::string> samples;

    void add(const std::string& msg) {
        std::lock_guard<std::mutex> lock(mu);
        ++count;
        if (samples.size() < 5) samples.push_back(msg);
    }

    CheckResult result(const std::string& name, long checked) {
        CheckResult r;
        r.name = name;
        r.pass = count == 0;
        std::ostringstream d;
        d << checked << " checked";
        if (count) {
            d << ", " << count << " failed:";
            for (const std::string& s : samples) d << " [" << s << "]";
        }
        r.detail = d.str();
        return r;
    }
};

Graph random_graph(std::mt19937_64& rng, int nmin, int nmax) {
    std::uniform_int_distribution<int> nd(nmin, nmax);
    std::uniform_real_distribution<double> pd(0.15, 0.85);
    int n = nd(rng);
    double p = pd(rng);
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) g.add_edge(a, b);
    return g;
}

Graph random_tree(std::mt19937_64& rng, int n) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = vd(rng);
    std::vector<int> deg(n, 1);
    for (int x : prufer) ++deg[x];
    std::vector<bool> used(n, false);
    for (int x : prufer) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1 && !used[v]) {
                leaf = v;
                break;
            }
        g.add_edge(leaf, x);
        used[leaf] = true;
        --deg[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    g.add_edge(a, b);
    return g;
}

Graph random_forest(std::mt19937_64& rng, int nmax) {
    std::uniform_int_distribution<int> nd(2, nmax);
    int n = nd(rng);
    Graph g(n);
    int placed = 0;
    while (placed < n) {
        std::uniform_int_distribution<int> cd(1, n - placed);
        int k = cd(rng);
        Graph t = random_tree(rng, k);
        for (int v = 0; v < k; ++v) g.adj[placed + v] = t.adj[v] << placed;
        placed += k;
    }
    return g;
}

// Per-graph oracle bundle check; returns an error message or "".
std::string oracle_check(const Graph& g) {
    InvariantBundle b = bundle(g);
    if (gvector_bruteforce(g) != b.gvec) return "g-vector vs brute force";
    if (M_via_Ds(b) != b.M) return "M via D_s";
    for (int s = 0; s <= b.alpha - 1; ++s) {
        Int lhs = derivative_at(b.poly(), s + 1, Int(-1));
        Int fact = 1;
        for (int k = 2; k <= s + 1; ++k) fact *= k;
        if (D_coeff(b, s) * fact != lhs) return "D_s vs derivative";
    }
    if (b.alpha >= 2 && E_coeff(b, -1) != b.gG - 1) return "E_2 vs g(G)-1";
    IntPoly hf_form = h_edge_fvector(b);
    if (hf_form != h_edge_Ds(b)) return "h_I f-vector vs D_s form";
    {
        const int len = 2 * g.n + 2;
        std::vector<Int> hf(len);
        for (int d = 0; d < len; ++d) hf[d] = hf_edge_oracle(g, d);
        if (series_h_extract(hf, b.alpha) != hf_form) return "h_I vs series oracle";
        if (hf_form.degree() != b.alpha - b.M) return "deg h_I != alpha - M";
    }
    if (g.has_any_edge()) {
        for (long d = 1; d <= 2 * g.n; ++d)
            if (hf_cover(g.n, b.gvec, d) != hf_cover_oracle(g, d))
                return "hf_cover closed form vs oracle (d=" + std::to_string(d) + ")";
        HilbertProfile hj = h_cover(b);
        const int len = 2 * g.n + 2;
        std::vector<Int> hf(len);
        hf[0] = 1;
        for (int d = 1; d < len; ++d) hf[d] = hf_cover_oracle(g, d);
        if (series_h_extract(hf, g.n - 2) != hj.h) return "h_J vs series oracle";
        if (hj.deg_h != g.n - 2 - b.M) return "deg h_J != n - 2 - M";
        if (hj.a_invariant != -b.M) return "a-invariant != -M";
        DegreeReport rep = degree_report(b);
        if (rep.deg_h_cover != hj.deg_h || rep.deg_h_edge != h_edge_fvector(b).degree())
            return "degree_report disagrees with assembled polynomials";
        // Dual-hypergraph specialization: the 2-uniform hypergraph of G.
        std::vector<VertexSet> edges;
        for (int u = 0; u < g.n; ++u)
            for (VertexSet t = g.adj[u] & ~vall(u + 1); t; t &= t - 1)
                edges.push_back(vbit(u) | vbit(vfirst(t)));
        HilbertProfile hd = h_dual_hypergraph(Hypergraph(g.n, edges));
        if (hd.h != hj.h || hd.dim != hj.dim) return "hypergraph dual vs cover h-polynomial";
    }
    return "";
}

}  // namespace

std::vector<CheckResult> verify_oracles(int exhaustive_nmax, int random_count, int random_nmax,
                                        const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    {
        std::vector<Graph> graphs;
        for (int n = 1; n <= exhaustive_nmax; ++n)
            for (Graph& g : connected_graphs(n, opt.jobs)) graphs.push_back(std::move(g));
        Failures fails;
        parallel_for(graphs.size(), opt.jobs, [&](std::size_t k) {
            std::string err = oracle_check(graphs[k]);
            if (!err.empty()) fails.add(to_graph6(graphs[k]) + ": " + err);
        });
        out.push_back(fails.result("oracles: exhaustive connected n <= " +
                                       std::to_string(exhaustive_nmax),
                                   static_cast<long>(graphs.size())));
    }
    {
        std::vector<Graph> graphs;
        std::mt19937_64 rng(opt.seed);
        for (int k = 0; k < random_count; ++k) graphs.push_back(random_graph(rng, 2, random_nmax));
        Failures fails;
        parallel_for(graphs.size(), opt.jobs, [&](std::size_t k) {
            std::string err = oracle_check(graphs[k]);
            if (!err.empty()) fails.add(to_graph6(graphs[k]) + ": " + err);
        });
        out.push_back(fails.result("oracles: " + std::to_string(random_count) +
                                       " random graphs n <= " + std::to_string(random_nmax),
                                   static_cast<long>(graphs.size())));
    }
    return out;
}

std::vector<CheckResult> verify_recursions(int tree_nmax, int forest_count, int forest_nmax,
                                           const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto check_one = [](const Graph& f) -> std::string {
        if (jk_pdim(f) != hochster_pdim(f, FieldOpt::rationals())) return "jk_pdim vs Hochster";
        JkAlphaM jk = jk_alpha_M(f);
        InvariantBundle b = bundle(f);
        if (jk.alpha != b.alpha || jk.M != b.M || jk.c != b.c) return "jk_alpha_M vs polynomial";
        return "";
    };
    {
        std::vector<Graph> trees;
        for (int n = 1; n <= tree_nmax; ++n)
            for (Graph& t : free_trees(n)) trees.push_back(std::move(t));
        Failures fails;
        parallel_for(trees.size(), opt.jobs, [&](std::size_t k) {
            std::string err = check_one(trees[k]);
            if (!err.empty()) fails.add(to_graph6(trees[k]) + ": " + err);
        });
        out.push_back(fails.result("recursions: all free trees n <= " + std::to_string(tree_nmax),
                                   static_cast<long>(trees.size())));
    }
    {
        std::mt19937_64 rng(opt.seed ^ 0xf0f0f0f0ULL);
        std::vector<Graph> forests;
        for (int k = 0; k < forest_count; ++k) forests.push_back(random_forest(rng, forest_nmax));
        Failures fails;
        parallel_for(forests.size(), opt.jobs, [&](std::size_t k) {
            std::string err = check_one(forests[k]);
            if (!err.empty()) fails.add(to_graph6(forests[k]) + ": " + err);
        });
        out.push_back(fails.result("recursions: " + std::to_string(forest_count) +
                                       " random forests n <= " + std::to_string(forest_nmax),
                                   static_cast<long>(forests.size())));
    }
    return out;
}

namespace {

void radius2_specs_rec(int L1, int m, int L2, int maxpart, std::vector<int>& parts,
                       std::vector<Radius2Spec>& out) {
    if (m == 0) {
        if (L2 == 0) out.emplace_back(L1, parts);
        return;
    }
    // Remaining parts are descending and at least 1.
    for (int t = std::min(maxpart, L2 - (m - 1)); t >= 1; --t) {
        parts.push_back(t);
        radius2_specs_rec(L1, m - 1, L2 - t, t, parts, out);
        parts.pop_back();
    }
}

std::vector<Radius2Spec> all_radius2_specs(int n) {
    std::vector<Radius2Spec> out;
    for (int L1 = 0; L1 <= n - 1; ++L1) {
        int rest = n - 1 - L1;  // m + L2
        for (int m = 0; 2 * m <= rest; ++m) {
            int L2 = rest - m;
            if (m == 0 && L2 != 0) continue;
            if (m > 0 && L2 < m) continue;
            std::vector<int> parts;
            radius2_specs_rec(L1, m, L2, L2, parts, out);
        }
    }
    return out;
}

void spot(std::vector<CheckResult>& out, const std::string& name, bool pass,
          const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

}  // namespace

std::vector<CheckResult> verify_families(int level, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int r2max = level ? 11 : 8;
    const int splitmax = level ? 10 : 7;
    const int bkmax = level ? 6 : 4;
    const int gkrmax = level ? 14 : 10;
    const int hnpmax = level ? 12 : 9;
    const int whisker_base = level ? 6 : 4;
    const int whisker_q = level ? 3 : 2;

    {  // radius-2 grid + exhaustive pair sweep
        Failures fails;
        long checked = 0;
        for (int n = 2; n <= r2max; ++n) {
            std::set<RegDegPair> measured_pairs;
            for (const Radius2Spec& spec : all_radius2_specs(n)) {
                ++checked;
                Graph t = build_radius2(spec);
                Measured meas = measure_graph(t);
                for (const std::string& e : prediction_mismatches(predict_radius2(spec), meas))
                    fails.add(spec.str() + ": " + e);
                if (meas.pdim && jk_pdim(t) != *meas.pdim)
                    fails.add(spec.str() + ": jk_pdim vs chordal formula");
                if (meas.reg_cover && meas.deg_h_cover)
                    measured_pairs.insert({*meas.reg_cover, *meas.deg_h_cover});
            }
            if (n >= 4 && measured_pairs != radius2_pairs(n))
                fails.add("radius2_pairs(" + std::to_string(n) + ") != exhaustively measured set");
        }
        out.push_back(fails.result("families: radius-2 grid n <= " + std::to_string(r2max), checked));
    }

    {  // radius-2 witnesses
        Failures fails;
        long checked = 0;
        for (int n = 4; n <= r2max; ++n)
            for (auto [r, d] : radius2_pairs(n)) {
                ++checked;
                Radius2Spec w = radius2_witness(n, r, d);
                if (w.n() != n) {
                    fails.add("witness size mismatch at n=" + std::to_string(n));
                    continue;
                }
                Measured meas = measure_graph(build_radius2(w));
                if (!meas.reg_cover || *meas.reg_cover != r || *meas.deg_h_cover != d)
                    fails.add("witness (" + std::to_string(r) + "," + std::to_string(d) + ") at n=" +
                              std::to_string(n) + " measures differently");
            }
        out.push_back(fails.result("families: radius-2 witnesses", checked));
    }

    {  // split grid over SplitSpecs
        Failures fails;
        long checked = 0;
        std::vector<SplitSpec> specs;
        for (int c = 1; c <= splitmax; ++c) {
            std::vector<int> s(c, 0);
            // descending tuples s_1 >= ... >= s_c >= 0 with c + sum <= splitmax
            auto rec = [&](auto&& self, int j, int maxval, int left) -> void {
                if (j == c) {
                    if (c >= 2 || s[0] >= 1) specs.emplace_back(c, s);
                    return;
                }
                for (int v = std::min(maxval, left); v >= 0; --v) {
                    s[j] = v;
                    self(self, j + 1, v, left - v);
                }
            };
            rec(rec, 0, splitmax - c, splitmax - c);
        }
        for (const SplitSpec& spec : specs) {
            ++checked;
            Graph g = build_split(spec);
            for (const std::string& e : prediction_mismatches(predict_split(g), measure_graph(g)))
                fails.add(spec.str() + ": " + e);
        }
        out.push_back(fails.result("families: split grid n <= " + std::to_string(splitmax), checked));
    }

    {  // split witnesses
        Failures fails;
        long checked = 0;
        for (int n = 2; n <= splitmax; ++n)
            for (auto [q, q2] : split_pairs(n)) {
                ++checked;
                SplitSpec w = split_witness(n, q);
                Measured meas = measure_graph(build_split(w));
                if (w.n() != n || !meas.reg_cover || *meas.reg_cover != q || *meas.deg_h_cover != q2)
                    fails.add("split witness q=" + std::to_string(q) + " at n=" + std::to_string(n));
            }
        out.push_back(fails.result("families: split witnesses", checked));
    }

    {  // B_k, G_{k,r}, H_{n,p}, H_{p,q}
        Failures fails;
        long checked = 0;
        for (int k = 1; k <= bkmax; ++k) {
            ++checked;
            Graph b = build_Bk(k);
            for (const std::string& e : prediction_mismatches(predict_Bk(k), measure_graph(b)))
                fails.add("B_" + std::to_string(k) + ": " + e);
            // B_k is split: its partition formulas must agree too.
            for (const std::string& e : prediction_mismatches(predict_split(b), measure_graph(b)))
                fails.add("B_" + std::to_string(k) + " as split: " + e);
        }
        for (int k = 1; k <= bkmax; ++k)
            for (int r = k; 2 * k + r + 2 <= gkrmax; ++r) {
                ++checked;
                Graph g = build_Gkr(k, r);
                Measured meas = measure_graph(g);
                for (const std::string& e : prediction_mismatches(predict_Gkr(k, r), meas))
                    fails.add("G_{" + std::to_string(k) + "," + std::to_string(r) + "}: " + e);
                const int n = g.n;
                if (meas.deg_h_cover &&
                    !(n - 3 >= *meas.deg_h_cover && *meas.deg_h_cover >= (2 * (n - 2) + 2) / 3))
                    fails.add("G_{k,r} degree bound violated at n=" + std::to_string(n));
            }
        for (int n = 6; n <= hnpmax; ++n)
            for (int p = 2; 2 * p + 1 <= n; ++p) {
                if (p == 2 && n < 6) continue;
                ++checked;
                Graph g = build_Hnp(n, p);
                GraphClass cls = classify(g);
                if (!cls.chordal || !cls.connected) fails.add("H_{n,p} not connected chordal");
                for (const std::string& e :
                     prediction_mismatches(predict_Hnp(n, p), measure_graph(g)))
                    fails.add("H_{" + std::to_string(n) + "," + std::to_string(p) + "}: " + e);
            }
        for (int p = 2; p <= 4; ++p)
            for (int q = 1; q <= (level ? 4 : 2); ++q) {
                if (p * (q + 1) > 20) continue;
                ++checked;
                for (const std::string& e : prediction_mismatches(predict_Hpq(p, q),
                                                                  measure_graph(build_Hpq(p, q))))
                    fails.add("H_{p=" + std::to_string(p) + ",q=" + std::to_string(q) + "}: " + e);
            }
        out.push_back(fails.result("families: B_k / G_{k,r} / H_{n,p} / H_{p,q} grids", checked));
    }

    {  // whiskers and cones
        Failures fails;
        long checked = 0;
        std::vector<Graph> bases;
        for (int n = 1; n <= whisker_base; ++n)
            for (Graph& g : connected_graphs(n, opt.jobs)) bases.push_back(std::move(g));
        parallel_for(bases.size(), opt.jobs, [&](std::size_t bi) {
            const Graph& base = bases[bi];
            for (int q = 1; q <= whisker_q; ++q) {
                if (base.n * (q + 1) > kMaxVertices) continue;
                Graph w = whisker_all(base, q);
                for (const std::string& e : prediction_mismatches(predict_whisker_all(base, q),
                                                                  measure_graph(w, false)))
                    fails.add(to_graph6(base) + " q=" + std::to_string(q) + ": " + e);
            }
            for (int v = 0; v < base.n; ++v) {
                Graph w = whisker_vertex(base, v);
                for (const std::string& e : prediction_mismatches(predict_whisker_vertex(base, v),
                                                                  measure_graph(w, false)))
                    fails.add(to_graph6(base) + " whisker@" + std::to_string(v) + ": " + e);
            }
            Graph c = cone(base);
            for (const std::string& e :
                 prediction_mismatches(predict_cone(base), measure_graph(c, base.n <= 9)))
                fails.add(to_graph6(base) + " cone: " + e);
        });
        checked = static_cast<long>(bases.size());
        out.push_back(fails.result("families: whiskers and cones, base n <= " +
                                       std::to_string(whisker_base),
                                   checked));
    }
    return out;
}

std::vector<CheckResult> verify_census_theorems(int nmax, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Failures fails;
    long checked = 0;
    std::mutex reg1_mu;
    std::vector<CanonCode> reg1_codes;

    for (int n = 2; n <= nmax; ++n) {
        std::vector<Graph> graphs = connected_graphs(n, opt.jobs);
        checked += static_cast<long>(graphs.size());
        parallel_for(graphs.size(), opt.jobs, [&](std::size_t k) {
            const Graph& g = graphs[k];
            const std::string g6 = to_graph6(g);
            InvariantBundle b = bundle(g);
            GraphClass cls = classify(g);
            if (g.has_any_edge() && b.M > b.alpha - 1) fails.add(g6 + ": M > alpha-1");
            if (euler_characteristic(independence_complex(g)) != b.gG)
                fails.add(g6 + ": euler characteristic != g(G)");
            int i = i_number(g);
            int reg = reg_cover(g, FieldOpt::rationals());
            if (cls.chordal && reg != g.n - i - 1)
                fails.add(g6 + ": chordal reg formula disagrees with Hochster");
            if (cls.block_graph) {
                BlockCheckReport rep = block_check(g);
                if (!rep.satisfied || !rep.poly_identity || !rep.i_recursion)
                    fails.add(g6 + ": block-graph recursion/theorem failed");
                if (rep.M != b.M || rep.i != i) fails.add(g6 + ": block report mismatch");
                if (reg - (g.n - 2 - b.M) != rep.reg_minus_deg)
                    fails.add(g6 + ": block reg-deg bookkeeping");
            }
            int deg = g.n - 2 - b.M;
            int band = (g.n + 1) / 2 - 2;
            // The band bound is negative for n = 2, where K_2 sits at (0,0);
            // the conjecture's domain starts at n = 3.
            if (g.n >= 3 && std::abs(reg - deg) > band)
                fails.add(g6 + ": band conjecture violated");
            if (b.alpha <= g.n / 2 + 1 && (deg < band || reg < band))
                fails.add(g6 + ": alpha corollary violated");
            if (reg == 1 && deg >= 2) fails.add(g6 + ": realized (1,d>=2)");
            if (cls.split) {
                if (reg != deg) fails.add(g6 + ": split graph off the diagonal");
                if (!split_pairs(g.n).count({reg, deg}))
                    fails.add(g6 + ": split pair outside split_pairs");
            }
            if (reg == 1) {
                std::lock_guard<std::mutex> lock(reg1_mu);
                reg1_codes.push_back(canon_code(g));
            }
        });
    }
    out.push_back(fails.result("census theorems: connected n <= " + std::to_string(nmax), checked));

    {  // the reg = 1 classification: exactly C_3, P_3, P_4
        std::vector<CanonCode> expect = {canon_code(parse_edge_list("3:0-1,1-2,0-2")),
                                         canon_code(parse_edge_list("3:0-1,1-2")),
                                         canon_code(parse_edge_list("4:0-1,1-2,2-3"))};
        std::sort(expect.begin(), expect.end());
        std::sort(reg1_codes.begin(), reg1_codes.end());
        spot(out, "census theorems: reg = 1 exactly {C_3, P_3, P_4}", reg1_codes == expect,
             std::to_string(reg1_codes.size()) + " graphs with reg = 1");
    }
    return out;
}

std::vector<CheckResult> verify_pair_figures() {
    std::vector<CheckResult> out;
    const std::set<RegDegPair> tree9 = {{4, 3}, {4, 4}, {4, 5}, {4, 6}, {4, 7}, {5, 5},
                                        {5, 6}, {5, 7}, {6, 6}, {6, 7}, {7, 7}};
    spot(out, "figures: radius2_pairs(9) matches the filled tree overlay",
         radius2_pairs(9) == tree9);
    const std::set<RegDegPair> split9 = {{3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}};
    spot(out, "figures: split_pairs(9) is the diagonal (3,3)..(7,7)", split_pairs(9) == split9);
    spot(out, "figures: split_q_min(9) = 3", split_q_min(9) == 3);
    return out;
}

int run_verify(int level, int jobs, std::ostream& os) {
    VerifyOptions opt;
    opt.jobs = jobs;
    std::vector<CheckResult> all;
    auto add = [&](std::vector<CheckResult> v) {
        for (CheckResult& c : v) all.push_back(std::move(c));
    };
    if (level == 0) {
        add(verify_oracles(6, 100, 8, opt));
        add(verify_recursions(8, 50, 12, opt));
        add(verify_families(0, opt));
        add(verify_census_theorems(6, opt));
    } else {
        add(verify_oracles(7, 500, 10, opt));
        add(verify_recursions(9, 200, 14, opt));
        add(verify_families(1, opt));
        add(verify_census_theorems(8, opt));
    }
    add(verify_pair_figures());
    int failures = 0;
    for (const CheckResult& c : all) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
        if (!c.pass) ++failures;
    }
    return failures;
}

}  // namespace covreg
