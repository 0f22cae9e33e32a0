// covreg: exact invariants of edge and cover ideals of finite simple graphs,
// driven by the independence polynomial. Subcommands: invariants, family,
// survey, pairs, verify.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "covreg/betti.hpp"
#include "covreg/enumerate.hpp"
#include "covreg/families.hpp"
#include "covreg/hilbert.hpp"
#include "covreg/indpoly.hpp"
#include "covreg/recursions.hpp"
#include "covreg/survey.hpp"
#include "covreg/verify.hpp"

using nlohmann::json;
using namespace covreg;

namespace {

FieldOpt parse_field(const std::string& s) {
    if (s == "q" || s.empty()) return FieldOpt::rationals();
    if (s.rfind("p:", 0) == 0) return FieldOpt::prime(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
    throw CLI::ValidationError("--field", "expected 'q' or 'p:PRIME'");
}

// --g6 accepts a literal graph6 string, a file name, or "-" for stdin;
// only the first graph of a file/stream is used here.
Graph load_g6_arg(const std::string& arg) {
    std::string line;
    if (arg == "-") {
        if (!std::getline(std::cin, line)) throw ParseError("empty graph6 input", 0);
        return from_graph6(line);
    }
    std::ifstream in(arg);
    if (in) {
        if (!std::getline(in, line)) throw ParseError("empty graph6 file", 0);
        return from_graph6(line);
    }
    return from_graph6(arg);
}

Graph load_graph(const std::string& g6, const std::string& edges) {
    if (!g6.empty() && !edges.empty())
        throw CLI::ValidationError("input", "--g6 and --edges are mutually exclusive");
    if (!g6.empty()) return load_g6_arg(g6);
    if (!edges.empty()) return parse_edge_list(edges);
    throw CLI::ValidationError("input", "one of --g6 or --edges is required");
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

int cmd_invariants(const Graph& g, bool want_betti, const FieldOpt& field,
                   const std::string& format) {
    InvariantBundle b = bundle(g);
    GraphClass cls = classify(g);
    std::optional<HilbertProfile> hj;
    std::optional<IntPoly> hi;
    std::optional<int> i_val, reg, pdim;
    if (g.n <= 32) i_val = i_number(g);
    if (g.has_any_edge()) {
        hj = h_cover(b);
        hi = h_edge_fvector(b);
        if (g.n <= 16) {
            reg = reg_cover(g, field);
            pdim = *reg + 1;
        } else if (cls.chordal && cls.connected && i_val) {
            reg = g.n - *i_val - 1;
            pdim = *reg + 1;
        }
    }
    std::optional<BettiTable> table;
    if (want_betti && g.n <= 16) table = hochster_table(g, field);

    if (format == "json") {
        json out;
        out["schema"] = "covreg.invariants/1";
        out["graph6"] = to_graph6(g);
        out["n"] = g.n;
        out["edges"] = g.edge_count();
        json gv = json::array();
        for (const Int& c : b.gvec) gv.push_back(c.get_str());
        out["gvector"] = gv;
        out["P"] = b.poly().str("x");
        out["alpha"] = b.alpha;
        out["M"] = b.M;
        out["c"] = b.c.get_str();
        out["gG"] = b.gG.get_str();
        if (i_val) out["i"] = *i_val;
        if (reg) out["reg_cover"] = *reg;
        if (pdim) out["pdim_edge"] = *pdim;
        if (hj) {
            out["h_cover"] = hj->h.str();
            out["deg_h_cover"] = hj->deg_h;
            out["a_invariant"] = hj->a_invariant;
        }
        if (hi) {
            out["h_edge"] = hi->str();
            out["deg_h_edge"] = hi->degree();
        }
        json flags = json::array();
        if (cls.connected) flags.push_back("connected");
        if (cls.forest) flags.push_back("forest");
        if (cls.chordal) flags.push_back("chordal");
        if (cls.split) flags.push_back("split");
        if (cls.block_graph) flags.push_back("block");
        out["flags"] = flags;
        out["radius"] = cls.radius;
        if (table) {
            json rows = json::array();
            for (const auto& [ij, v] : table->entries)
                rows.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", v}});
            out["betti"] = rows;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "graph: " << to_graph6(g) << "  (" << to_edge_list(g) << ")\n";
    std::cout << "n = " << g.n << ", edges = " << g.edge_count() << "\n";
    std::cout << "P_G(x) = " << b.poly().str("x") << "\n";
    std::cout << "alpha = " << b.alpha << ", M = " << b.M << ", c = " << b.c
              << ", g(G) = " << b.gG << "\n";
    if (i_val) std::cout << "i(G) = " << *i_val << "\n";
    if (hi) std::cout << "h_{R/I}(t) = " << hi->str() << "   (deg " << hi->degree() << ")\n";
    if (hj)
        std::cout << "h_{R/J}(t) = " << hj->h.str() << "   (deg " << hj->deg_h
                  << ", a-invariant " << hj->a_invariant << ")\n";
    if (reg) std::cout << "reg(R/J) = " << *reg << ", pdim(R/I) = " << *pdim << "\n";
    std::string fl;
    if (cls.connected) fl += " connected";
    if (cls.forest) fl += " forest";
    if (cls.chordal) fl += " chordal";
    if (cls.split) fl += " split";
    if (cls.block_graph) fl += " block";
    std::cout << "class:" << (fl.empty() ? " (none)" : fl) << ", radius = ";
    if (cls.radius < 0)
        std::cout << "inf\n";
    else
        std::cout << cls.radius << "\n";
    if (table) std::cout << "Betti table of R/I(G):\n" << table->triangle();
    return 0;
}

int report_family(const Graph& g, const Prediction& pred, const std::string& format) {
    Measured meas = measure_graph(g);
    std::vector<std::string> bad = prediction_mismatches(pred, meas);

    auto opt_str = [](const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; };
    if (format == "json") {
        json out;
        out["schema"] = "covreg.family/1";
        out["graph6"] = to_graph6(g);
        out["n"] = g.n;
        json p, m;
        if (pred.P) p["P"] = pred.P->str("x");
        m["P"] = meas.P.str("x");
        auto put = [&](const char* k, const std::optional<int>& pv, const std::optional<int>& mv) {
            if (pv) p[k] = *pv;
            if (mv) m[k] = *mv;
        };
        put("alpha", pred.alpha, meas.alpha);
        put("M", pred.M, meas.M);
        put("i", pred.i, meas.i);
        put("pdim", pred.pdim, meas.pdim);
        put("reg_cover", pred.reg_cover, meas.reg_cover);
        put("deg_h_cover", pred.deg_h_cover, meas.deg_h_cover);
        put("deg_h_edge", pred.deg_h_edge, meas.deg_h_edge);
        out["predicted"] = p;
        out["measured"] = m;
        out["match"] = bad.empty();
        out["mismatches"] = bad;
        std::cout << out.dump(2) << "\n";
        return bad.empty() ? 0 : 1;
    }

    std::cout << "graph: " << to_graph6(g) << "  (" << to_edge_list(g) << ")\n";
    if (pred.P) {
        bool ok = *pred.P == meas.P;
        std::cout << "  P: predicted " << pred.P->str("x") << "  " << (ok ? "MATCH" : "MISMATCH")
                  << "\n";
    }
    auto row = [&](const char* name, const std::optional<int>& pv, const std::optional<int>& mv) {
        if (!pv) return;
        std::cout << "  " << name << ": predicted " << opt_str(pv) << ", measured " << opt_str(mv);
        auto it = pred.source.find(name);
        if (it != pred.source.end()) std::cout << "   [" << it->second << "]";
        std::cout << "  " << (mv && *pv == *mv ? "MATCH" : "MISMATCH") << "\n";
    };
    row("alpha", pred.alpha, meas.alpha);
    row("M", pred.M, meas.M);
    row("i", pred.i, meas.i);
    row("pdim", pred.pdim, meas.pdim);
    row("reg_cover", pred.reg_cover, meas.reg_cover);
    row("deg_h_cover", pred.deg_h_cover, meas.deg_h_cover);
    row("deg_h_edge", pred.deg_h_edge, meas.deg_h_edge);
    if (bad.empty()) {
        std::cout << "all predicted fields MATCH\n";
        return 0;
    }
    for (const std::string& e : bad) std::cout << "MISMATCH " << e << "\n";
    return 1;
}

int cmd_survey(const std::string& g6file, int internal_n, const SurveyOptions& opt,
               const std::string& out_prefix, const std::string& format) {
    SurveyResult res;
    if (!g6file.empty() && internal_n > 0)
        throw CLI::ValidationError("survey", "--g6 and --n are mutually exclusive");
    if (!g6file.empty()) {
        if (g6file == "-") {
            res = run_survey_graph6(std::cin, opt);
        } else {
            std::ifstream in(g6file);
            if (!in) throw CLI::ValidationError("--g6", "cannot open " + g6file);
            res = run_survey_graph6(in, opt);
        }
    } else if (internal_n > 0) {
        res = run_survey_internal(internal_n, opt);
    } else {
        throw CLI::ValidationError("survey", "one of --g6 or --n is required");
    }

    std::cerr << "surveyed " << res.records.size() << " graphs, skipped " << res.skipped << "\n";
    for (const std::string& s : res.notes) std::cerr << "note: " << s << "\n";
    for (const std::string& s : res.band_violations) std::cerr << "band violation: " << s << "\n";
    for (const std::string& s : res.alpha_corollary_violations)
        std::cerr << "alpha corollary violation: " << s << "\n";
    for (const std::string& s : res.conjecture_conflicts) std::cerr << "conjecture conflict: " << s << "\n";
    for (const std::string& s : res.hard_failures) std::cerr << "HARD FAILURE: " << s << "\n";

    if (!out_prefix.empty()) {
        auto want = [&](const char* f) { return format == "all" || format == f; };
        if (want("csv")) {
            std::ofstream f(out_prefix + ".csv");
            emit_csv(res.records, f);
        }
        if (want("jsonl")) {
            std::ofstream f(out_prefix + ".jsonl");
            emit_jsonl(res.records, f);
        }
        if (want("tsv")) {
            std::ofstream f(out_prefix + ".tsv");
            emit_scatter_tsv(res.pairs, f);
        }
    } else {
        emit_scatter_tsv(res.pairs, std::cout);
    }
    return res.hard_failures.empty() ? 0 : 1;
}

int cmd_pairs(const std::string& cls, int n) {
    if (cls == "trees2") {
        std::cout << "reg\tdeg\twitness\tgraph6\n";
        for (auto [r, d] : radius2_pairs(n)) {
            Radius2Spec w = radius2_witness(n, r, d);
            std::cout << r << '\t' << d << '\t' << w.str() << '\t' << to_graph6(build_radius2(w))
                      << "\n";
        }
        return 0;
    }
    if (cls == "split") {
        std::cout << "reg\tdeg\twitness\tgraph6\n";
        for (auto [q, q2] : split_pairs(n)) {
            SplitSpec w = split_witness(n, q);
            std::cout << q << '\t' << q2 << '\t' << w.str() << '\t' << to_graph6(build_split(w))
                      << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("pairs", "class must be trees2 or split");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact edge/cover-ideal invariants of graphs via independence polynomials"};
    app.require_subcommand(1);

    // invariants
    auto* inv = app.add_subcommand("invariants", "invariants of one graph");
    std::string inv_g6, inv_edges, inv_field = "q", inv_format = "text";
    bool inv_betti = false;
    inv->add_option("--g6", inv_g6, "graph6 string, file, or - for stdin");
    inv->add_option("--edges", inv_edges, "edge list \"n: u-v,u-v,...\"");
    inv->add_flag("--betti", inv_betti, "print the graded Betti table of R/I(G)");
    inv->add_option("--field", inv_field, "homology coefficients: q or p:PRIME");
    inv->add_option("--format", inv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // family
    auto* fam = app.add_subcommand("family", "build a named family member and check predictions");
    std::string fam_name;
    std::vector<std::string> fam_params;
    std::string fam_g6, fam_edges, fam_format = "text", fam_ts;
    int fam_L1 = -1, fam_q = 1, fam_v = 0;
    bool fam_trace = false;
    fam->add_option("name", fam_name,
                    "radius2 | split | Bk | Gkr | Hnp | Hpq | whisker | whisker1 | cone")
        ->required();
    fam->add_option("params", fam_params, "numeric parameters (family dependent)");
    fam->add_option("--L1", fam_L1, "radius2: pendant leaves at the center");
    fam->add_option("--ts", fam_ts, "radius2: comma list of branch leaf counts");
    fam->add_option("--g6", fam_g6, "base graph for whisker/whisker1/cone");
    fam->add_option("--edges", fam_edges, "base graph as edge list");
    fam->add_option("--q", fam_q, "whisker: pendants per vertex");
    fam->add_option("--v", fam_v, "whisker1: vertex to whisker");
    fam->add_flag("--trace", fam_trace, "block-graph recursion trace for the built graph");
    fam->add_option("--format", fam_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // survey
    auto* sur = app.add_subcommand("survey", "batch pipeline over a graph corpus");
    std::string sur_g6, sur_out, sur_field = "q", sur_format = "all";
    int sur_n = 0, sur_jobs = 1;
    double sur_spot = 0.05, sur_sample = 0.01;
    std::uint64_t sur_seed = 0x5eedcafeULL;
    sur->add_option("--g6", sur_g6, "graph6 file or - for stdin");
    sur->add_option("--n", sur_n, "internal census of connected graphs, 1 <= n <= 7");
    sur->add_option("--out", sur_out, "output file prefix (.csv/.jsonl/.tsv)");
    sur->add_option("--format", sur_format, "csv, jsonl, tsv, or all")
        ->check(CLI::IsMember({"csv", "jsonl", "tsv", "all"}));
    sur->add_option("--field", sur_field, "homology coefficients: q or p:PRIME");
    sur->add_option("--jobs", sur_jobs, "worker threads");
    sur->add_option("--seed", sur_seed, "sampling seed");
    sur->add_option("--spot-rate", sur_spot, "chordal fast-path Hochster re-check rate");
    sur->add_option("--sample-rate", sur_sample, "series-oracle identity re-check rate");

    // pairs
    auto* prs = app.add_subcommand("pairs", "predicted realizable (reg, deg) pairs with witnesses");
    std::string prs_class;
    int prs_n = 0;
    prs->add_option("class", prs_class, "trees2 or split")->required();
    prs->add_option("n", prs_n, "vertex count")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "run the cross-check suites");
    std::string ver_level;
    int ver_jobs = 1;
    ver->add_option("level", ver_level, "quick or full")
        ->required()
        ->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--jobs", ver_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*inv) return cmd_invariants(load_graph(inv_g6, inv_edges), inv_betti,
                                        parse_field(inv_field), inv_format);
        if (*fam) {
            auto num = [&](std::size_t k) -> int {
                if (k >= fam_params.size())
                    throw CLI::ValidationError("family", "missing numeric parameter");
                return std::stoi(fam_params[k]);
            };
            Graph g;
            Prediction pred;
            if (fam_name == "radius2") {
                Radius2Spec spec(fam_L1 >= 0 ? fam_L1 : (fam_params.empty() ? 0 : num(0)),
                                 parse_int_list(fam_ts));
                g = build_radius2(spec);
                pred = predict_radius2(spec);
            } else if (fam_name == "split") {
                SplitSpec spec(num(0), fam_params.size() > 1 ? parse_int_list(fam_params[1])
                                                             : std::vector<int>(num(0), 0));
                g = build_split(spec);
                pred = predict_split(g);
            } else if (fam_name == "Bk") {
                g = build_Bk(num(0));
                pred = predict_Bk(num(0));
            } else if (fam_name == "Gkr") {
                g = build_Gkr(num(0), num(1));
                pred = predict_Gkr(num(0), num(1));
            } else if (fam_name == "Hnp") {
                g = build_Hnp(num(0), num(1));
                pred = predict_Hnp(num(0), num(1));
            } else if (fam_name == "Hpq") {
                g = build_Hpq(num(0), num(1));
                pred = predict_Hpq(num(0), num(1));
            } else if (fam_name == "whisker") {
                Graph base = load_graph(fam_g6, fam_edges);
                g = whisker_all(base, fam_q);
                pred = predict_whisker_all(base, fam_q);
            } else if (fam_name == "whisker1") {
                Graph base = load_graph(fam_g6, fam_edges);
                g = whisker_vertex(base, fam_v);
                pred = predict_whisker_vertex(base, fam_v);
            } else if (fam_name == "cone") {
                Graph base = load_graph(fam_g6, fam_edges);
                g = cone(base);
                pred = predict_cone(base);
            } else {
                throw CLI::ValidationError("family", "unknown family " + fam_name);
            }
            int rc = report_family(g, pred, fam_format);
            if (fam_trace) {
                BlockCheckReport rep = block_check(g, true);
                std::cout << "block recursion trace:\n" << rep.trace;
            }
            return rc;
        }
        if (*sur) {
            SurveyOptions opt;
            opt.field = parse_field(sur_field);
            opt.jobs = sur_jobs;
            opt.chordal_spot_rate = sur_spot;
            opt.identity_sample_rate = sur_sample;
            opt.seed = sur_seed;
            return cmd_survey(sur_g6, sur_n, opt, sur_out, sur_format);
        }
        if (*prs) return cmd_pairs(prs_class, prs_n);
        if (*ver) {
            int fails = run_verify(ver_level == "quick" ? 0 : 1, ver_jobs, std::cout);
            if (fails) std::cout << fails << " suite failure(s)\n";
            return fails == 0 ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
