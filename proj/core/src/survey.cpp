#include "covreg/survey.hpp"

#include <atomic>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "covreg/enumerate.hpp"
#include "covreg/hilbert.hpp"
#include "covreg/indpoly.hpp"

namespace covreg {

std::string SurveyRecord::flags() const {
    std::string f;
    if (chordal) f += 'c';
    if (split) f += 's';
    if (block) f += 'b';
    if (forest) f += 'f';
    if (radius_le2) f += 'r';
    return f;
}

std::vector<std::pair<int, int>> PairSet::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(counts.size());
    for (const auto& [p, c] : counts) out.push_back(p);
    return out;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

// Deterministic per-graph coin, independent of thread scheduling.
bool sampled(std::uint64_t seed, const std::string& g6, std::uint64_t salt, double rate) {
    if (rate <= 0) return false;
    if (rate >= 1) return true;
    std::uint64_t h = seed ^ salt;
    for (char c : g6) h = mix64(h ^ static_cast<unsigned char>(c));
    return (h >> 11) * 0x1p-53 < rate;
}

struct PerGraph {
    std::optional<SurveyRecord> rec;
    std::string note;
    std::string hard;
};

PerGraph process_one(const Graph& g, const std::string& g6, const SurveyOptions& opt) {
    PerGraph out;
    if (!is_connected(g) || g.n == 0) {
        out.note = g6 + ": skipped (disconnected)";
        return out;
    }
    if (!g.has_any_edge()) {
        out.note = g6 + ": skipped (edgeless)";
        return out;
    }
    InvariantBundle b = bundle(g);
    GraphClass cls = classify(g);

    SurveyRecord r;
    r.graph6 = g6;
    r.n = g.n;
    r.alpha = b.alpha;
    r.M = b.M;
    r.gG = b.gG;
    r.i = i_number(g);
    r.chordal = cls.chordal;
    r.split = cls.split;
    r.block = cls.block_graph;
    r.forest = cls.forest;
    r.radius_le2 = cls.connected && cls.radius >= 0 && cls.radius <= 2;

    if (cls.chordal) {
        r.reg_cover = g.n - r.i - 1;
        if (g.n <= 14 && sampled(opt.seed, g6, 0xc0de, opt.chordal_spot_rate)) {
            int hoch = reg_cover(g, opt.field);
            if (hoch != r.reg_cover) {
                out.hard = g6 + ": chordal fast path reg=" + std::to_string(r.reg_cover) +
                           " but Hochster reg=" + std::to_string(hoch);
                return out;
            }
        }
    } else {
        r.reg_cover = reg_cover(g, opt.field);
    }
    r.pdim = r.reg_cover + 1;

    HilbertProfile hj = h_cover(b);
    r.deg_h_cover = hj.deg_h;
    r.deg_h_edge = h_edge_fvector(b).degree();
    r.a_invariant = hj.a_invariant;

    // Record-internal identities, checked on every record.
    std::ostringstream bad;
    if (r.deg_h_cover != g.n - 2 - r.M) bad << "deg h_J != n-2-M; ";
    if (r.deg_h_edge != r.alpha - r.M) bad << "deg h_I != alpha-M; ";
    if (r.a_invariant != -r.M) bad << "a-invariant != -M; ";
    if (g.has_any_edge() && r.M > r.alpha - 1) bad << "M > alpha-1; ";

    // Series-oracle resample: rebuild both h-polynomials from brute-force
    // Hilbert functions.
    if (sampled(opt.seed, g6, 0x5a5a, opt.identity_sample_rate)) {
        const int len = 2 * g.n + 2;
        std::vector<Int> hf(len);
        hf[0] = 1;
        for (int d = 1; d < len; ++d) hf[d] = hf_cover_oracle(g, d);
        if (series_h_extract(hf, g.n - 2) != hj.h) bad << "h_J series oracle mismatch; ";
        for (int d = 0; d < len; ++d) hf[d] = hf_edge_oracle(g, d);
        if (series_h_extract(hf, b.alpha) != h_edge_fvector(b)) bad << "h_I series oracle mismatch; ";
        if (h_edge_Ds(b) != h_edge_fvector(b)) bad << "h_I D_s form mismatch; ";
    }
    if (!bad.str().empty()) {
        out.hard = g6 + ": " + bad.str();
        return out;
    }
    out.rec = std::move(r);
    return out;
}

SurveyResult finalize(std::vector<PerGraph>& per, const SurveyOptions&) {
    SurveyResult res;
    res.records.reserve(per.size());
    for (PerGraph& p : per) {
        if (!p.note.empty()) {
            ++res.skipped;
            res.notes.push_back(std::move(p.note));
        }
        if (!p.hard.empty()) res.hard_failures.push_back(std::move(p.hard));
        if (p.rec) res.records.push_back(std::move(*p.rec));
    }
    for (const SurveyRecord& r : res.records) {
        ++res.pairs.counts[{r.reg_cover, r.deg_h_cover}];
        if (!check_band(r)) res.band_violations.push_back(r.graph6 + ": band exceeded");
        if (!check_alpha_corollary(r))
            res.alpha_corollary_violations.push_back(r.graph6 + ": alpha corollary violated");
    }
    if (!res.records.empty()) {
        UnrealizableReport u = check_unrealizable(res.pairs, res.records.front().n);
        for (auto [r, d] : u.lemma_violations)
            res.hard_failures.push_back("realized pair (" + std::to_string(r) + "," +
                                        std::to_string(d) + ") contradicts the reg=1 lemma");
        for (auto [r, d] : u.conjecture_conflicts)
            res.conjecture_conflicts.push_back("pair (" + std::to_string(r) + "," +
                                               std::to_string(d) +
                                               ") satisfies the verbatim unrealizability predicate");
    }
    return res;
}

}  // namespace

SurveyResult run_survey_graphs(const std::vector<Graph>& graphs, const SurveyOptions& opt) {
    std::vector<PerGraph> per(graphs.size());
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || graphs.size() < 4) {
        for (std::size_t k = 0; k < graphs.size(); ++k)
            per[k] = process_one(graphs[k], to_graph6(graphs[k]), opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= graphs.size()) return;
                    per[k] = process_one(graphs[k], to_graph6(graphs[k]), opt);
                }
            });
        for (auto& w : workers) w.join();
    }
    return finalize(per, opt);
}

SurveyResult run_survey_graph6(std::istream& in, const SurveyOptions& opt) {
    std::vector<Graph> graphs;
    std::vector<std::string> lines;
    std::vector<std::string> parse_notes;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(from_graph6(line));
            lines.push_back(line);
        } catch (const ParseError& e) {
            parse_notes.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    SurveyResult res = run_survey_graphs(graphs, opt);
    res.skipped += static_cast<long>(parse_notes.size());
    res.notes.insert(res.notes.begin(), parse_notes.begin(), parse_notes.end());
    return res;
}

SurveyResult run_survey_internal(int n, const SurveyOptions& opt) {
    return run_survey_graphs(enumerate_connected(n), opt);
}

bool check_band(const SurveyRecord& r) {
    int band = (r.n + 1) / 2 - 2;
    int diff = r.reg_cover - r.deg_h_cover;
    if (diff < 0) diff = -diff;
    return diff <= band;
}

bool check_alpha_corollary(const SurveyRecord& r) {
    if (r.alpha > r.n / 2 + 1) return true;  // hypothesis fails: vacuous
    int bound = (r.n + 1) / 2 - 2;
    return r.deg_h_cover >= bound && r.reg_cover >= bound;
}

UnrealizableReport check_unrealizable(const PairSet& pairs, int) {
    UnrealizableReport rep;
    for (const auto& [p, cnt] : pairs.counts) {
        auto [r, d] = p;
        if (cnt <= 0) continue;
        if (r == 1 && d >= 2) rep.lemma_violations.push_back(p);
        bool left = r <= (d + 1) / 2;
        bool right = d >= (2 * r + 1) / 3;  // ceil((2r-1)/3)
        if (left || right) rep.conjecture_conflicts.push_back(p);
    }
    return rep;
}

void emit_csv(const std::vector<SurveyRecord>& records, std::ostream& out) {
    out << "graph6,n,alpha,M,gG,i,pdim,reg,degJ,degI,aInv,flags\n";
    for (const SurveyRecord& r : records)
        out << r.graph6 << ',' << r.n << ',' << r.alpha << ',' << r.M << ',' << r.gG.get_str()
            << ',' << r.i << ',' << r.pdim << ',' << r.reg_cover << ',' << r.deg_h_cover << ','
            << r.deg_h_edge << ',' << r.a_invariant << ',' << r.flags() << '\n';
}

void emit_jsonl(const std::vector<SurveyRecord>& records, std::ostream& out) {
    for (const SurveyRecord& r : records) {
        out << "{\"schema\":\"covreg.record/1\",\"graph6\":\"";
        for (char c : r.graph6) {
            if (c == '\\' || c == '"') out << '\\';
            out << c;
        }
        out << "\",\"n\":" << r.n << ",\"alpha\":" << r.alpha << ",\"M\":" << r.M
            << ",\"gG\":" << r.gG.get_str() << ",\"i\":" << r.i << ",\"pdim\":" << r.pdim
            << ",\"reg\":" << r.reg_cover << ",\"degJ\":" << r.deg_h_cover
            << ",\"degI\":" << r.deg_h_edge << ",\"aInv\":" << r.a_invariant << ",\"flags\":\""
            << r.flags() << "\"}\n";
    }
}

void emit_scatter_tsv(const PairSet& pairs, std::ostream& out) {
    for (const auto& [p, cnt] : pairs.counts)
        out << p.first << '\t' << p.second << '\t' << cnt << '\n';
}

}  // namespace covreg
