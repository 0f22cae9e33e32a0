#ifndef COVREG_SURVEY_HPP
#define COVREG_SURVEY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "covreg/betti.hpp"
#include "covreg/graph.hpp"
#include "covreg/poly.hpp"

namespace covreg {

struct SurveyRecord {
    std::string graph6;
    int n = 0;
    int alpha = 0;
    int M = 0;
    Int gG;
    int i = 0;
    int pdim = 0;
    int reg_cover = 0;
    int deg_h_cover = 0;
    int deg_h_edge = 0;
    int a_invariant = 0;
    bool chordal = false, split = false, block = false, forest = false, radius_le2 = false;

    /// Compact flag string: subset of "csbfr" (chordal, split, block,
    /// forest, radius <= 2).
    std::string flags() const;
};

struct PairSet {
    std::map<std::pair<int, int>, long> counts;  // (reg, deg) -> graphs

    std::vector<std::pair<int, int>> pairs() const;
    bool operator==(const PairSet& o) const { return counts == o.counts; }
};

struct SurveyOptions {
    FieldOpt field = FieldOpt::rationals();
    int jobs = 1;
    /// Fraction of chordal graphs whose fast-path regularity is re-checked
    /// against Hochster.
    double chordal_spot_rate = 0.05;
    /// Fraction of records whose degree identities are re-derived from the
    /// brute-force Hilbert series.
    double identity_sample_rate = 0.01;
    std::uint64_t seed = 0x5eedcafeULL;
};

struct SurveyResult {
    std::vector<SurveyRecord> records;  // input order
    PairSet pairs;
    long skipped = 0;
    std::vector<std::string> notes;          // skipped inputs, line numbers
    std::vector<std::string> hard_failures;  // identity or theorem violations
    std::vector<std::string> band_violations;
    std::vector<std::string> alpha_corollary_violations;
    std::vector<std::string> conjecture_conflicts;  // verbatim unrealizable-pair predicate
};

SurveyResult run_survey_graphs(const std::vector<Graph>& graphs, const SurveyOptions& opt);
SurveyResult run_survey_graph6(std::istream& in, const SurveyOptions& opt);
/// Internal generator path, 1 <= n <= 7.
SurveyResult run_survey_internal(int n, const SurveyOptions& opt);

/// |reg - deg| <= ceil(n/2) - 2.
bool check_band(const SurveyRecord& r);

/// If alpha <= floor(n/2) + 1, both reg and deg must be >= ceil(n/2) - 2;
/// vacuously true otherwise.
bool check_alpha_corollary(const SurveyRecord& r);

struct UnrealizableReport {
    /// Pairs (1, d), d >= 2 present in the set: a hard violation.
    std::vector<std::pair<int, int>> lemma_violations;
    /// Observed pairs satisfying the verbatim predicate
    /// r <= ceil(d/2) or d >= ceil((2r-1)/3); reported, never fatal.
    std::vector<std::pair<int, int>> conjecture_conflicts;
};

UnrealizableReport check_unrealizable(const PairSet& pairs, int n);

void emit_csv(const std::vector<SurveyRecord>& records, std::ostream& out);
void emit_jsonl(const std::vector<SurveyRecord>& records, std::ostream& out);
void emit_scatter_tsv(const PairSet& pairs, std::ostream& out);

}  // namespace covreg

#endif
