#ifndef COVREG_VERIFY_HPP
#define COVREG_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace covreg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int jobs = 1;
    std::uint64_t seed = 20240901;
};

/// Closed forms against brute-force oracles: g-vector vs subset counts,
/// hf_cover vs standard monomials (d <= 2n), both h-polynomials vs series
/// extraction, degree/a-invariant identities, D_s and E_2 identities.
/// Exhaustive over connected graphs with n <= exhaustive_nmax plus
/// random_count random graphs with n <= random_nmax.
std::vector<CheckResult> verify_oracles(int exhaustive_nmax, int random_count, int random_nmax,
                                        const VerifyOptions& opt);

/// jk_pdim vs Hochster and jk_alpha_M vs the direct polynomial, over all
/// free trees with n <= tree_nmax and random forests.
std::vector<CheckResult> verify_recursions(int tree_nmax, int forest_count, int forest_nmax,
                                           const VerifyOptions& opt);

/// Family grids: every filled Prediction field vs measurement. level 0 is
/// the quick grid, level 1 the full spec grid (radius-2 n <= 11, split
/// n <= 10, B_k k <= 6, G_{k,r} n <= 14, H_{n,p} n <= 12, whiskers base
/// n <= 6 with q <= 3), plus witness round-trips and the exhaustive
/// radius-2 pair sweep.
std::vector<CheckResult> verify_families(int level, const VerifyOptions& opt);

/// Theorem-level properties over the full connected census up to nmax:
/// M <= alpha-1, g(G) = euler characteristic, block graphs have M <= i,
/// chordal regularity agrees with Hochster, the reg = 1 classification,
/// the band conjecture and the alpha corollary, split diagonality.
std::vector<CheckResult> verify_census_theorems(int nmax, const VerifyOptions& opt);

/// Figure overlays: radius2_pairs(9) and split_pairs(9) against the
/// published point sets.
std::vector<CheckResult> verify_pair_figures();

/// Runs the quick (level 0) or full (level 1) suite, printing one line per
/// check. Returns the number of failures.
int run_verify(int level, int jobs, std::ostream& out);

}  // namespace covreg

#endif
