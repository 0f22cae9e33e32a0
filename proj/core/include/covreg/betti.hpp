#ifndef COVREG_BETTI_HPP
#define COVREG_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "covreg/graph.hpp"
#include "covreg/poly.hpp"

namespace covreg {

/// Simplicial complex given by its facets. facets == {} encodes the void
/// complex (no faces at all); facets == {0} encodes {empty face}.
struct SimplicialComplex {
    int n = 0;
    std::vector<VertexSet> facets;
};

/// Independence complex of g: facets are the maximal independent sets.
/// Guarded at n <= 25.
SimplicialComplex independence_complex(const Graph& g);

/// Homology coefficients. Rationals is exact: ranks are prescreened over a
/// large internal prime and every nonzero report is confirmed by exact
/// integer (fraction-free) elimination, which is sound because ranks can
/// only drop modulo a prime. Prime reports F_p Betti numbers as-is.
struct FieldOpt {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldOpt rationals() { return FieldOpt{}; }
    static FieldOpt prime(std::uint32_t p);
    bool is_rational() const { return kind == Kind::Rationals; }
};

/// ranks[k] = dim of reduced homology in dimension k-1, so index 0 is the
/// (-1)-dimensional slot; H~_{-1} has rank 1 exactly for the complex {empty}.
/// The void complex yields an empty vector (all ranks zero).
std::vector<long> reduced_homology_ranks(const SimplicialComplex& c, const FieldOpt& f);

struct BettiTable {
    std::map<std::pair<int, int>, long> entries;  // (homological i, internal j) -> count

    int pdim() const;
    int reg() const;
    std::string triangle() const;  // Macaulay2-style display
};

/// Graded Betti numbers of R/I(G) by Hochster's formula:
/// beta_{i,j} = sum_{|W|=j} dim H~_{j-i-1}(independence complex restricted
/// to W). Includes beta_{0,0} = 1. Intended for n <= 12; guarded at n <= 16.
BettiTable hochster_table(const Graph& g, const FieldOpt& f = FieldOpt::rationals());

/// pdim(R/I(G)) only; in Rationals mode runs candidate confirmations in
/// descending homological degree and stops at the first exact nonzero.
int hochster_pdim(const Graph& g, const FieldOpt& f = FieldOpt::rationals());

/// reg(R/J(G)) = pdim(R/I(G)) - 1 (Terai duality). Requires an edge.
int reg_cover(const Graph& g, const FieldOpt& f = FieldOpt::rationals());

/// Independent domination number: minimum size of a maximal independent set
/// (branch and bound; guarded at n <= 32).
int i_number(const Graph& g);

/// reg(R/J(G)) for connected chordal graphs with an edge, via n - i(G) - 1.
/// With verify = true (and n <= 12) the value is checked against Hochster.
int chordal_reg_cover(const Graph& g, bool verify = false);

/// Unreduced Euler characteristic sum_{k>=0} (-1)^k f_k.
Int euler_characteristic(const SimplicialComplex& c);

}  // namespace covreg

#endif
