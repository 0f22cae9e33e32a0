#ifndef COVREG_ENUMERATE_HPP
#define COVREG_ENUMERATE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "covreg/graph.hpp"

namespace covreg {

/// Canonical form of a graph on n <= 16 vertices: the lexicographically
/// minimal upper-triangle adjacency bit string over all vertex relabelings,
/// packed big-endian into two words, with n in the low bits of tag.
struct CanonCode {
    std::uint64_t hi = 0, lo = 0;
    std::uint32_t n = 0;

    friend bool operator==(const CanonCode& a, const CanonCode& b) {
        return a.n == b.n && a.hi == b.hi && a.lo == b.lo;
    }
    friend bool operator<(const CanonCode& a, const CanonCode& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.hi != b.hi) return a.hi < b.hi;
        return a.lo < b.lo;
    }
};

struct CanonCodeHash {
    std::size_t operator()(const CanonCode& c) const {
        std::uint64_t h = c.hi * 0x9e3779b97f4a7c15ULL;
        h ^= c.lo + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ (c.n * 0x85ebca6bULL));
    }
};

/// Minimal-code canonization via ordered backtracking with prefix pruning.
/// Exact for any graph with n <= 16.
CanonCode canon_code(const Graph& g);

/// Reference canonization by explicit minimum over all n! permutations.
/// Test oracle; n <= 9.
CanonCode canon_code_brute(const Graph& g);

/// Rebuild the labeled representative from a code.
Graph graph_from_code(const CanonCode& code);

/// One representative per isomorphism class of connected graphs on n
/// vertices, 1 <= n <= 7. Larger n is rejected: feed graph6 input instead
/// (the g6census tool produces it).
std::vector<Graph> enumerate_connected(int n);

/// Census backends (vertex-augmentation + canonical dedup). These power the
/// g6census tool and the exhaustive test sweeps; n = 9 takes minutes.
std::vector<Graph> all_graphs(int n, int jobs = 1);
std::vector<Graph> connected_graphs(int n, int jobs = 1);

/// All free trees on n vertices, one per isomorphism class.
std::vector<Graph> free_trees(int n);

}  // namespace covreg

#endif
