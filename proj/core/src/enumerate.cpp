#include "covreg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace covreg {

namespace {

constexpr int kCanonMax = 16;

inline std::uint64_t lowmask(int k) { return (std::uint64_t{1} << k) - 1; }

// 128-bit big-endian bit buffer (hi first).
struct BitBuf {
    std::uint64_t hi = 0, lo = 0;

    void append(std::uint64_t v, int k, int bitpos) {
        if (k == 0) return;
        int end = bitpos + k;
        if (end <= 64) {
            hi |= v << (64 - end);
        } else if (bitpos >= 64) {
            lo |= v << (128 - end);
        } else {
            int over = end - 64;
            hi |= v >> over;
            lo |= (v & lowmask(over)) << (64 - over);
        }
    }

    std::uint64_t segment(int bitpos, int k) const {
        if (k == 0) return 0;
        int end = bitpos + k;
        if (end <= 64) return (hi >> (64 - end)) & lowmask(k);
        if (bitpos >= 64) return (lo >> (128 - end)) & lowmask(k);
        int over = end - 64;
        return (((hi & lowmask(64 - bitpos)) << over) | (lo >> (64 - over))) & lowmask(k);
    }

    bool less(const BitBuf& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

struct CanonSearcher {
    const Graph* g;
    int n;
    BitBuf best, cur;
    bool have = false;
    std::uint64_t version = 0;
    int bitpos = 0;
    VertexSet unplaced;
    std::uint32_t posmask[kCanonMax];  // positions of already-placed neighbors

    explicit CanonSearcher(const Graph& graph) : g(&graph), n(graph.n) {
        unplaced = graph.vertices();
        std::fill(posmask, posmask + kCanonMax, 0);
    }

    // Bits contributed by placing v at position k: adjacency against placed
    // positions 0..k-1, earliest position most significant.
    std::uint64_t app_bits(int v, int k) const {
        std::uint64_t out = 0;
        for (std::uint32_t t = posmask[v] & static_cast<std::uint32_t>(lowmask(k)); t;
             t &= t - 1)
            out |= std::uint64_t{1} << (k - 1 - __builtin_ctz(t));
        return out;
    }

    void search(int k, bool tight) {
        if (k == n) {
            if (!have || cur.less(best)) {
                best = cur;
                have = true;
                ++version;
            }
            return;
        }
        int cand[kCanonMax];
        std::uint64_t app[kCanonMax];
        int m = 0;
        for (VertexSet t = unplaced; t; t &= t - 1) {
            int v = vfirst(t);
            cand[m] = v;
            app[m] = app_bits(v, k);
            ++m;
        }
        // Ascending by appended bits; ties by vertex index (from vfirst order).
        int idx[kCanonMax];
        for (int i = 0; i < m; ++i) idx[i] = i;
        std::stable_sort(idx, idx + m, [&](int a, int b) { return app[a] < app[b]; });

        bool cmp_active = have && tight;
        for (int ii = 0; ii < m; ++ii) {
            int v = cand[idx[ii]];
            std::uint64_t a = app[idx[ii]];
            bool t = false;
            if (cmp_active) {
                std::uint64_t seg = best.segment(bitpos, k);
                if (a > seg) break;  // all remaining candidates are >= a
                t = (a == seg);
            }
            BitBuf saved = cur;
            cur.append(a, k, bitpos);
            bitpos += k;
            unplaced &= ~vbit(v);
            for (VertexSet nb = g->adj[v]; nb; nb &= nb - 1) posmask[vfirst(nb)] |= 1u << k;

            std::uint64_t ver = version;
            search(k + 1, t);

            for (VertexSet nb = g->adj[v]; nb; nb &= nb - 1) posmask[vfirst(nb)] &= ~(1u << k);
            unplaced |= vbit(v);
            bitpos -= k;
            cur = saved;
            if (version != ver) cmp_active = true;  // best now shares our prefix
        }
    }
};

}  // namespace

CanonCode canon_code(const Graph& g) {
    if (g.n > kCanonMax) throw std::invalid_argument("canon_code: n > 16");
    CanonSearcher s(g);
    s.search(0, false);
    CanonCode out;
    out.hi = s.best.hi;
    out.lo = s.best.lo;
    out.n = static_cast<std::uint32_t>(g.n);
    return out;
}

CanonCode canon_code_brute(const Graph& g) {
    if (g.n > 9) throw std::invalid_argument("canon_code_brute: n > 9");
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    bool have = false;
    BitBuf best;
    do {
        BitBuf cur;
        int bitpos = 0;
        for (int j = 1; j < g.n; ++j)
            for (int i = 0; i < j; ++i) {
                cur.append(g.has_edge(perm[i], perm[j]) ? 1 : 0, 1, bitpos);
                ++bitpos;
            }
        if (!have || cur.less(best)) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CanonCode out;
    out.hi = best.hi;
    out.lo = best.lo;
    out.n = static_cast<std::uint32_t>(g.n);
    return out;
}

Graph graph_from_code(const CanonCode& code) {
    Graph g(static_cast<int>(code.n));
    BitBuf buf;
    buf.hi = code.hi;
    buf.lo = code.lo;
    int bitpos = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            if (buf.segment(bitpos, 1)) g.add_edge(i, j);
            ++bitpos;
        }
    return g;
}

namespace {

std::vector<CanonCode> augment_generation(const std::vector<Graph>& parents, int m, int jobs) {
    const VertexSet nbmax = vall(m - 1);
    auto run = [&](std::size_t begin, std::size_t end, std::unordered_set<CanonCode, CanonCodeHash>& out) {
        for (std::size_t p = begin; p < end; ++p) {
            Graph h(m);
            for (VertexSet nb = 0;; ++nb) {
                for (int v = 0; v < m - 1; ++v)
                    h.adj[v] = parents[p].adj[v] | (vcontains(nb, v) ? vbit(m - 1) : 0);
                h.adj[m - 1] = nb;
                out.insert(canon_code(h));
                if (nb == nbmax) break;
            }
        }
    };

    std::vector<std::unordered_set<CanonCode, CanonCodeHash>> sets(std::max(jobs, 1));
    if (jobs <= 1 || parents.size() < 8) {
        run(0, parents.size(), sets[0]);
    } else {
        std::vector<std::thread> workers;
        std::size_t chunk = (parents.size() + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            std::size_t b = t * chunk, e = std::min(parents.size(), b + chunk);
            if (b >= e) break;
            workers.emplace_back([&, b, e, t] { run(b, e, sets[t]); });
        }
        for (auto& w : workers) w.join();
    }
    std::unordered_set<CanonCode, CanonCodeHash> merged;
    for (auto& s : sets) merged.insert(s.begin(), s.end());
    std::vector<CanonCode> codes(merged.begin(), merged.end());
    std::sort(codes.begin(), codes.end());
    return codes;
}

}  // namespace

std::vector<Graph> all_graphs(int n, int jobs) {
    if (n < 0 || n > 11) throw std::invalid_argument("all_graphs: supported for 0 <= n <= 11");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> gen = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::vector<CanonCode> codes = augment_generation(gen, m, jobs);
        gen.clear();
        gen.reserve(codes.size());
        for (const CanonCode& c : codes) gen.push_back(graph_from_code(c));
    }
    return gen;
}

std::vector<Graph> connected_graphs(int n, int jobs) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n, jobs))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument(
            "enumerate_connected: built-in enumeration supports 1 <= n <= 7; "
            "for larger n ingest graph6 input (see the g6census tool)");
    return connected_graphs(n, 1);
}

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > kCanonMax) throw std::invalid_argument("free_trees: n out of range");
    std::vector<Graph> gen = {Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<CanonCode, CanonCodeHash> seen;
        for (const Graph& t : gen) {
            Graph h(m);
            for (int v = 0; v < m - 1; ++v) h.adj[v] = t.adj[v];
            for (int v = 0; v < m - 1; ++v) {
                Graph h2 = h;
                h2.add_edge(v, m - 1);
                seen.insert(canon_code(h2));
            }
        }
        std::vector<CanonCode> codes(seen.begin(), seen.end());
        std::sort(codes.begin(), codes.end());
        gen.clear();
        for (const CanonCode& c : codes) gen.push_back(graph_from_code(c));
    }
    return gen;
}

}  // namespace covreg
