#include "covreg/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace covreg {

namespace {

constexpr std::uint32_t kScreenPrime = 2147483647u;  // 2^31 - 1

// Faces grouped by cardinality; by_size[c] lists the cardinality-c faces in
// increasing mask order (binary-searchable). The empty face is implicit
// unless `void_complex` is set.
struct FaceSets {
    bool void_complex = false;
    std::vector<std::vector<VertexSet>> by_size;  // index 1..top

    int top() const { return static_cast<int>(by_size.size()) - 1; }
    long count(int c) const {
        if (c == 0) return void_complex ? 0 : 1;
        if (c < 0 || c > top()) return 0;
        return static_cast<long>(by_size[c].size());
    }
};

void collect_independent(const Graph& g, VertexSet allowed, VertexSet cur,
                         std::vector<std::vector<VertexSet>>& out) {
    if (!allowed) return;
    int v = vfirst(allowed);
    VertexSet rest = allowed & ~vbit(v);
    collect_independent(g, rest, cur, out);
    VertexSet with = cur | vbit(v);
    if (static_cast<int>(out.size()) <= vcount(with)) out.resize(vcount(with) + 1);
    out[vcount(with)].push_back(with);
    collect_independent(g, rest & ~g.adj[v], with, out);
}

// Independent sets of g inside w, as a face family.
FaceSets independent_faces(const Graph& g, VertexSet w) {
    FaceSets fs;
    fs.by_size.resize(1);
    collect_independent(g, w, 0, fs.by_size);
    for (auto& level : fs.by_size) std::sort(level.begin(), level.end());
    return fs;
}

FaceSets closure_faces(const SimplicialComplex& c, std::size_t guard = (1u << 22)) {
    FaceSets fs;
    if (c.facets.empty()) {
        fs.void_complex = true;
        return fs;
    }
    std::vector<VertexSet> all;
    for (VertexSet f : c.facets) {
        for (VertexSet s = f;; s = (s - 1) & f) {
            if (s) all.push_back(s);
            if (!s) break;
        }
        if (all.size() > guard * 4) throw std::invalid_argument("face enumeration guard exceeded");
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (all.size() > guard) throw std::invalid_argument("face enumeration guard exceeded");
    fs.by_size.resize(1);
    for (VertexSet f : all) {
        int k = vcount(f);
        if (static_cast<int>(fs.by_size.size()) <= k) fs.by_size.resize(k + 1);
        fs.by_size[k].push_back(f);
    }
    for (auto& level : fs.by_size) std::sort(level.begin(), level.end());
    return fs;
}

long index_of(const std::vector<VertexSet>& level, VertexSet f) {
    return std::lower_bound(level.begin(), level.end(), f) - level.begin();
}

// Dense boundary matrix from cardinality c to c-1; entries in {-1, 0, 1}
// stored row-major as signed bytes.
struct BoundaryMatrix {
    long rows = 0, cols = 0;
    std::vector<signed char> a;

    signed char& at(long r, long col) { return a[r * cols + col]; }
};

BoundaryMatrix boundary(const FaceSets& fs, int c) {
    BoundaryMatrix m;
    m.cols = fs.count(c);
    m.rows = fs.count(c - 1);
    if (m.rows == 0 || m.cols == 0) {
        m.rows = m.cols = 0;
        return m;
    }
    m.a.assign(m.rows * m.cols, 0);
    const auto& faces = fs.by_size[c];
    for (long j = 0; j < m.cols; ++j) {
        VertexSet f = faces[j];
        int sign = 1;
        for (VertexSet t = f; t; t &= t - 1) {
            VertexSet sub = f & ~vbit(vfirst(t));
            long r = (c == 1) ? 0 : index_of(fs.by_size[c - 1], sub);
            m.at(r, j) = static_cast<signed char>(sign);
            sign = -sign;
        }
    }
    return m;
}

long rank_mod_p(const BoundaryMatrix& m, std::uint32_t p) {
    if (m.rows == 0 || m.cols == 0) return 0;
    std::vector<std::uint32_t> w(m.a.size());
    for (std::size_t k = 0; k < m.a.size(); ++k)
        w[k] = m.a[k] >= 0 ? static_cast<std::uint32_t>(m.a[k])
                           : p - static_cast<std::uint32_t>(-m.a[k]);
    const std::uint64_t P = p;
    long rank = 0;
    for (long col = 0; col < m.cols && rank < m.rows; ++col) {
        long piv = -1;
        for (long r = rank; r < m.rows; ++r)
            if (w[r * m.cols + col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = col; j < m.cols; ++j) std::swap(w[piv * m.cols + j], w[rank * m.cols + j]);
        // Normalize pivot row to 1.
        std::uint64_t inv = 1, base = w[rank * m.cols + col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % P;
            base = base * base % P;
            e >>= 1;
        }
        for (long j = col; j < m.cols; ++j)
            w[rank * m.cols + j] = static_cast<std::uint32_t>(w[rank * m.cols + j] * inv % P);
        for (long r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            std::uint64_t f = w[r * m.cols + col];
            if (!f) continue;
            for (long j = col; j < m.cols; ++j) {
                std::uint64_t sub = f * w[rank * m.cols + j] % P;
                std::uint64_t cur = w[r * m.cols + j];
                w[r * m.cols + j] = static_cast<std::uint32_t>((cur + P - sub) % P);
            }
        }
        ++rank;
    }
    return rank;
}

// Exact rank over Q by fraction-free (Bareiss) elimination with full
// pivoting; entries stay integral throughout.
long rank_exact(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const long R = m.rows, C = m.cols;
    std::vector<Int> w(R * C);
    for (long k = 0; k < R * C; ++k) w[k] = static_cast<int>(m.a[k]);
    Int prev = 1;
    long rank = 0;
    while (rank < std::min(R, C)) {
        long pr = -1, pc = -1;
        for (long r = rank; r < R && pr < 0; ++r)
            for (long c = rank; c < C; ++c)
                if (w[r * C + c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr < 0) break;
        if (pr != rank)
            for (long c = 0; c < C; ++c) std::swap(w[pr * C + c], w[rank * C + c]);
        if (pc != rank)
            for (long r = 0; r < R; ++r) std::swap(w[r * C + pc], w[r * C + rank]);
        const Int piv = w[rank * C + rank];
        for (long r = rank + 1; r < R; ++r) {
            for (long c = rank + 1; c < C; ++c) {
                Int num = piv * w[r * C + c] - w[r * C + rank] * w[rank * C + c];
                mpz_divexact(w[r * C + c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w[r * C + rank] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

// Homology engine on a face family. Returns ranks[k] = dim H~_{k-1}.
std::vector<long> homology_ranks(const FaceSets& fs, const FieldOpt& f) {
    if (fs.void_complex) return {};
    const int top = fs.top();
    const std::uint32_t screen = f.is_rational() ? kScreenPrime : f.p;

    std::vector<long> rk_p(top + 2, 0);  // rank of boundary(c), c = 1..top
    std::vector<BoundaryMatrix> mats(top + 2);
    for (int c = 1; c <= top; ++c) {
        mats[c] = boundary(fs, c);
        rk_p[c] = rank_mod_p(mats[c], screen);
    }
    std::vector<long> dims(top + 1, 0);
    for (int c = 0; c <= top; ++c) dims[c] = fs.count(c) - rk_p[c] - rk_p[c + 1];

    if (f.is_rational()) {
        // Exact confirmation of every nonzero screened dimension: recompute
        // the two adjacent boundary ranks fraction-free. Zero reports are
        // already exact (ranks only drop mod p, so dims only grow).
        std::vector<long> rk_q(top + 2, -1);
        auto exact = [&](int c) -> long {
            if (c < 1 || c > top) return 0;
            if (rk_q[c] < 0) rk_q[c] = rank_exact(mats[c]);
            return rk_q[c];
        };
        for (int c = 0; c <= top; ++c)
            if (dims[c] > 0) dims[c] = fs.count(c) - exact(c) - exact(c + 1);
    }
    return dims;
}

}  // namespace

FieldOpt FieldOpt::prime(std::uint32_t p) {
    if (p < 2) throw std::invalid_argument("FieldOpt: prime must be >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("FieldOpt: p is not prime");
    FieldOpt f;
    f.kind = Kind::Prime;
    f.p = p;
    return f;
}

SimplicialComplex independence_complex(const Graph& g) {
    if (g.n > 25) throw std::invalid_argument("independence_complex: n > 25 guard");
    SimplicialComplex c;
    c.n = g.n;
    if (g.n == 0) {
        c.facets = {0};  // the complex {empty face}
        return c;
    }
    Graph comp(g.n);
    for (int v = 0; v < g.n; ++v) comp.adj[v] = ~g.adj[v] & g.vertices() & ~vbit(v);
    c.facets = maximal_cliques(comp);
    std::sort(c.facets.begin(), c.facets.end());
    return c;
}

std::vector<long> reduced_homology_ranks(const SimplicialComplex& c, const FieldOpt& f) {
    if (c.facets.empty()) return {};
    return homology_ranks(closure_faces(c), f);
}

int BettiTable::pdim() const {
    int p = 0;
    for (const auto& [ij, v] : entries)
        if (v > 0) p = std::max(p, ij.first);
    return p;
}

int BettiTable::reg() const {
    int r = 0;
    for (const auto& [ij, v] : entries)
        if (v > 0) r = std::max(r, ij.second - ij.first);
    return r;
}

std::string BettiTable::triangle() const {
    int maxi = 0, maxr = 0;
    for (const auto& [ij, v] : entries)
        if (v > 0) {
            maxi = std::max(maxi, ij.first);
            maxr = std::max(maxr, ij.second - ij.first);
        }
    std::vector<long> total(maxi + 1, 0);
    std::vector<std::vector<long>> grid(maxr + 1, std::vector<long>(maxi + 1, 0));
    for (const auto& [ij, v] : entries) {
        if (v <= 0) continue;
        grid[ij.second - ij.first][ij.first] += v;
        total[ij.first] += v;
    }
    auto width = [&](long x) { return std::to_string(x).size(); };
    std::size_t w = 1;
    for (long t : total) w = std::max(w, width(t));
    std::ostringstream out;
    out << "      ";
    for (int i = 0; i <= maxi; ++i) out << " " << std::string(w - width(i), ' ') << i;
    out << "\ntotal:";
    for (int i = 0; i <= maxi; ++i) out << " " << std::string(w - width(total[i]), ' ') << total[i];
    out << "\n";
    for (int r = 0; r <= maxr; ++r) {
        std::string lab = std::to_string(r) + ":";
        out << std::string(6 - lab.size(), ' ') << lab;
        for (int i = 0; i <= maxi; ++i) {
            if (grid[r][i])
                out << " " << std::string(w - width(grid[r][i]), ' ') << grid[r][i];
            else
                out << " " << std::string(w - 1, ' ') << ".";
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// G[w] has a vertex with no neighbor inside w: the restricted complex is a
// cone, contributing nothing to Hochster sums.
bool has_isolated_in(const Graph& g, VertexSet w) {
    for (VertexSet t = w; t; t &= t - 1)
        if (!(g.adj[vfirst(t)] & w)) return true;
    return false;
}

void check_hochster_guard(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("hochster: n > 16 guard (2^n subcomplexes)");
}

}  // namespace

BettiTable hochster_table(const Graph& g, const FieldOpt& f) {
    check_hochster_guard(g);
    BettiTable t;
    // Subsets in popcount order so contributions stream by internal degree.
    std::vector<std::vector<VertexSet>> by_size(g.n + 1);
    const VertexSet all = g.vertices();
    for (VertexSet w = 0;; ++w) {
        by_size[vcount(w)].push_back(w);
        if (w == all) break;
    }
    for (int j = 0; j <= g.n; ++j)
        for (VertexSet w : by_size[j]) {
            if (w && has_isolated_in(g, w)) continue;
            std::vector<long> dims = homology_ranks(independent_faces(g, w), f);
            for (int c = 0; c < static_cast<int>(dims.size()); ++c)
                if (dims[c] > 0) t.entries[{j - c, j}] += dims[c];
        }
    return t;
}

int hochster_pdim(const Graph& g, const FieldOpt& f) {
    check_hochster_guard(g);
    // Candidate contributions over the screening prime, grouped by
    // homological degree i = |W| - c.
    FieldOpt screen;
    screen.kind = FieldOpt::Kind::Prime;
    screen.p = f.is_rational() ? kScreenPrime : f.p;
    std::vector<std::vector<std::pair<VertexSet, int>>> cand(g.n + 1);
    const VertexSet all = g.vertices();
    for (VertexSet w = 0;; ++w) {
        if (!w || !has_isolated_in(g, w)) {
            FaceSets fs = independent_faces(g, w);
            std::vector<long> dims = homology_ranks(fs, screen);
            for (int c = 0; c < static_cast<int>(dims.size()); ++c)
                if (dims[c] > 0) cand[vcount(w) - c].emplace_back(w, c);
        }
        if (w == all) break;
    }
    for (int i = g.n; i >= 1; --i) {
        for (auto [w, c] : cand[i]) {
            if (!f.is_rational()) return i;  // F_p table: candidates are the entries
            std::vector<long> dims = homology_ranks(independent_faces(g, w), f);
            if (c < static_cast<int>(dims.size()) && dims[c] > 0) return i;
        }
    }
    return 0;
}

int reg_cover(const Graph& g, const FieldOpt& f) {
    if (!g.has_any_edge()) throw std::invalid_argument("reg_cover: graph has no edge");
    return hochster_pdim(g, f) - 1;
}

namespace {

void i_number_rec(const Graph& g, VertexSet undominated, VertexSet free, int size, int& best) {
    if (size >= best) return;
    if (!undominated) {
        best = size;
        return;
    }
    int u = vfirst(undominated);
    VertexSet cands = (g.adj[u] | vbit(u)) & free;
    for (VertexSet t = cands; t; t &= t - 1) {
        int w = vfirst(t);
        i_number_rec(g, undominated & ~(g.adj[w] | vbit(w)), free & ~(g.adj[w] | vbit(w)), size + 1,
                     best);
    }
}

}  // namespace

int i_number(const Graph& g) {
    if (g.n > 32) throw std::invalid_argument("i_number: n > 32 guard");
    int best = g.n + 1;
    i_number_rec(g, g.vertices(), g.vertices(), 0, best);
    if (g.n == 0) return 0;
    return best;
}

int chordal_reg_cover(const Graph& g, bool verify) {
    GraphClass c = classify(g);
    if (!c.chordal) throw std::invalid_argument("chordal_reg_cover: graph is not chordal");
    if (!c.connected) throw std::invalid_argument("chordal_reg_cover: graph is not connected");
    if (!g.has_any_edge()) throw std::invalid_argument("chordal_reg_cover: graph has no edge");
    int val = g.n - i_number(g) - 1;
    if (verify && g.n <= 12) {
        int hoch = reg_cover(g, FieldOpt::rationals());
        if (hoch != val)
            throw std::logic_error("chordal_reg_cover: Hochster disagrees with n - i(G) - 1");
    }
    return val;
}

Int euler_characteristic(const SimplicialComplex& c) {
    FaceSets fs = closure_faces(c);
    Int acc = 0;
    for (int k = 1; k <= fs.top(); ++k) {
        long f = fs.count(k);
        if ((k - 1) & 1)
            acc -= f;
        else
            acc += f;
    }
    return acc;
}

}  // namespace covreg
