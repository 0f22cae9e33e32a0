#include "covreg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace covreg {

std::vector<int> vertex_list(VertexSet w) {
    std::vector<int> out;
    out.reserve(vcount(w));
    for (VertexSet t = w; t; t &= t - 1) out.push_back(vfirst(t));
    return out;
}

Graph::Graph(int n_) : n(n_), adj(n_, 0) {
    if (n_ < 0 || n_ > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("add_edge: endpoint out of range");
    if (u == v) throw std::invalid_argument("add_edge: loop");
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
}

long Graph::edge_count() const {
    long d = 0;
    for (int v = 0; v < n; ++v) d += degree(v);
    return d / 2;
}

bool Graph::has_any_edge() const {
    for (int v = 0; v < n; ++v)
        if (adj[v]) return true;
    return false;
}

// ---------------------------------------------------------------------------
// graph6

Graph from_graph6(std::string_view line) {
    std::size_t pos = 0;
    constexpr std::string_view kPrefix = ">>graph6<<";
    if (line.substr(0, kPrefix.size()) == kPrefix) pos = kPrefix.size();
    if (pos >= line.size()) throw ParseError("empty graph6 line", pos);

    auto byte_at = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(line[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", i);
        return c - 63;
    };

    long n;
    int b0 = byte_at(pos);
    if (b0 == 63) {  // '~': extended size
        if (pos + 1 >= line.size()) throw ParseError("truncated graph6 size", line.size());
        int b1 = byte_at(pos + 1);
        if (b1 == 63) {
            if (pos + 7 >= line.size()) throw ParseError("truncated graph6 size", line.size());
            n = 0;
            for (int k = 2; k < 8; ++k) n = (n << 6) | byte_at(pos + k);
            pos += 8;
        } else {
            if (pos + 3 >= line.size()) throw ParseError("truncated graph6 size", line.size());
            n = (static_cast<long>(b1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
            pos += 4;
        }
    } else {
        n = b0;
        pos += 1;
    }
    if (n > kMaxVertices) throw ParseError("graph6 vertex count exceeds 64", pos);

    const long nbits = n * (n - 1) / 2;
    const long nbytes = (nbits + 5) / 6;
    if (static_cast<long>(line.size() - pos) < nbytes)
        throw ParseError("truncated graph6 data", line.size());
    if (static_cast<long>(line.size() - pos) > nbytes)
        throw ParseError("trailing characters after graph6 data", pos + nbytes);

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte_at(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (long k = nbits; k < nbytes * 6; ++k) {
        int b = byte_at(pos + k / 6);
        if ((b >> (5 - k % 6)) & 1) throw ParseError("nonzero graph6 padding", pos + k / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

// ---------------------------------------------------------------------------
// edge lists

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':' in edge list", text.size());
    int n = 0;
    {
        std::string head(text.substr(0, colon));
        std::istringstream in(head);
        if (!(in >> n)) throw ParseError("bad vertex count", 0);
        std::string rest;
        if (in >> rest) throw ParseError("bad vertex count", 0);
    }
    Graph g(n);
    std::size_t pos = colon + 1;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        if (!tok.empty()) {
            std::size_t dash = tok.find('-');
            if (dash == std::string_view::npos || dash == 0 || dash + 1 >= tok.size())
                throw ParseError("bad edge token '" + std::string(tok) + "'", pos);
            int u, v;
            try {
                u = std::stoi(std::string(tok.substr(0, dash)));
                v = std::stoi(std::string(tok.substr(dash + 1)));
            } catch (const std::exception&) {
                throw ParseError("bad edge token '" + std::string(tok) + "'", pos);
            }
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError("edge endpoint out of range in '" + std::string(tok) + "'", pos);
            if (u == v) throw ParseError("loop in '" + std::string(tok) + "'", pos);
            g.add_edge(u, v);
        }
        pos = end + 1;
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ":";
    bool first = true;
    for (int u = 0; u < g.n; ++u)
        for (VertexSet t = g.adj[u] & ~vall(u + 1); t; t &= t - 1) {
            out << (first ? " " : ",") << u << "-" << vfirst(t);
            first = false;
        }
    return out.str();
}

// ---------------------------------------------------------------------------
// induced subgraphs, connectivity

Graph induced(const Graph& g, VertexSet w) {
    if (w & ~g.vertices()) throw std::invalid_argument("induced: subset exceeds vertex set");
    std::vector<int> verts = vertex_list(w);
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet w) {
    std::vector<VertexSet> out;
    VertexSet todo = w;
    while (todo) {
        VertexSet comp = vbit(vfirst(todo));
        for (;;) {
            VertexSet grow = comp;
            for (VertexSet t = comp; t; t &= t - 1) grow |= g.adj[vfirst(t)] & w;
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        todo &= ~comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return components(g).size() == 1;
}

bool is_independent(const Graph& g, VertexSet w) {
    for (VertexSet t = w; t; t &= t - 1)
        if (g.adj[vfirst(t)] & w) return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet w) {
    for (VertexSet t = w; t; t &= t - 1) {
        int v = vfirst(t);
        if ((g.adj[v] & w) != (w & ~vbit(v))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// classify

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination ordering iff the graph is chordal.
bool chordal_mcs(const Graph& g) {
    const int n = g.n;
    std::vector<int> weight(n, 0), order;
    order.reserve(n);
    VertexSet unvisited = g.vertices();
    while (unvisited) {
        int best = -1;
        for (VertexSet t = unvisited; t; t &= t - 1) {
            int v = vfirst(t);
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        order.push_back(best);
        unvisited &= ~vbit(best);
        for (VertexSet t = g.adj[best] & unvisited; t; t &= t - 1) ++weight[vfirst(t)];
    }
    // Elimination order is the reverse of `order`.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[n - 1 - i]] = i;
    for (int v = 0; v < n; ++v) {
        VertexSet later = 0;
        for (VertexSet t = g.adj[v]; t; t &= t - 1) {
            int u = vfirst(t);
            if (pos[u] > pos[v]) later |= vbit(u);
        }
        if (!later) continue;
        int u = -1;
        for (VertexSet t = later; t; t &= t - 1) {
            int w = vfirst(t);
            if (u < 0 || pos[w] < pos[u]) u = w;
        }
        if ((later & ~vbit(u)) & ~g.adj[u]) return false;
    }
    return true;
}

// Hammer-Simeone: with degrees d_1 >= ... >= d_n and
// h = max{i : d_i >= i-1}, the graph is split iff
// sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i; the h vertices of largest degree
// then form a clique and the rest an independent set (any tie-break).
bool split_partition(const Graph& g, VertexSet* clique, VertexSet* indep) {
    const int n = g.n;
    if (n == 0) {
        *clique = 0;
        *indep = 0;
        return true;
    }
    std::vector<int> by_deg(n);
    std::iota(by_deg.begin(), by_deg.end(), 0);
    std::stable_sort(by_deg.begin(), by_deg.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(by_deg[i - 1]) >= i - 1) h = i;
    long lhs = 0, rhs = static_cast<long>(h) * (h - 1);
    for (int i = 0; i < n; ++i) (i < h ? lhs : rhs) += g.degree(by_deg[i]);
    if (lhs != rhs) return false;
    VertexSet c = 0;
    for (int i = 0; i < h; ++i) c |= vbit(by_deg[i]);
    VertexSet ind = g.vertices() & ~c;
    if (!is_clique(g, c) || !is_independent(g, ind))
        throw std::logic_error("split_partition: degree criterion violated");
    *clique = c;
    *indep = ind;
    return true;
}

void bcc_dfs(const Graph& g, int u, int parent, int& timer, std::vector<int>& disc,
             std::vector<int>& low, std::vector<std::pair<int, int>>& stack,
             std::vector<VertexSet>& blocks) {
    disc[u] = low[u] = timer++;
    for (VertexSet t = g.adj[u]; t; t &= t - 1) {
        int v = vfirst(t);
        if (v == parent) continue;
        if (disc[v] < 0) {
            stack.push_back({u, v});
            bcc_dfs(g, v, u, timer, disc, low, stack, blocks);
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                VertexSet block = 0;
                std::pair<int, int> e;
                do {
                    e = stack.back();
                    stack.pop_back();
                    block |= vbit(e.first) | vbit(e.second);
                } while (e != std::make_pair(u, v));
                blocks.push_back(block);
            }
        } else if (disc[v] < disc[u]) {
            stack.push_back({u, v});
            low[u] = std::min(low[u], disc[v]);
        }
    }
}

}  // namespace

std::vector<VertexSet> biconnected_components(const Graph& g) {
    std::vector<int> disc(g.n, -1), low(g.n, -1);
    std::vector<std::pair<int, int>> stack;
    std::vector<VertexSet> blocks;
    int timer = 0;
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) bcc_dfs(g, v, -1, timer, disc, low, stack, blocks);
    return blocks;
}

GraphClass classify(const Graph& g) {
    GraphClass c;
    auto comps = components(g);
    c.connected = comps.size() <= 1;
    c.forest = (g.edge_count() == g.n - static_cast<long>(comps.size()));
    c.chordal = chordal_mcs(g);
    c.split = split_partition(g, &c.split_clique, &c.split_independent);
    for (int v = 0; v < g.n; ++v) c.max_degree = std::max(c.max_degree, g.degree(v));

    c.block_graph = true;
    for (const VertexSet& b : biconnected_components(g))
        if (!is_clique(g, b)) {
            c.block_graph = false;
            break;
        }

    if (c.connected && g.n > 0) {
        int radius = g.n;
        for (int s = 0; s < g.n; ++s) {
            int ecc = 0;
            VertexSet seen = vbit(s), frontier = vbit(s);
            while (seen != g.vertices()) {
                VertexSet next = 0;
                for (VertexSet t = frontier; t; t &= t - 1) next |= g.adj[vfirst(t)];
                next &= ~seen;
                seen |= next;
                frontier = next;
                ++ecc;
            }
            radius = std::min(radius, ecc);
        }
        c.radius = radius;
    }
    return c;
}

// Bron-Kerbosch with pivoting.
namespace {
void bk(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    int pivot = -1, best = -1;
    for (VertexSet t = p | x; t; t &= t - 1) {
        int v = vfirst(t);
        int k = vcount(g.adj[v] & p);
        if (k > best) {
            best = k;
            pivot = v;
        }
    }
    for (VertexSet t = p & ~g.adj[pivot]; t; t &= t - 1) {
        int v = vfirst(t);
        bk(g, r | vbit(v), p & g.adj[v], x & g.adj[v], out);
        p &= ~vbit(v);
        x |= vbit(v);
    }
}
}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.n == 0) return out;
    bk(g, 0, g.vertices(), 0, out);
    return out;
}

}  // namespace covreg
