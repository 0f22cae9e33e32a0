#ifndef COVREG_GRAPH_HPP
#define COVREG_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covreg {

/// Vertex subset of {0..63}, one bit per vertex.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool vcontains(VertexSet s, int v) { return (s >> v) & 1; }
inline int vcount(VertexSet s) { return __builtin_popcountll(s); }
inline int vfirst(VertexSet s) { return __builtin_ctzll(s); }  // s != 0
inline VertexSet vall(int n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Members of w in increasing order (the stable index map used by induced()).
std::vector<int> vertex_list(VertexSet w);

/// Simple graph on n <= 64 vertices; adjacency stored as one VertexSet per
/// vertex (symmetric, irreflexive).
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int n_);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return vcontains(adj[u], v); }
    int degree(int v) const { return vcount(adj[v]); }
    long edge_count() const;
    VertexSet vertices() const { return vall(n); }
    bool has_any_edge() const;

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
    bool operator!=(const Graph& o) const { return !(*this == o); }
};

/// Parse failure, carrying the byte offset of the offending input position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decode one graph6 line (optionally prefixed with ">>graph6<<").
Graph from_graph6(std::string_view line);

/// Encode in graph6; single-byte size for n <= 62, extended header above.
std::string to_graph6(const Graph& g);

/// Build from an explicit edge list; duplicate edges collapse, loops and
/// out-of-range endpoints throw.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Parse the text format "n: u-v,u-v,..." (empty edge list allowed).
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Induced subgraph on w; vertex i of the result is the i-th smallest member
/// of w (see vertex_list for the index map).
Graph induced(const Graph& g, VertexSet w);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// Connected components of the induced subgraph on w.
std::vector<VertexSet> components_within(const Graph& g, VertexSet w);

struct GraphClass {
    bool connected = false;
    bool forest = false;
    bool chordal = false;
    bool split = false;
    bool block_graph = false;
    int radius = -1;  // -1 when disconnected (infinite)
    int max_degree = 0;
    // One valid split partition when split = true; clique side has maximum
    // size among valid partitions.
    VertexSet split_clique = 0;
    VertexSet split_independent = 0;
};

/// Structural predicates: connectivity, acyclicity, chordality (maximum
/// cardinality search + perfect elimination check), splitness (Hammer-Simeone
/// degree criterion), block-graph test (every biconnected component a
/// clique), radius and maximum degree.
GraphClass classify(const Graph& g);

/// Maximal cliques (Bron-Kerbosch with pivoting). Intended for small graphs.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Biconnected components as vertex sets (bridges count as 2-vertex blocks).
std::vector<VertexSet> biconnected_components(const Graph& g);

/// True if w is an independent set of g.
bool is_independent(const Graph& g, VertexSet w);

/// True if the induced subgraph on w is a clique.
bool is_clique(const Graph& g, VertexSet w);

}  // namespace covreg

#endif
