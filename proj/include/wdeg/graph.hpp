/**
 * @file graph.hpp
 * @brief Simple undirected graphs, vertex sets and the classical structural
 *        routines (degeneracy, maximum average degree, blocks, girth, cliques).
 */
#ifndef WDEG_GRAPH_HPP
#define WDEG_GRAPH_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdeg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Rational = boost::rational<std::int64_t>;

/// Membership bitmask over 0..n-1.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(int n);
    static VertexSet full(int n);
    static VertexSet from(int n, std::span<const Vertex> members);

    int universe() const { return n_; }
    bool contains(Vertex v) const
    {
        return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(Vertex v);
    void erase(Vertex v);
    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<Vertex> members() const;

    VertexSet operator|(const VertexSet& o) const;
    VertexSet operator&(const VertexSet& o) const;
    VertexSet operator-(const VertexSet& o) const;
    bool operator==(const VertexSet& o) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with vertex ids 0..n-1. Immutable after construction.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int n);
    /// Duplicate edges (in either orientation) collapse. Self-loops and
    /// out-of-range endpoints throw ValidationError.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    int max_degree() const;
    int min_degree() const;
    bool is_regular() const;
    /// Every edge once, as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    /// Number of neighbors of u inside s.
    int degree_in(Vertex u, const VertexSet& s) const;

    bool operator==(const Graph& o) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

/// A subgraph induced on a vertex subset, relabelled to 0..k-1 in increasing
/// parent-id order.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;
    std::vector<Vertex> from_parent; ///< -1 for vertices outside the subset
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_edge(const Graph& g, Edge e);
Graph remove_vertex(const Graph& g, Vertex v);
/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

enum class GraphFormat { edge_list, dimacs };

/// Parse edge-list ("n" then "u v" per line, 0-indexed) or DIMACS
/// ("p edge n m" and "e u v", 1-indexed) text.
Graph parse_graph(std::string_view text, GraphFormat format);
/// DIMACS if the first meaningful line starts with 'p' or 'c', else edge-list.
GraphFormat detect_format(std::string_view text);
std::string to_edge_list(const Graph& g);

struct Degeneracy {
    int value = 0;
    /// Peeling order: order[i] is removed i-th; every vertex has at most
    /// `value` neighbors later in the order.
    std::vector<Vertex> order;
};

Degeneracy degeneracy(const Graph& g);

/// Exact mad(G) = max over nonempty subgraphs of 2|E(H)|/|V(H)|.
/// Throws DomainError on the empty graph.
Rational max_average_degree(const Graph& g);
/// Subset-enumeration route, usable for n <= 20.
Rational max_average_degree_enumerate(const Graph& g);
/// Parametric max-flow route (Dinkelbach iteration over exact min cuts).
Rational max_average_degree_flow(const Graph& g);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<Vertex> cut_vertices;
};

/// Biconnected components. Isolated vertices form singleton blocks.
BlockDecomposition blocks(const Graph& g);

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();
int girth(const Graph& g);

bool has_clique(const Graph& g, int k);
int clique_number(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// BFS distances from `source`, -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// A proper coloring with colors 0..k-1, found by exact backtracking.
/// `node_limit` bounds the search; exceeding it throws ResourceError.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k,
                                              std::int64_t node_limit = 50'000'000);
bool is_proper_coloring(const Graph& g, std::span<const int> colors);

/// Maximum bipartite matching (Hopcroft-Karp). `adj[a]` lists right-side
/// ids in [0, right). Returns match_left[a] (-1 if unmatched).
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right);

} // namespace wdeg

#endif
