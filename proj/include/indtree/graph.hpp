#pragma once

#include <indtree/vertex_set.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indtree {

/// Thrown when a graph, vertex or construction parameter is invalid.
class GraphError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices 0..n-1, one adjacency bitset
 * per vertex. Every constructor checks symmetry and the absence of loops.
 */
class Graph
{
public:
    Graph() = default;

    /// Duplicate pairs collapse; loops and out-of-range endpoints throw GraphError.
    static auto from_edge_list(int n, const std::vector<Edge> & edges) -> Graph;

    /// Adopts rows directly; throws GraphError unless they describe a simple graph.
    static auto from_adjacency(std::vector<VertexSet> rows) -> Graph;

    auto order() const -> int { return static_cast<int>(_adj.size()); }
    auto vertices() const -> VertexSet { return VertexSet::range(order()); }
    auto neighbours(Vertex v) const -> VertexSet { return _adj[v]; }
    auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].contains(v); }
    auto degree(Vertex v) const -> int { return _adj[v].size(); }
    auto edge_count() const -> int;
    auto rows() const -> const std::vector<VertexSet> & { return _adj; }

    /// Edges (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>;

    /// Number of neighbours of v inside s.
    auto degree_into(Vertex v, VertexSet s) const -> int { return (_adj[v] & s).size(); }

    /// The graph with one new vertex n adjacent to exactly `neighbourhood`.
    auto with_vertex_added(VertexSet neighbourhood) const -> Graph;

    /// The graph with vertex v deleted; higher vertices shift down by one.
    auto with_vertex_removed(Vertex v) const -> Graph;

    /// Induced subgraph on s, relabelled 0..|s|-1 in increasing order.
    auto induced(VertexSet s) const -> Graph;

    /// Vertex perm[i] of this graph becomes vertex i of the result.
    auto relabelled(const std::vector<Vertex> & perm) const -> Graph;

    auto operator==(const Graph &) const -> bool = default;

private:
    explicit Graph(std::vector<VertexSet> adj) : _adj(std::move(adj)) {}

    std::vector<VertexSet> _adj;
};

/// A graph with one distinguished vertex.
struct RootedGraph
{
    Graph graph;
    Vertex root = 0;

    RootedGraph(Graph g, Vertex r);
};

auto check_vertex(const Graph & g, Vertex v) -> void;

auto is_triangle_free(const Graph & g) -> bool;

auto is_connected(const Graph & g) -> bool;

/// True iff s is nonempty, induces a connected subgraph, and has |s|-1 induced edges.
auto is_induced_tree(const Graph & g, VertexSet s) -> bool;

/// Vertices reachable from `from` using only vertices of `within` (from is included).
auto reachable(const Graph & g, VertexSet from, VertexSet within) -> VertexSet;

auto closed_neighbourhood(const Graph & g, Vertex v) -> VertexSet;

/// BFS distances from v; unreachable vertices get -1.
auto distances_from(const Graph & g, Vertex v) -> std::vector<int>;

/// Throws GraphError for a disconnected or empty graph.
auto diameter(const Graph & g) -> int;

auto degree_sequence(const Graph & g) -> std::vector<int>;

} // namespace indtree
