#include <indtree/graph.hpp>

#include <algorithm>
#include <string>

namespace indtree {

namespace {
    auto validate(const std::vector<VertexSet> & adj) -> void
    {
        const int n = static_cast<int>(adj.size());
        if (n > max_vertices)
            throw GraphError("graph has " + std::to_string(n) + " vertices, capacity is " + std::to_string(max_vertices));
        const auto all = VertexSet::range(n);
        for (int u = 0; u < n; ++u) {
            if (! adj[u].is_subset_of(all))
                throw GraphError("adjacency row " + std::to_string(u) + " has bits beyond n");
            if (adj[u].contains(u))
                throw GraphError("self-loop at vertex " + std::to_string(u));
            adj[u].for_each([&](Vertex v) {
                if (! adj[v].contains(u))
                    throw GraphError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
            });
        }
    }
}

auto Graph::from_edge_list(int n, const std::vector<Edge> & edges) -> Graph
{
    if (n < 0 || n > max_vertices)
        throw GraphError("vertex count " + std::to_string(n) + " out of range 0.." + std::to_string(max_vertices));
    std::vector<VertexSet> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint out of range");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return Graph{std::move(adj)};
}

auto Graph::from_adjacency(std::vector<VertexSet> rows) -> Graph
{
    validate(rows);
    return Graph{std::move(rows)};
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto row : _adj)
        twice += row.size();
    return twice / 2;
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        (_adj[u] - VertexSet::range(u + 1)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    return out;
}

auto Graph::with_vertex_added(VertexSet neighbourhood) const -> Graph
{
    const int n = order();
    if (n + 1 > max_vertices)
        throw GraphError("graph capacity exceeded");
    if (! neighbourhood.is_subset_of(vertices()))
        throw GraphError("neighbourhood of new vertex out of range");
    auto adj = _adj;
    neighbourhood.for_each([&](Vertex v) { adj[v].insert(n); });
    adj.push_back(neighbourhood);
    return Graph{std::move(adj)};
}

auto Graph::with_vertex_removed(Vertex v) const -> Graph
{
    check_vertex(*this, v);
    return induced(vertices() - VertexSet::singleton(v));
}

auto Graph::induced(VertexSet s) const -> Graph
{
    auto keep = s.to_vector();
    return relabelled(keep);
}

auto Graph::relabelled(const std::vector<Vertex> & perm) const -> Graph
{
    const int m = static_cast<int>(perm.size());
    std::vector<int> position(order(), -1);
    for (int i = 0; i < m; ++i) {
        check_vertex(*this, perm[i]);
        if (position[perm[i]] != -1)
            throw GraphError("relabelling repeats vertex " + std::to_string(perm[i]));
        position[perm[i]] = i;
    }
    std::vector<VertexSet> adj(m);
    for (int i = 0; i < m; ++i)
        _adj[perm[i]].for_each([&](Vertex w) {
            if (position[w] >= 0)
                adj[i].insert(position[w]);
        });
    return Graph{std::move(adj)};
}

RootedGraph::RootedGraph(Graph g, Vertex r) : graph(std::move(g)), root(r)
{
    check_vertex(graph, root);
}

auto check_vertex(const Graph & g, Vertex v) -> void
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(g.order()) + " vertices");
}

auto is_triangle_free(const Graph & g) -> bool
{
    for (int u = 0; u < g.order(); ++u) {
        bool found = false;
        g.neighbours(u).for_each([&](Vertex v) {
            if (v > u && ! (g.neighbours(u) & g.neighbours(v)).empty())
                found = true;
        });
        if (found)
            return false;
    }
    return true;
}

auto reachable(const Graph & g, VertexSet from, VertexSet within) -> VertexSet
{
    auto seen = from;
    auto frontier = from;
    while (! frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

auto is_connected(const Graph & g) -> bool
{
    if (g.order() <= 1)
        return true;
    return reachable(g, VertexSet::singleton(0), g.vertices()) == g.vertices();
}

auto is_induced_tree(const Graph & g, VertexSet s) -> bool
{
    if (s.empty() || ! s.is_subset_of(g.vertices()))
        return false;
    int twice_edges = 0;
    s.for_each([&](Vertex v) { twice_edges += g.degree_into(v, s); });
    if (twice_edges != 2 * (s.size() - 1))
        return false;
    return reachable(g, VertexSet::singleton(s.first()), s) == s;
}

auto closed_neighbourhood(const Graph & g, Vertex v) -> VertexSet
{
    check_vertex(g, v);
    return g.neighbours(v) | VertexSet::singleton(v);
}

auto distances_from(const Graph & g, Vertex v) -> std::vector<int>
{
    check_vertex(g, v);
    std::vector<int> dist(g.order(), -1);
    auto seen = VertexSet::singleton(v);
    auto frontier = seen;
    for (int d = 0; ! frontier.empty(); ++d) {
        VertexSet next;
        frontier.for_each([&](Vertex u) {
            dist[u] = d;
            next |= g.neighbours(u);
        });
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return dist;
}

auto diameter(const Graph & g) -> int
{
    if (g.order() == 0)
        throw GraphError("diameter of the empty graph is undefined");
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        for (int d : distances_from(g, v)) {
            if (d < 0)
                throw GraphError("diameter of a disconnected graph is infinite");
            best = std::max(best, d);
        }
    }
    return best;
}

auto degree_sequence(const Graph & g) -> std::vector<int>
{
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        out.push_back(g.degree(v));
    return out;
}

} // namespace indtree
