#pragma once

#include <indtree/graph.hpp>

namespace indtree::named {

inline auto path(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

inline auto cycle(int n) -> Graph
{
    auto edges = path(n).edges();
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

inline auto complete(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

/// K_{1,leaves} with centre 0.
inline auto star(int leaves) -> Graph
{
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edge_list(leaves + 1, edges);
}

} // namespace indtree::named
