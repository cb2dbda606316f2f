#pragma once

#include <indtree/graph.hpp>

#include <optional>

namespace indtree {

struct SearchStats
{
    long long nodes = 0;
    long long prunings = 0;

    auto operator+=(const SearchStats & o) -> SearchStats &
    {
        nodes += o.nodes;
        prunings += o.prunings;
        return *this;
    }
};

/// Size of a largest induced tree, a witness inducing it, and the root the tree was required to contain.
struct TreeSearchResult
{
    int size = 0;
    VertexSet witness;
    std::optional<Vertex> required_root;
    SearchStats stats;
};

/// t(G). Throws GraphError on the empty graph.
auto max_induced_tree(const Graph & g) -> TreeSearchResult;

/// t(G, v).
auto max_induced_tree_through(const RootedGraph & rg) -> TreeSearchResult;

/// t(G, v) >= target, stopping at the first tree of that size. Throws GraphError if target < 1.
auto exists_induced_tree_through(const RootedGraph & rg, int target) -> bool;

/// t(G) >= target.
auto exists_induced_tree(const Graph & g, int target) -> bool;

/// Largest n brute_force_t accepts.
inline constexpr int brute_force_limit = 20;

/// Scans all 2^n vertex subsets. Throws GraphError above brute_force_limit or on the empty graph.
auto brute_force_t(const Graph & g, std::optional<Vertex> root = std::nullopt) -> TreeSearchResult;

} // namespace indtree
