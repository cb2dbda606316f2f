#include <indtree/constructions.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace indtree {

auto blown_up_path(const std::vector<int> & class_sizes) -> Graph
{
    if (class_sizes.empty())
        throw GraphError("blown-up path needs at least one class");
    if (std::any_of(class_sizes.begin(), class_sizes.end(), [](int s) { return s < 1; }))
        throw GraphError("blown-up path class sizes must be positive");
    const long long total = std::accumulate(class_sizes.begin(), class_sizes.end(), 0LL);
    if (total > max_vertices)
        throw GraphError("blown-up path has " + std::to_string(total) + " vertices, capacity is " + std::to_string(max_vertices));

    std::vector<Edge> edges;
    int start = 0;
    for (std::size_t c = 0; c + 1 < class_sizes.size(); ++c) {
        const int next = start + class_sizes[c];
        for (int u = start; u < next; ++u)
            for (int v = next; v < next + class_sizes[c + 1]; ++v)
                edges.emplace_back(u, v);
        start = next;
    }
    return Graph::from_edge_list(static_cast<int>(total), edges);
}

auto g_k_class_sizes(int k) -> std::vector<int>
{
    if (k < 1)
        throw GraphError("G_k requires k >= 1");
    std::vector<int> sizes{1};
    for (int i = 1; i <= k - 1; ++i)
        sizes.push_back(k - i);
    return sizes;
}

auto b_k_class_sizes(int k) -> std::vector<int>
{
    if (k < 1)
        throw GraphError("B_k requires k >= 1");
    std::vector<int> sizes;
    for (int i = 1; i <= k; ++i)
        sizes.push_back(std::min(i, k + 1 - i));
    return sizes;
}

auto build_g_k(int k) -> RootedGraph
{
    return RootedGraph{blown_up_path(g_k_class_sizes(k)), 0};
}

auto build_b_k(int k) -> Graph
{
    return blown_up_path(b_k_class_sizes(k));
}

auto build_knn_minus_pm(int m) -> Graph
{
    if (m < 2)
        throw GraphError("K_{m,m} minus a perfect matching requires m >= 2");
    if (2 * m > max_vertices)
        throw GraphError("K_{m,m} minus a perfect matching exceeds vertex capacity");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j)
                edges.emplace_back(i, m + j);
    return Graph::from_edge_list(2 * m, edges);
}

} // namespace indtree
