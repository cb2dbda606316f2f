#pragma once

#include <indtree/graph.hpp>

#include <vector>

namespace indtree {

/// Path whose i-th vertex is replaced by class_sizes[i] independent vertices,
/// consecutive classes completely joined. Classes take consecutive indices.
auto blown_up_path(const std::vector<int> & class_sizes) -> Graph;

/// Class sizes (1, k-1, k-2, ..., 1).
auto g_k_class_sizes(int k) -> std::vector<int>;

/// Class sizes min(i, k+1-i) for i = 1..k.
auto b_k_class_sizes(int k) -> std::vector<int>;

/// G_k rooted at its singleton class, which is vertex 0. Throws GraphError for k < 1.
auto build_g_k(int k) -> RootedGraph;

/// B_k. Throws GraphError for k < 1.
auto build_b_k(int k) -> Graph;

/// K_{m,m} minus a perfect matching: a_i = i, b_i = m + i, a_i ~ b_j iff i != j.
/// Throws GraphError for m < 2.
auto build_knn_minus_pm(int m) -> Graph;

/// Closed-form orders, exact integer arithmetic.
constexpr auto g_k_order(long long k) -> long long { return 1 + (k - 1) * k / 2; }
constexpr auto b_k_order(long long k) -> long long { return (k + 1) * (k + 1) / 4; }

} // namespace indtree
