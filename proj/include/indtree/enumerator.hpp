#pragma once

#include <indtree/canon.hpp>
#include <indtree/graph.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indtree {

/// Raised when an enumeration is requested outside the allowed order range.
class BudgetError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

/// Largest order enumerated without an override.
inline constexpr int default_max_order = 10;
/// Largest order enumerated at all.
inline constexpr int hard_max_order = 12;

struct EnumerationOptions
{
    bool allow_large = false; ///< permits orders up to hard_max_order
    int threads = 1;
};

auto check_budget(int n, const EnumerationOptions & options) -> void;

/// Runs body(i) for i in [0, count) on up to `threads` threads; threads <= 1 runs in order on the caller.
auto parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> & body) -> void;

/**
 * One generation step of canonical augmentation: every triangle-free graph on
 * parent.order() + 1 vertices whose canonical parent is `parent`, each
 * isomorphism class once. The new vertex receives an independent set of the
 * parent as its neighbourhood and is kept only when it lies in the orbit of
 * the canonical deletion vertex (the maximum-degree vertex placed last by
 * canonical labelling).
 */
auto augment(const Graph & parent, const std::function<void(const Graph &)> & visit) -> void;

/// One representative per isomorphism class of triangle-free graphs (connected or not) on n vertices.
auto triangle_free_graphs(int n, const EnumerationOptions & options = {}) -> std::vector<Graph>;

/**
 * The connected triangle-free graphs on n vertices, split into partitions by
 * canonical parent. Each partition is generated independently and in a fixed
 * order, so partitions may be visited concurrently.
 */
class ConnectedTriangleFreeEnumeration
{
public:
    explicit ConnectedTriangleFreeEnumeration(int n, const EnumerationOptions & options = {});

    auto order() const -> int { return _n; }
    auto partitions() const -> std::size_t { return _parents.size(); }
    auto visit_partition(std::size_t i, const std::function<void(const Graph &)> & visit) const -> void;
    auto for_each(const std::function<void(const Graph &)> & visit) const -> void;

private:
    int _n;
    std::vector<Graph> _parents;
};

/// Sequential stream of all connected triangle-free graphs on n vertices, one per class.
auto enumerate_connected_triangle_free(int n, const std::function<void(const Graph &)> & visit,
        const EnumerationOptions & options = {}) -> void;

auto connected_triangle_free_graphs(int n, const EnumerationOptions & options = {}) -> std::vector<Graph>;

/// Smallest k with n <= 1 + (k-1)k/2, in integers. Throws GraphError for n < 1.
auto t3_star_formula(long long n) -> int;

struct RootedWitness
{
    std::string graph6;
    Vertex root = 0;

    auto operator<=>(const RootedWitness &) const = default;
};

struct EnumerationReport
{
    int n = 0;
    long long graphs_seen = 0;
    long long rooted_pairs = 0;
    int t3 = 0;
    int t3_star = 0;
    int t3_star_formula = 0;
    /// One entry per root orbit, graphs canonically relabelled, sorted.
    std::vector<RootedWitness> extremal_rooted;
    /// Canonically relabelled graph6 strings, sorted.
    std::vector<std::string> extremal_unrooted;
    std::optional<double> elapsed_seconds;
};

/// Exact t3(n) and t3*(n) with all extremal witnesses.
auto tabulate(int n, const EnumerationOptions & options = {}) -> EnumerationReport;

/// Canonically relabelled copy of g, and the position of each original vertex.
struct Canonicalised
{
    Graph graph;
    std::vector<Vertex> position;
};

auto canonicalise(const Graph & g) -> Canonicalised;

} // namespace indtree
