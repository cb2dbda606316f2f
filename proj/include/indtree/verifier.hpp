#pragma once

#include <indtree/enumerator.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace indtree {

/// Ordered name/value pairs; order is preserved in every rendering.
using Fields = std::vector<std::pair<std::string, long long>>;

/**
 * A (graph, root) instance on which a claim failed. `observed` uses the keys
 * n, t, t_root, diameter, outside_closed_neighbourhood, bound; every key other
 * than bound is recomputed by replay_failure.
 */
struct FailureRecord
{
    std::string graph6;
    std::optional<Vertex> root;
    Fields observed;
    std::string reason;
};

struct VerificationReport
{
    /// theorem1 | theorem2 | corollary | counterexample_b5 | diameter_remark
    std::string claim;
    Fields parameters;
    long long instances_checked = 0;
    bool passed = true;
    std::vector<FailureRecord> failures;
    /// One row per order (or per checked quantity) with the values that were compared.
    std::vector<Fields> rows;
    /// Extremal (graph, root) pairs met along the way, canonically relabelled and sorted.
    std::vector<RootedWitness> witnesses;
    std::optional<double> elapsed_seconds;
};

/// n <= 1 + (k-1)k/2 at k = t(G,v) for every connected triangle-free (G,v) with n <= max_n,
/// and (G,v) rooted-isomorphic to (G_k, v_0) whenever equality holds.
auto verify_theorem1(int max_n, const EnumerationOptions & options = {}) -> VerificationReport;

/// |V(G) \ N[v]| <= (k-2)(k-1)/2 at k = t(G,v) over the same instances as verify_theorem1.
auto verify_theorem2(int max_n, const EnumerationOptions & options = {}) -> VerificationReport;

/// t3*(n) equals the closed form, t3*(n) <= t3(n), and the B_k certificates bound t3 at n = |B_k|.
auto verify_corollary(int max_n, const EnumerationOptions & options = {}) -> VerificationReport;

/// K_{5,5} minus a perfect matching has t = 5 on 10 vertices while B_5 has t = 5 on 9.
auto verify_counterexample_b5() -> VerificationReport;

/// No connected triangle-free graph with diameter k-1 and t(G) <= k has more than |B_k|
/// vertices, for orders |B_k|+1..max_n; B_k itself qualifies.
auto verify_diameter_remark(int k, int max_n, const EnumerationOptions & options = {}) -> VerificationReport;

/// Recomputes the observed values of a failure record; true iff they all match.
auto replay_failure(const FailureRecord & failure) -> bool;

/// Every failure of the report replays, and passed matches failures.empty().
auto report_is_self_consistent(const VerificationReport & report) -> bool;

} // namespace indtree
