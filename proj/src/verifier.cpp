#include <indtree/verifier.hpp>

#include <indtree/constructions.hpp>
#include <indtree/io.hpp>
#include <indtree/solver.hpp>

#include <algorithm>
#include <chrono>
#include <set>

namespace indtree {

namespace {
    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto isqrt(long long x) -> long long
    {
        long long r = 0;
        while ((r + 1) * (r + 1) <= x)
            ++r;
        return r;
    }

    /// Results gathered from one enumeration partition.
    struct Partial
    {
        long long instances = 0;
        std::vector<FailureRecord> failures;
        std::vector<RootedWitness> witnesses;
    };

    auto canonical_witness(const Graph & g, Vertex root) -> RootedWitness
    {
        auto canon = canonicalise(g);
        return RootedWitness{to_graph6(canon.graph), canon.position[root]};
    }

    /// Canonical witnesses are unique per root orbit only after this.
    auto dedupe_orbits(std::vector<RootedWitness> & witnesses) -> void
    {
        std::set<std::string> seen;
        std::vector<RootedWitness> kept;
        std::sort(witnesses.begin(), witnesses.end());
        for (auto & w : witnesses) {
            auto key = rooted_canonical_form(RootedGraph{from_graph6(w.graph6), w.root}).bytes;
            if (seen.insert(key).second)
                kept.push_back(std::move(w));
        }
        witnesses = std::move(kept);
    }

    /**
     * Runs `check` on every rooted connected triangle-free instance with order
     * 1..max_n, partition by partition, and merges the partials in partition
     * order so the outcome does not depend on the thread count.
     */
    template <typename Check>
    auto over_rooted_instances(int max_n, const EnumerationOptions & options, VerificationReport & report, Check check) -> void
    {
        for (int n = 1; n <= max_n; ++n) {
            ConnectedTriangleFreeEnumeration enumeration{n, options};
            std::vector<Partial> parts(enumeration.partitions());
            parallel_for(parts.size(), options.threads, [&](std::size_t i) {
                enumeration.visit_partition(i, [&](const Graph & g) {
                    for (Vertex v = 0; v < g.order(); ++v) {
                        ++parts[i].instances;
                        check(RootedGraph{g, v}, parts[i]);
                    }
                });
            });
            long long instances = 0, graphs_failed = 0;
            for (auto & part : parts) {
                instances += part.instances;
                graphs_failed += static_cast<long long>(part.failures.size());
                std::move(part.failures.begin(), part.failures.end(), std::back_inserter(report.failures));
                std::move(part.witnesses.begin(), part.witnesses.end(), std::back_inserter(report.witnesses));
            }
            report.instances_checked += instances;
            report.rows.push_back(Fields{{"n", n}, {"instances", instances}, {"failures", graphs_failed}});
        }
        dedupe_orbits(report.witnesses);
        report.passed = report.failures.empty();
    }

    auto check_max_n(int max_n, const EnumerationOptions & options) -> void
    {
        check_budget(max_n, options);
    }
}

auto verify_theorem1(int max_n, const EnumerationOptions & options) -> VerificationReport
{
    const auto start = Clock::now();
    check_max_n(max_n, options);
    VerificationReport report;
    report.claim = "theorem1";
    report.parameters = {{"max_n", max_n}};

    over_rooted_instances(max_n, options, report, [](const RootedGraph & rg, Partial & out) {
        const long long n = rg.graph.order();
        const int k = max_induced_tree_through(rg).size;
        const long long bound = g_k_order(k);
        if (n > bound) {
            out.failures.push_back(FailureRecord{to_graph6(rg.graph), rg.root,
                    {{"n", n}, {"t_root", k}, {"bound", bound}}, "order exceeds 1+(k-1)k/2"});
        }
        else if (n == bound) {
            if (are_rooted_isomorphic(rg, build_g_k(k)))
                out.witnesses.push_back(canonical_witness(rg.graph, rg.root));
            else
                out.failures.push_back(FailureRecord{to_graph6(rg.graph), rg.root,
                        {{"n", n}, {"t_root", k}, {"bound", bound}}, "equality case not rooted-isomorphic to G_k"});
        }
    });

    report.elapsed_seconds = seconds_since(start);
    return report;
}

auto verify_theorem2(int max_n, const EnumerationOptions & options) -> VerificationReport
{
    const auto start = Clock::now();
    check_max_n(max_n, options);
    VerificationReport report;
    report.claim = "theorem2";
    report.parameters = {{"max_n", max_n}};

    over_rooted_instances(max_n, options, report, [](const RootedGraph & rg, Partial & out) {
        const long long k = max_induced_tree_through(rg).size;
        const long long outside = rg.graph.order() - closed_neighbourhood(rg.graph, rg.root).size();
        const long long bound = (k - 2) * (k - 1) / 2;
        if (outside > bound)
            out.failures.push_back(FailureRecord{to_graph6(rg.graph), rg.root,
                    {{"n", rg.graph.order()}, {"t_root", k}, {"outside_closed_neighbourhood", outside}, {"bound", bound}},
                    "|V \\ N[v]| exceeds (k-2)(k-1)/2"});
        else if (outside == bound && k >= 3)
            out.witnesses.push_back(canonical_witness(rg.graph, rg.root));
    });

    report.elapsed_seconds = seconds_since(start);
    return report;
}

auto verify_corollary(int max_n, const EnumerationOptions & options) -> VerificationReport
{
    const auto start = Clock::now();
    check_max_n(max_n, options);
    VerificationReport report;
    report.claim = "corollary";
    report.parameters = {{"max_n", max_n}};

    std::vector<int> t3_by_n(max_n + 1, 0);
    for (int n = 1; n <= max_n; ++n) {
        auto tab = tabulate(n, options);
        t3_by_n[n] = tab.t3;
        report.instances_checked += tab.rooted_pairs;
        report.rows.push_back(Fields{{"n", n}, {"graphs", tab.graphs_seen}, {"t3_star", tab.t3_star},
                {"t3_star_formula", tab.t3_star_formula}, {"t3", tab.t3}});

        if (tab.t3_star != tab.t3_star_formula) {
            const auto & w = tab.extremal_rooted.front();
            report.failures.push_back(FailureRecord{w.graph6, w.root,
                    {{"n", n}, {"t_root", tab.t3_star}, {"bound", tab.t3_star_formula}}, "t3*(n) differs from the closed form"});
        }
        if (tab.t3_star > tab.t3) {
            const auto & w = tab.extremal_unrooted.front();
            report.failures.push_back(FailureRecord{w, std::nullopt,
                    {{"n", n}, {"t", tab.t3}, {"bound", tab.t3_star}}, "t3(n) below t3*(n)"});
        }
        if (tab.t3_star == tab.t3_star_formula && n == g_k_order(tab.t3_star))
            for (const auto & w : tab.extremal_rooted)
                report.witnesses.push_back(w);
    }

    for (int k = 1; b_k_order(k) <= max_n; ++k) {
        const auto n = b_k_order(k);
        const auto b = build_b_k(k);
        const int t = max_induced_tree(b).size;
        const long long upper = isqrt(4 * n) + 1;
        report.rows.push_back(Fields{{"k", k}, {"n", n}, {"t_b_k", t}, {"t3", t3_by_n[n]}, {"floor_2sqrt_n_plus_1", upper}});
        if (t > k || t3_by_n[n] > t || t > upper)
            report.failures.push_back(FailureRecord{to_graph6(b), std::nullopt,
                    {{"n", n}, {"t", t}, {"bound", std::min<long long>(k, upper)}}, "B_k certificate does not bound t3(n)"});
    }

    report.passed = report.failures.empty();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

auto verify_counterexample_b5() -> VerificationReport
{
    const auto start = Clock::now();
    VerificationReport report;
    report.claim = "counterexample_b5";
    report.parameters = {{"m", 5}, {"k", 5}};

    const auto knn = build_knn_minus_pm(5);
    const auto b5 = build_b_k(5);
    const auto knn_t = max_induced_tree(knn);
    const auto b5_t = max_induced_tree(b5);
    report.instances_checked = 2;
    report.rows.push_back(Fields{{"knn_minus_pm_order", knn.order()}, {"knn_minus_pm_t", knn_t.size},
            {"b5_order", b5.order()}, {"b5_t", b5_t.size}});

    if (knn.order() != 10 || knn_t.size != 5 || ! is_triangle_free(knn) || ! is_connected(knn))
        report.failures.push_back(FailureRecord{to_graph6(knn), std::nullopt,
                {{"n", knn.order()}, {"t", knn_t.size}, {"bound", 5}}, "K_{5,5} minus a perfect matching is not a 10-vertex graph with t = 5"});
    if (b5.order() != 9 || b5_t.size != 5)
        report.failures.push_back(FailureRecord{to_graph6(b5), std::nullopt,
                {{"n", b5.order()}, {"t", b5_t.size}, {"bound", 5}}, "B_5 is not a 9-vertex graph with t = 5"});
    if (report.failures.empty() && ! (knn.order() > b5.order() && knn_t.size <= b5_t.size))
        report.failures.push_back(FailureRecord{to_graph6(knn), std::nullopt,
                {{"n", knn.order()}, {"t", knn_t.size}}, "K_{5,5} minus a perfect matching does not beat B_5"});

    report.passed = report.failures.empty();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

auto verify_diameter_remark(int k, int max_n, const EnumerationOptions & options) -> VerificationReport
{
    const auto start = Clock::now();
    if (k < 1)
        throw GraphError("diameter remark requires k >= 1");
    check_max_n(max_n, options);
    VerificationReport report;
    report.claim = "diameter_remark";
    report.parameters = {{"k", k}, {"max_n", max_n}};

    const auto b = build_b_k(k);
    const int b_diameter = diameter(b);
    const int b_t = max_induced_tree(b).size;
    ++report.instances_checked;
    report.rows.push_back(Fields{{"b_k_order", b.order()}, {"b_k_diameter", b_diameter}, {"b_k_t", b_t}});
    if (b_diameter != k - 1 || b_t > k)
        report.failures.push_back(FailureRecord{to_graph6(b), std::nullopt,
                {{"n", b.order()}, {"diameter", b_diameter}, {"t", b_t}}, "B_k does not have diameter k-1 and t <= k"});

    for (int n = b.order() + 1; n <= max_n; ++n) {
        ConnectedTriangleFreeEnumeration enumeration{n, options};
        std::vector<Partial> parts(enumeration.partitions());
        std::vector<long long> qualifying_diameter(parts.size(), 0);
        parallel_for(parts.size(), options.threads, [&](std::size_t i) {
            enumeration.visit_partition(i, [&](const Graph & g) {
                ++parts[i].instances;
                if (diameter(g) != k - 1)
                    return;
                ++qualifying_diameter[i];
                if (! exists_induced_tree(g, k + 1)) {
                    const int t = max_induced_tree(g).size;
                    parts[i].failures.push_back(FailureRecord{to_graph6(g), std::nullopt,
                            {{"n", n}, {"diameter", k - 1}, {"t", t}}, "graph with diameter k-1 and t <= k exceeds |B_k|"});
                }
            });
        });
        long long instances = 0, with_diameter = 0, failures = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            instances += parts[i].instances;
            with_diameter += qualifying_diameter[i];
            failures += static_cast<long long>(parts[i].failures.size());
            std::move(parts[i].failures.begin(), parts[i].failures.end(), std::back_inserter(report.failures));
        }
        report.instances_checked += instances;
        report.rows.push_back(Fields{{"n", n}, {"graphs", instances}, {"diameter_k_minus_1", with_diameter}, {"failures", failures}});
    }

    report.passed = report.failures.empty();
    report.elapsed_seconds = seconds_since(start);
    return report;
}

auto replay_failure(const FailureRecord & failure) -> bool
{
    Graph g;
    try {
        g = from_graph6(failure.graph6);
    }
    catch (const ParseError &) {
        return false;
    }
    if (failure.root && (*failure.root < 0 || *failure.root >= g.order()))
        return false;

    for (const auto & [key, value] : failure.observed) {
        long long actual;
        if (key == "n")
            actual = g.order();
        else if (key == "t")
            actual = max_induced_tree(g).size;
        else if (key == "t_root") {
            if (! failure.root)
                return false;
            actual = max_induced_tree_through(RootedGraph{g, *failure.root}).size;
        }
        else if (key == "diameter") {
            if (! is_connected(g))
                return false;
            actual = diameter(g);
        }
        else if (key == "outside_closed_neighbourhood") {
            if (! failure.root)
                return false;
            actual = g.order() - closed_neighbourhood(g, *failure.root).size();
        }
        else if (key == "bound")
            continue;
        else
            return false;
        if (actual != value)
            return false;
    }
    return true;
}

auto report_is_self_consistent(const VerificationReport & report) -> bool
{
    if (report.passed != report.failures.empty())
        return false;
    return std::all_of(report.failures.begin(), report.failures.end(), replay_failure);
}

} // namespace indtree
