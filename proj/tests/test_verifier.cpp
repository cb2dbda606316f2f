#include <doctest.h>

#include "named_graphs.hpp"

#include <indtree/constructions.hpp>
#include <indtree/io.hpp>
#include <indtree/report_format.hpp>
#include <indtree/verifier.hpp>

#include <json.hpp>

using namespace indtree;

TEST_CASE("theorem 1 at small orders")
{
    auto report = verify_theorem1(7);
    CHECK(report.passed);
    CHECK(report.failures.empty());
    CHECK(report.claim == "theorem1");
    // equality cases met: G_1, G_2, G_3 (n = 4, the 4-cycle), G_4 (n = 7)
    REQUIRE(report.witnesses.size() == 4);
    for (const auto & w : report.witnesses) {
        auto g = from_graph6(w.graph6);
        const int k = t3_star_formula(g.order());
        CHECK(are_rooted_isomorphic({g, w.root}, build_g_k(k)));
    }
    CHECK(report_is_self_consistent(report));
}

TEST_CASE("theorems 1 and 2 touch identical instance sets")
{
    auto one = verify_theorem1(8, {.threads = 2});
    auto two = verify_theorem2(8);
    CHECK(one.instances_checked == two.instances_checked);
    REQUIRE(one.rows.size() == two.rows.size());
    for (std::size_t i = 0; i < one.rows.size(); ++i)
        CHECK(one.rows[i][1] == two.rows[i][1]);
}

TEST_CASE("theorem 2 equality at (G_5, v_0) and the small cases")
{
    auto g5 = build_g_k(5);
    const int outside = g5.graph.order() - closed_neighbourhood(g5.graph, g5.root).size();
    CHECK(outside == 6);
    CHECK(outside == (5 - 2) * (5 - 1) / 2);

    auto p3 = named::path(3);
    CHECK(p3.order() - closed_neighbourhood(p3, 1).size() == 0);

    auto report = verify_theorem2(7);
    CHECK(report.passed);
    for (int k : {3, 4})
        CHECK(std::any_of(report.witnesses.begin(), report.witnesses.end(), [&](const RootedWitness & w) {
            return are_rooted_isomorphic({from_graph6(w.graph6), w.root}, build_g_k(k));
        }));
}

TEST_CASE("corollary up to n = 8")
{
    auto report = verify_corollary(8);
    CHECK(report.passed);
    CHECK(report.rows.size() == 8 + 4); // one row per n, one per B_k with |B_k| <= 8
    for (int n = 1; n <= 8; ++n) {
        const auto & row = report.rows[n - 1];
        CHECK(row[2].second == row[3].second);
        CHECK(row[2].second <= row[4].second);
    }
}

TEST_CASE("counterexample report")
{
    auto report = verify_counterexample_b5();
    CHECK(report.passed);
    CHECK(report.rows.front() == Fields{{"knn_minus_pm_order", 10}, {"knn_minus_pm_t", 5}, {"b5_order", 9}, {"b5_t", 5}});
}

TEST_CASE("diameter remark at k = 3 and 4 on small orders")
{
    auto three = verify_diameter_remark(3, 8);
    CHECK(three.passed);
    CHECK(three.rows.front() == Fields{{"b_k_order", 4}, {"b_k_diameter", 2}, {"b_k_t", 3}});
    auto four = verify_diameter_remark(4, 9);
    CHECK(four.passed);
    CHECK(four.rows.size() == 1 + 3); // B_4 row, then n = 7, 8, 9
    CHECK_THROWS_AS(verify_diameter_remark(3, 11), BudgetError);
    CHECK_THROWS_AS(verify_diameter_remark(0, 8), GraphError);
}

TEST_CASE("failure records replay against the solver")
{
    auto c5 = named::cycle(5);
    FailureRecord honest{to_graph6(c5), 0, {{"n", 5}, {"t", 4}, {"t_root", 4}, {"diameter", 2}, {"outside_closed_neighbourhood", 2}, {"bound", 1}}, "synthetic"};
    CHECK(replay_failure(honest));

    auto tampered = honest;
    tampered.observed[1].second = 5;
    CHECK_FALSE(replay_failure(tampered));

    FailureRecord unknown_key{to_graph6(c5), std::nullopt, {{"girth", 5}}, "synthetic"};
    CHECK_FALSE(replay_failure(unknown_key));
    FailureRecord bad_graph{"D", std::nullopt, {{"n", 5}}, "synthetic"};
    CHECK_FALSE(replay_failure(bad_graph));

    VerificationReport report;
    report.passed = false;
    report.failures = {honest};
    CHECK(report_is_self_consistent(report));
    report.failures = {tampered};
    CHECK_FALSE(report_is_self_consistent(report));
    report.failures.clear();
    CHECK_FALSE(report_is_self_consistent(report));
}

TEST_CASE("reports are identical across runs and thread counts")
{
    CHECK(to_json(verify_theorem1(8), false) == to_json(verify_theorem1(8, {.threads = 4}), false));
    CHECK(to_json(verify_theorem2(8), false) == to_json(verify_theorem2(8, {.threads = 3}), false));
    CHECK(to_json(verify_corollary(8), false) == to_json(verify_corollary(8, {.threads = 4}), false));
    CHECK(to_json(verify_diameter_remark(4, 9), false) == to_json(verify_diameter_remark(4, 9, {.threads = 2}), false));
    CHECK(to_json(tabulate(8), false) == to_json(tabulate(8, {.threads = 4}), false));
}

TEST_CASE("JSON schemas")
{
    auto tab = nlohmann::json::parse(to_json(tabulate(4)));
    CHECK(tab["schema"] == 1);
    for (const char * key : {"n", "graphs_seen", "t3", "t3_star", "t3_star_formula", "extremal_rooted", "extremal_unrooted", "elapsed"})
        CHECK(tab.contains(key));
    CHECK(tab["extremal_rooted"][0].contains("graph6"));
    CHECK(tab["elapsed"].is_number());
    CHECK(nlohmann::json::parse(to_json(tabulate(4), false))["elapsed"].is_null());

    auto ver = nlohmann::json::parse(to_json(verify_counterexample_b5()));
    CHECK(ver["schema"] == 1);
    CHECK(ver["claim"] == "counterexample_b5");
    CHECK(ver["status"] == "pass");
    CHECK(ver["failures"].empty());
    CHECK(ver["instances_checked"] == 2);

    auto solve = nlohmann::json::parse(to_json(named::cycle(5), max_induced_tree(named::cycle(5))));
    CHECK(solve["t"] == 4);
    CHECK(solve["witness"].size() == 4);
    CHECK(solve["root"].is_null());
}

TEST_CASE("vertex list formatting")
{
    CHECK(format_vertex_list(VertexSet{0b100101}) == "{0, 2, 5}");
    CHECK(format_vertex_list(VertexSet{}) == "{}");
}
