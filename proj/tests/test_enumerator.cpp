#include <doctest.h>

#include "named_graphs.hpp"
#include "oracles.hpp"

#include <indtree/canon.hpp>
#include <indtree/constructions.hpp>
#include <indtree/enumerator.hpp>
#include <indtree/io.hpp>

#include <cmath>
#include <set>

using namespace indtree;

namespace {
    auto forms_of(const std::vector<Graph> & graphs) -> std::set<std::string>
    {
        std::set<std::string> out;
        for (const auto & g : graphs)
            out.insert(canonical_form(g).bytes);
        return out;
    }
}

TEST_CASE("smallest orders")
{
    CHECK(connected_triangle_free_graphs(1).size() == 1);
    auto two = connected_triangle_free_graphs(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].edge_count() == 1);

    auto three = connected_triangle_free_graphs(3);
    REQUIRE(three.size() == 1);
    CHECK(oracle::isomorphic(three[0], named::path(3)));
    CHECK(oracle::connected_triangle_free_classes(3).size() == 1);

    auto four = connected_triangle_free_graphs(4);
    REQUIRE(four.size() == 3);
    for (const auto & expected : {named::path(4), named::star(3), named::cycle(4)})
        CHECK(std::count_if(four.begin(), four.end(), [&](const Graph & g) { return oracle::isomorphic(g, expected); }) == 1);
}

TEST_CASE("enumeration matches the labelled-graph filter for n <= 6")
{
    for (int n = 1; n <= 6; ++n) {
        auto generated = connected_triangle_free_graphs(n);
        auto reference = oracle::connected_triangle_free_classes(n);
        CHECK(generated.size() == reference.size());
        for (const auto & r : reference)
            CHECK(std::count_if(generated.begin(), generated.end(), [&](const Graph & g) { return oracle::isomorphic(g, r); }) == 1);
    }
}

TEST_CASE("enumeration emits distinct connected triangle-free classes for n <= 9")
{
    for (int n = 1; n <= 9; ++n) {
        auto graphs = connected_triangle_free_graphs(n);
        CHECK(forms_of(graphs).size() == graphs.size());
        for (const auto & g : graphs) {
            CHECK(g.order() == n);
            CHECK(is_triangle_free(g));
            CHECK(is_connected(g));
        }
    }
}

TEST_CASE("augmentation agrees with naive extend-and-deduplicate generation for n <= 8")
{
    // every triangle-free graph on n vertices, by extending each class on n-1
    // vertices with every independent set and deduplicating canonical forms
    std::vector<Graph> level{Graph{}};
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto & parent : level)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << parent.order()); ++mask) {
                VertexSet s{mask};
                bool independent = true;
                s.for_each([&](Vertex v) { independent = independent && (parent.neighbours(v) & s).empty(); });
                if (! independent)
                    continue;
                auto child = parent.with_vertex_added(s);
                if (seen.insert(canonical_form(child).bytes).second)
                    next.push_back(child);
            }
        level = std::move(next);

        auto generated = triangle_free_graphs(n);
        CHECK(generated.size() == level.size());
        CHECK(forms_of(generated) == seen);

        std::vector<Graph> connected;
        std::copy_if(level.begin(), level.end(), std::back_inserter(connected), [](const Graph & g) { return is_connected(g); });
        CHECK(forms_of(connected_triangle_free_graphs(n)) == forms_of(connected));
    }
}

TEST_CASE("class counts")
{
    // n <= 8 is fixed by the oracles above; 9 and 10 agree with OEIS A024607
    const std::vector<std::size_t> expected{0, 1, 1, 1, 3, 6, 19, 59, 267, 1380, 9832};
    for (int n = 1; n <= 10; ++n) {
        std::size_t count = 0;
        enumerate_connected_triangle_free(n, [&](const Graph &) { ++count; });
        CHECK(count == expected[n]);
    }
}

TEST_CASE("budget")
{
    CHECK_THROWS_AS(connected_triangle_free_graphs(0), BudgetError);
    CHECK_THROWS_AS(connected_triangle_free_graphs(11), BudgetError);
    CHECK_THROWS_AS(connected_triangle_free_graphs(13, {.allow_large = true}), BudgetError);
    CHECK_NOTHROW(check_budget(12, {.allow_large = true}));
    CHECK_NOTHROW(check_budget(10, {}));
}

TEST_CASE("t3_star_formula")
{
    CHECK(t3_star_formula(1) == 1);
    CHECK(t3_star_formula(11) == 5);
    CHECK(t3_star_formula(7) == 4);
    CHECK(t3_star_formula(8) == 5);
    CHECK_THROWS_AS(t3_star_formula(0), GraphError);

    // ceil((1 + sqrt(8n-7)) / 2) is the least m with (2m-1)^2 >= 8n-7
    for (long long n = 1; n <= 200000; ++n) {
        const long long d = 8 * n - 7;
        long long m = 1;
        while ((2 * m - 1) * (2 * m - 1) < d)
            ++m;
        REQUIRE(t3_star_formula(n) == m);
        REQUIRE(static_cast<long long>(std::ceil((1.0L + std::sqrt(static_cast<long double>(d))) / 2.0L)) == m);
    }
}

TEST_CASE("tabulate small orders")
{
    auto one = tabulate(1);
    CHECK(one.t3 == 1);
    CHECK(one.t3_star == 1);
    CHECK(one.graphs_seen == 1);

    auto two = tabulate(2);
    CHECK(two.t3 == 2);
    CHECK(two.t3_star == 2);

    auto four = tabulate(4);
    CHECK(four.graphs_seen == 3);
    CHECK(four.t3_star == 3);
    CHECK(four.t3 == 3);
    REQUIRE(four.extremal_rooted.size() == 1);
    auto w = four.extremal_rooted.front();
    CHECK(are_rooted_isomorphic({from_graph6(w.graph6), w.root}, build_g_k(3)));
    REQUIRE(four.extremal_unrooted.size() == 1);
    CHECK(oracle::isomorphic(from_graph6(four.extremal_unrooted.front()), named::cycle(4)));
}

TEST_CASE("tabulate n = 7 finds (G_4, v_0) among the rooted extremal pairs")
{
    auto seven = tabulate(7);
    CHECK(seven.t3_star == 4);
    CHECK(seven.t3_star_formula == 4);
    CHECK(seven.t3_star <= seven.t3);
    CHECK(std::any_of(seven.extremal_rooted.begin(), seven.extremal_rooted.end(), [](const RootedWitness & w) {
        return are_rooted_isomorphic({from_graph6(w.graph6), w.root}, build_g_k(4));
    }));
}

TEST_CASE("tabulated witnesses re-verify")
{
    for (int n = 1; n <= 8; ++n) {
        auto report = tabulate(n);
        CHECK(report.t3_star == t3_star_formula(n));
        CHECK(report.t3_star <= report.t3);
        CHECK_FALSE(report.extremal_rooted.empty());
        CHECK_FALSE(report.extremal_unrooted.empty());
        for (const auto & w : report.extremal_rooted) {
            auto g = from_graph6(w.graph6);
            CHECK(g.order() == n);
            CHECK(oracle::largest_induced_tree(g, w.root) == report.t3_star);
        }
        for (const auto & g6 : report.extremal_unrooted)
            CHECK(oracle::largest_induced_tree(from_graph6(g6)) == report.t3);
    }
}

TEST_CASE("concurrent tabulation equals sequential tabulation")
{
    for (int n : {6, 9}) {
        auto seq = tabulate(n, {.threads = 1});
        auto par = tabulate(n, {.threads = 4});
        CHECK(seq.graphs_seen == par.graphs_seen);
        CHECK(seq.t3 == par.t3);
        CHECK(seq.t3_star == par.t3_star);
        CHECK(seq.extremal_rooted == par.extremal_rooted);
        CHECK(seq.extremal_unrooted == par.extremal_unrooted);
    }
    CHECK(triangle_free_graphs(8, {.threads = 3}) == triangle_free_graphs(8));
}

TEST_CASE("parallel_for propagates exceptions")
{
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 5) throw GraphError("boom"); }), GraphError);
}
