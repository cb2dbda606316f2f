#include <doctest.h>

#include "named_graphs.hpp"
#include "oracles.hpp"

#include <indtree/canon.hpp>
#include <indtree/constructions.hpp>

using namespace indtree;

TEST_CASE("G_k layout")
{
    auto g5 = build_g_k(5);
    CHECK(g5.graph.order() == 11);
    CHECK(g5.root == 0);
    CHECK(g_k_class_sizes(5) == std::vector<int>{1, 4, 3, 2, 1});

    auto g1 = build_g_k(1);
    CHECK(g1.graph.order() == 1);
    CHECK(g1.root == 0);

    for (int v = 0; v < 4; ++v)
        CHECK(are_rooted_isomorphic(build_g_k(3), {named::cycle(4), v}));

    CHECK_THROWS_AS(build_g_k(0), GraphError);
}

TEST_CASE("B_k layout")
{
    CHECK(b_k_class_sizes(5) == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(build_b_k(5).order() == 9);
    CHECK(build_b_k(1).order() == 1);
    CHECK(b_k_class_sizes(4) == std::vector<int>{1, 2, 2, 1});
    CHECK(build_b_k(4).order() == 6);
    CHECK(b_k_order(4) == 25 / 4);
    CHECK_THROWS_AS(build_b_k(0), GraphError);
}

TEST_CASE("B_k class sizes equal the half-integer expression")
{
    for (int k = 1; k <= 20; ++k) {
        auto sizes = b_k_class_sizes(k);
        for (int i = 1; i <= k; ++i) {
            // (k+1)/2 - |(k+1)/2 - i|, doubled to stay in integers
            const int twice = (k + 1) - std::abs((k + 1) - 2 * i);
            CHECK(2 * sizes[i - 1] == twice);
        }
    }
}

TEST_CASE("K_{m,m} minus a perfect matching")
{
    auto k55 = build_knn_minus_pm(5);
    CHECK(k55.order() == 10);
    CHECK(k55.edge_count() == 20);
    CHECK(degree_sequence(k55) == std::vector<int>(10, 4));

    auto k22 = build_knn_minus_pm(2);
    CHECK(k22.order() == 4);
    CHECK(k22.edge_count() == 2);
    CHECK_FALSE(is_connected(k22));

    CHECK(canonical_form(build_knn_minus_pm(3)) == canonical_form(named::cycle(6)));
    CHECK(oracle::isomorphic(build_knn_minus_pm(3), named::cycle(6)));

    CHECK_THROWS_AS(build_knn_minus_pm(1), GraphError);
}

TEST_CASE("construction orders match the closed forms for k <= 20")
{
    for (int k = 1; k <= 20; ++k) {
        CHECK(build_b_k(k).order() == b_k_order(k));
        CHECK(b_k_order(k) == (k + 1) * (k + 1) / 4);
        CHECK(build_g_k(k).graph.order() == g_k_order(k));
        CHECK(g_k_order(k) == 1 + (k - 1) * k / 2);
    }
}

TEST_CASE("constructions are triangle-free, connected, and B_k has diameter k-1")
{
    for (int k = 1; k <= 11; ++k) {
        auto g = build_g_k(k).graph;
        CHECK(is_triangle_free(g));
        CHECK(is_connected(g));
    }
    for (int k = 1; k <= 14; ++k) {
        auto b = build_b_k(k);
        CHECK(is_triangle_free(b));
        CHECK(is_connected(b));
        CHECK(diameter(b) == k - 1);
    }
    for (int m = 3; m <= 8; ++m) {
        CHECK(is_triangle_free(build_knn_minus_pm(m)));
        CHECK(is_connected(build_knn_minus_pm(m)));
    }
}

TEST_CASE("deleting v_0 and all of class 1 but one vertex x leaves G_{k-1} rooted at x")
{
    for (int k = 2; k <= 6; ++k) {
        auto gk = build_g_k(k).graph;
        const int class1_size = k - 1;
        // class 1 occupies 1..k-1; keep vertex 1 as x
        auto keep = gk.vertices() - VertexSet::singleton(0);
        for (int v = 2; v <= class1_size; ++v)
            keep.erase(v);
        auto reduced = gk.induced(keep);
        CHECK(reduced.order() == g_k_order(k - 1));
        CHECK(are_rooted_isomorphic({reduced, 0}, build_g_k(k - 1)));
    }
}

TEST_CASE("blown-up path validation")
{
    CHECK_THROWS_AS(blown_up_path({}), GraphError);
    CHECK_THROWS_AS(blown_up_path({1, 0, 1}), GraphError);
    CHECK_THROWS_AS(blown_up_path({200, 60}), GraphError);
    CHECK(blown_up_path({1, 1, 1, 1}) == named::path(4));
}
