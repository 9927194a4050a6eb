#include "doctest.h"

#include <algorithm>

#include "eccspec/errors.hpp"
#include "eccspec/graph.hpp"
#include "test_support.hpp"

using namespace eccspec;
using eccspec::testing::component_sizes;
using eccspec::testing::path;
using eccspec::testing::random_connected_graph;
using eccspec::testing::random_graph;

TEST_CASE("MultipartiteSpec canonicalizes and validates")
{
    MultipartiteSpec s({1, 3, 2});
    CHECK(s.parts() == std::vector<int>{3, 2, 1});
    CHECK(s.order() == 6);
    CHECK(s.part_count() == 3);
    CHECK(s.to_string() == "3,2,1");
    CHECK(MultipartiteSpec({2, 1, 2}) == MultipartiteSpec({2, 2, 1}));
    CHECK_THROWS_AS(MultipartiteSpec({}), InvalidSpec);
    CHECK_THROWS_AS(MultipartiteSpec({2, 0}), InvalidSpec);
    CHECK_THROWS_AS(MultipartiteSpec({-1, 3}), InvalidSpec);
}

TEST_CASE("build_multipartite")
{
    SUBCASE("[1,1,1] is the triangle")
    {
        Graph g = build_multipartite(MultipartiteSpec({1, 1, 1}));
        CHECK(g.order() == 3);
        CHECK(g.edge_count() == 3);
        CHECK(g == complete(3));
    }
    SUBCASE("[3,1] is the star with three leaves")
    {
        Graph g = build_multipartite(MultipartiteSpec({3, 1}));
        CHECK(g.edge_count() == 3);
        CHECK(g.degree(3) == 3);
        CHECK(g == star(4));
    }
    SUBCASE("[2,2] is C4")
    {
        Graph g = build_multipartite(MultipartiteSpec({2, 2}));
        CHECK(g.edge_count() == 4);
        for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
        CHECK(!g.adjacent(0, 1));
        CHECK(!g.adjacent(2, 3));
    }
    SUBCASE("complete_split delegates to [p1, 1 x p2]")
    {
        CHECK(complete_split(2, 2) == build_multipartite(MultipartiteSpec({2, 1, 1})));
    }
    SUBCASE("degree in class i is n - n_i")
    {
        for (auto parts : {std::vector<int>{4, 2, 1}, {3, 3, 3}, {5, 1, 1, 1}, {2, 1}}) {
            MultipartiteSpec spec(parts);
            Graph g = build_multipartite(spec);
            auto cls = multipartite_classes(spec);
            for (Vertex v = 0; v < g.order(); ++v)
                CHECK(g.degree(v) == static_cast<std::size_t>(spec.order() - spec.parts()[static_cast<std::size_t>(cls[v])]));
        }
    }
}

TEST_CASE("Graph rejects loops and out-of-range endpoints")
{
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionViolated);
    CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionViolated);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("complement")
{
    CHECK(complement(complete(4)).edge_count() == 0);

    Graph c = complement(build_multipartite(MultipartiteSpec({2, 2})));
    CHECK(c.edge_count() == 2);
    CHECK(component_sizes(c) == std::vector<std::size_t>{2, 2});

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(1 + trial % 9, 0.4, rng);
        CHECK(complement(complement(g)) == g);
    }

    // Complement of K_{n_1..n_p} is the disjoint union of cliques K_{n_i}.
    for (auto parts : {std::vector<int>{4, 3, 1}, {2, 2, 2}, {5, 1}}) {
        MultipartiteSpec spec(parts);
        Graph cg = complement(build_multipartite(spec));
        std::vector<std::size_t> expected(parts.begin(), parts.end());
        std::sort(expected.begin(), expected.end());
        CHECK(component_sizes(cg) == expected);
        auto cls = multipartite_classes(spec);
        for (Vertex v = 0; v < cg.order(); ++v)
            CHECK(cg.degree(v) + 1 == static_cast<std::size_t>(spec.parts()[static_cast<std::size_t>(cls[v])]));
    }
}

TEST_CASE("strong_product")
{
    CHECK(strong_product(complete(2), complete(2)) == complete(4));

    Graph c4 = build_multipartite(MultipartiteSpec({2, 2}));
    Graph p = strong_product(c4, complete(2));
    CHECK(p.order() == 8);
    for (Vertex v = 0; v < 8; ++v) CHECK(p.degree(v) == 5);

    Graph k1(1);
    CHECK(strong_product(c4, k1) == c4);

    SUBCASE("distances are the coordinate-wise maximum")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_connected_graph(2 + trial % 4, 0.5, rng);
            Graph h = random_connected_graph(2 + trial % 3, 0.6, rng);
            Graph gh = strong_product(g, h);
            auto dg = all_pairs_distances(g);
            auto dh = all_pairs_distances(h);
            auto d = all_pairs_distances(gh);
            const std::size_t nh = h.order();
            CHECK(gh.order() == g.order() * nh);
            for (Vertex a = 0; a < gh.order(); ++a)
                for (Vertex b = 0; b < gh.order(); ++b)
                    CHECK(d(a, b) == std::max(dg(a / nh, b / nh), dh(a % nh, b % nh)));
        }
    }
}

TEST_CASE("all_pairs_distances")
{
    SUBCASE("path P3")
    {
        auto d = all_pairs_distances(path(3));
        CHECK(d(0, 2) == 2);
        CHECK(d.eccentricities() == std::vector<int>{2, 1, 2});
        CHECK(d.diameter() == 2);
    }
    SUBCASE("multipartite with a large part has diameter 2")
    {
        MultipartiteSpec spec({3, 2, 1, 1});
        auto d = all_pairs_distances(build_multipartite(spec));
        CHECK(d.diameter() == 2);
        auto cls = multipartite_classes(spec);
        for (Vertex v = 0; v < d.size(); ++v)
            CHECK(d.eccentricity(v) == (spec.parts()[static_cast<std::size_t>(cls[v])] == 1 ? 1 : 2));
    }
    SUBCASE("complete graph")
    {
        auto d = all_pairs_distances(complete(5));
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = 0; v < 5; ++v) CHECK(d(u, v) == (u == v ? 0 : 1));
    }
    SUBCASE("disconnected input is rejected")
    {
        Graph g(3);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(all_pairs_distances(g), DisconnectedGraph);
    }
    SUBCASE("metric axioms on random graphs")
    {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 5 + static_cast<std::size_t>(trial) * 4;
            auto d = all_pairs_distances(random_connected_graph(n, 0.15, rng));
            for (Vertex u = 0; u < n; ++u) {
                CHECK(d(u, u) == 0);
                for (Vertex v = 0; v < n; ++v) {
                    REQUIRE(d(u, v) == d(v, u));
                    for (Vertex w = 0; w < n; ++w) REQUIRE(d(u, w) <= d(u, v) + d(v, w));
                }
            }
        }
    }
}

TEST_CASE("antipodal_class")
{
    CHECK(antipodal_class(build_multipartite(MultipartiteSpec({3, 3, 3}))) == 3);
    CHECK(antipodal_class(build_multipartite(MultipartiteSpec({2, 2}))) == 2);
    CHECK(antipodal_class(build_multipartite(MultipartiteSpec({4, 4, 4, 4}))) == 4);
    CHECK(antipodal_class(complete(5)) == 5);
    CHECK_FALSE(antipodal_class(path(4)).has_value());
    CHECK_FALSE(antipodal_class(build_multipartite(MultipartiteSpec({3, 2}))).has_value());
    // Even cycles are 2-antipodal.
    Graph c6 = path(6);
    c6.add_edge(5, 0);
    CHECK(antipodal_class(c6) == 2);
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(antipodal_class(g), DisconnectedGraph);
}
