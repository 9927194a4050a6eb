#include "doctest.h"

#include <random>

#include "eccspec/errors.hpp"
#include "eccspec/io.hpp"
#include "test_support.hpp"

using namespace eccspec;
using eccspec::testing::path;
using eccspec::testing::random_graph;

TEST_CASE("format_number")
{
    CHECK(format_number(9.291502622129181) == "9.29150262213");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1e-15) == "0");
    CHECK(format_number(-2) == "-2");
    CHECK(format_number(48) == "48");
}

TEST_CASE("parse_edge_list")
{
    Graph c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    Graph k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2 == complete(2));

    CHECK(parse_edge_list("3 3\n0 1\n1 0\n1 2\n").edge_count() == 2);
    CHECK(parse_edge_list("1 0\n").order() == 1);

    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_edge_list("3 1\n-1 2"), VertexOutOfRange);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1"), SelfLoop);
    CHECK_THROWS_AS(parse_edge_list(""), MalformedHeader);
    CHECK_THROWS_AS(parse_edge_list("x 1\n0 1"), MalformedHeader);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1"), MalformedHeader);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), MalformedHeader);
    CHECK_THROWS_AS(parse_edge_list("0 0"), MalformedHeader);

    Graph p = path(6);
    CHECK(parse_edge_list(emit_edge_list(p)) == p);
}

TEST_CASE("parse_graph6")
{
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(star.adjacent(v, 4));
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("A?").edge_count() == 0);
    CHECK(parse_graph6(">>graph6<<A_\n") == complete(2));
    CHECK(emit_graph6(build_multipartite(MultipartiteSpec({2, 2}))) == "C]");

    CHECK_THROWS_AS(parse_graph6("D? "), InvalidByte);
    CHECK_THROWS_AS(parse_graph6("D\x7f"), InvalidByte);
    CHECK_THROWS_AS(parse_graph6("D?"), TruncatedPayload);
    CHECK_THROWS_AS(parse_graph6(""), TruncatedPayload);
    CHECK_THROWS_AS(parse_graph6("~?"), TruncatedPayload);

    SUBCASE("extended size field")
    {
        Graph p70 = path(70);
        const auto text = emit_graph6(p70);
        CHECK(text.substr(0, 10) == "~?@EhCGGC@");
        CHECK(parse_graph6(text) == p70);
    }
}

TEST_CASE("graph6 round trip")
{
    // Exhaustive up to five vertices.
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            std::size_t k = 0;
            for (Vertex v = 1; v < n; ++v)
                for (Vertex u = 0; u < v; ++u, ++k)
                    if (mask >> k & 1u) g.add_edge(u, v);
            REQUIRE(parse_graph6(emit_graph6(g)) == g);
        }
    }
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = random_graph(6 + static_cast<std::size_t>(trial % 3), 0.5, rng);
        REQUIRE(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("parse_parts")
{
    CHECK(parse_parts("1,3").parts() == std::vector<int>{3, 1});
    CHECK(parse_parts(" 2, 2 ,1").to_string() == "2,2,1");
    CHECK_THROWS_AS(parse_parts("2,,1"), ParseError);
    CHECK_THROWS_AS(parse_parts("a"), ParseError);
    CHECK_THROWS_AS(parse_parts("0,3"), InvalidSpec);
}

TEST_CASE("generator expressions")
{
    CHECK(build_generator(parse_generator("K(2,2)")) == build_multipartite(MultipartiteSpec({2, 2})));
    CHECK(build_generator(parse_generator("star(5)")) == star(5));
    CHECK(build_generator(parse_generator("complete(4)")) == complete(4));
    CHECK(build_generator(parse_generator("split(2, 3)")) == complete_split(2, 3));
    CHECK(build_generator(parse_generator("strong(K(2,2),complete(2))")).order() == 8);
    CHECK(build_generator(parse_generator("complement(complete(3))")).edge_count() == 0);

    CHECK(print_generator(parse_generator(" K( 1 , 3 ) ")) == "K(3,1)");

    for (const char* text : {"K(3,1)", "star(4)", "complete(6)", "split(2,2)", "strong(K(2,2),complete(2))",
                             "complement(strong(star(3),split(3,1)))"}) {
        auto e = parse_generator(text);
        CHECK(print_generator(e) == text);
        CHECK(parse_generator(print_generator(e)) == e);
    }

    CHECK_THROWS_AS(parse_generator("K(2,2"), ParseError);
    CHECK_THROWS_AS(parse_generator("cube(3)"), ParseError);
    CHECK_THROWS_AS(parse_generator("K(2) x"), ParseError);
    CHECK_THROWS_AS(parse_generator("split(2)"), ParseError);
}
