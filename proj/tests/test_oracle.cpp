#include <doctest.h>

#include "chronomine/errors.hpp"
#include "chronomine/generator.hpp"
#include "chronomine/oracle.hpp"
#include "fixtures.hpp"

using namespace chronomine;

TEST_CASE("brute connected on graph A") {
    const auto records = oracle::brute_closed_connected(fixtures::graph_a(), ConnectivityKind::weak);
    REQUIRE(records.size() == 3);
    CHECK(records[0].vertices == VertexSet{1, 2});
    CHECK(records[0].gamma == std::vector<Interval>{{1, 2}});
    CHECK(records[1].vertices == VertexSet{1, 2, 3});
    CHECK(records[1].gamma == std::vector<Interval>{{2, 2}});
    CHECK(records[2].vertices == VertexSet{2, 3});
    CHECK(records[2].gamma == std::vector<Interval>{{2, 3}});
}

TEST_CASE("brute connected trivial cases") {
    const auto empty = TemporalGraph::parse("# vertices 3\n# tmax 2\n");
    CHECK(oracle::brute_closed_connected(empty, ConnectivityKind::weak).empty());

    const auto k4 = TemporalGraph::parse("1 2 1 5\n1 3 1 5\n1 4 1 5\n2 3 1 5\n2 4 1 5\n3 4 1 5\n");
    for (auto kind : {ConnectivityKind::weak, ConnectivityKind::two_edge, ConnectivityKind::two_vertex}) {
        const auto records = oracle::brute_closed_connected(k4, kind);
        REQUIRE(records.size() == 1);
        CHECK(records[0].vertices == VertexSet{1, 2, 3, 4});
        CHECK(records[0].gamma == std::vector<Interval>{{1, 5}});
    }
}

TEST_CASE("oracle caps") {
    const auto big = generate_graph(GenParams{15, 10, 4, 1, 0.0, false});
    CHECK_THROWS_AS(oracle::brute_closed_connected(big, ConnectivityKind::weak), UsageError);
    CHECK_THROWS_AS(oracle::brute_closed_cliques(big), UsageError);
    CHECK_NOTHROW(oracle::simple_clique_enum(big));
}

TEST_CASE("connectivity by definition") {
    const auto path = TemporalGraph::parse("1 2 1 1\n2 3 1 1\n");
    CHECK(oracle::connected_by_definition(path, {1, 2, 3}, 1, ConnectivityKind::weak));
    CHECK_FALSE(oracle::connected_by_definition(path, {1, 2, 3}, 1, ConnectivityKind::two_edge));
    CHECK_FALSE(oracle::connected_by_definition(path, {1, 2, 3}, 1, ConnectivityKind::two_vertex));
    CHECK(oracle::connected_by_definition(path, {1, 2}, 1, ConnectivityKind::two_vertex));
    CHECK_FALSE(oracle::connected_by_definition(path, {1, 3}, 1, ConnectivityKind::two_vertex));
    const auto cycle = TemporalGraph::parse("# directed\n1 2 1 1\n2 3 1 1\n3 1 1 1\n");
    CHECK(oracle::connected_by_definition(cycle, {1, 2, 3}, 1, ConnectivityKind::strong));
    CHECK_FALSE(oracle::connected_by_definition(cycle, {1, 2}, 1, ConnectivityKind::strong));
}

TEST_CASE("brute cliques") {
    const auto t = fixtures::triangle();
    const auto closed = oracle::brute_closed_cliques(t);
    REQUIRE(closed.size() == 2);
    CHECK(closed[0].edges == std::vector<EdgeId>{0});
    CHECK(closed[0].tau == Interval{1, 6});
    CHECK(closed[1].edges == std::vector<EdgeId>{0, 1, 2});
    CHECK(closed[1].tau == Interval{1, 4});
    CHECK(oracle::brute_active_cliques(t).size() == 4);

    const auto same = TemporalGraph::parse("1 2 1 5\n1 3 1 5\n2 3 1 5\n");
    const auto only = oracle::brute_closed_cliques(same);
    REQUIRE(only.size() == 1);
    CHECK(only[0].edges.size() == 3);

    const auto apart = TemporalGraph::parse("1 2 1 3\n3 4 2 5\n");
    CHECK(oracle::brute_closed_cliques(apart).size() == 2);
}

TEST_CASE("simple enumeration matches brute force") {
    CHECK(oracle::keys(oracle::simple_clique_enum(fixtures::triangle())) ==
          oracle::keys(oracle::brute_closed_cliques(fixtures::triangle())));
    const auto disjoint_times = TemporalGraph::parse("1 2 1 1\n2 3 2 2\n1 3 3 3\n");
    CHECK(oracle::simple_clique_enum(disjoint_times).size() == 3);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = generate_graph(random_family_params(seed));
        CHECK(oracle::compare(oracle::keys(oracle::brute_closed_cliques(g)),
                              oracle::keys(oracle::simple_clique_enum(g)))
                  .ok());
    }
}

TEST_CASE("lexicographic minimum closure") {
    const auto t = fixtures::triangle();
    CHECK(oracle::brute_lex_min_closure(t, make_clique(t, {1})).edges == std::vector<EdgeId>{0, 1, 2});
    CHECK(oracle::brute_lex_min_closure(t, make_clique(t, {0})).edges == std::vector<EdgeId>{0});
}

TEST_CASE("the window family can be smaller than the closed family") {
    // {1,2} is connected at 1 and 3 only; every superset has a different gamma,
    // yet no single window has {1,2} as a maximal connected subset
    const auto g = TemporalGraph::load(fixtures::dir() / "gamma_gap.txt");
    const auto by_window = oracle::brute_closed_connected(g, ConnectivityKind::weak);
    const auto by_definition = oracle::brute_closed_by_definition(g, ConnectivityKind::weak);
    const VertexSet pair{1, 2};
    CHECK(std::find(by_definition.begin(), by_definition.end(), pair) != by_definition.end());
    bool in_family = false;
    for (const auto& r : by_window) in_family = in_family || r.vertices == pair;
    CHECK_FALSE(in_family);
    for (const auto& r : by_window) {
        CHECK(std::find(by_definition.begin(), by_definition.end(), r.vertices) != by_definition.end());
    }
}

TEST_CASE("compare reports differences") {
    const auto r = oracle::compare({"a", "b", "c"}, {"c", "a", "d"});
    CHECK_FALSE(r.ok());
    CHECK(r.missing == std::vector<std::string>{"b"});
    CHECK(r.unexpected == std::vector<std::string>{"d"});
    CHECK(r.first_mismatch() == "missing: b");
    CHECK(oracle::compare({"x"}, {"x"}).ok());
    CHECK_FALSE(oracle::compare({"x"}, {"x", "x"}).ok());
}
