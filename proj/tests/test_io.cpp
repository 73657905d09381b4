#include <doctest.h>

#include "hedonic/errors.hpp"
#include "hedonic/fixtures.hpp"
#include "hedonic/io.hpp"
#include "test_support.hpp"

using namespace hedonic;

TEST_CASE("graph file parsing and exact decimal scaling") {
    auto parsed = io::parse_graph_text("3 2\n1 2 0.5\n2 3 1.25\n");
    CHECK(parsed.weight_scale == 100);
    CHECK(parsed.graph.weight(1, 2) == 50);
    CHECK(parsed.graph.weight(2, 3) == 125);

    // trailing zeros do not inflate the scale
    auto trimmed = io::parse_graph_text("2 1\n1 2 0.10\n");
    CHECK(trimmed.weight_scale == 10);
    CHECK(trimmed.graph.weight(1, 2) == 1);

    // default weight is 1; comments and blank lines are ignored
    auto plain = io::parse_graph_text("# comment\n\n2 1\n1 2   # inline\n");
    CHECK(plain.weight_scale == 1);
    CHECK(plain.graph.weight(1, 2) == 1);
}

TEST_CASE("graph file rejections") {
    CHECK_THROWS_AS(io::parse_graph_text(""), ParseError);                       // no header
    CHECK_THROWS_AS(io::parse_graph_text("2 2\n1 2\n"), ParseError);             // m mismatch
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 2 0\n"), ParseError);           // zero weight
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 2 0.0\n"), ParseError);         // zero weight
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 1\n"), ParseError);             // self loop
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 3\n"), ParseError);             // out of range
    CHECK_THROWS_AS(io::parse_graph_text("2 2\n1 2\n2 1\n"), ParseError);        // duplicate
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 2 -1\n"), ParseError);          // negative
    CHECK_THROWS_AS(io::parse_graph_text("2 1\n1 2 1 9\n"), ParseError);         // extra token
}

TEST_CASE("graph serialize/parse round trip") {
    // parse . serialize is idempotent and preserves exact edge values
    RngStream rng(1717);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 10));
        Graph g = testsupport::random_graph(rng, n, trial % 2 == 0 ? 1 : 37, 0.5);
        const std::int64_t scale = trial % 3 == 0 ? 1 : 100;
        auto first = io::parse_graph_text(io::serialize_graph(g, scale));
        auto second = io::parse_graph_text(io::serialize_graph(first.graph, first.weight_scale));
        CHECK(second.graph == first.graph);
        CHECK(second.weight_scale == first.weight_scale);
        // exact value preservation: w/scale == w'/scale' edge by edge
        REQUIRE(first.graph.edge_count() == g.edge_count());
        for (const Edge& e : g.edges())
            CHECK(e.w * first.weight_scale == first.graph.weight(e.u, e.v) * scale);
    }

    // a graph parsed from a file reparses identically
    GameInstance worst = fixtures::mnm_weighted_worst(Rational{1, 10});
    auto text = io::serialize_graph(worst.graph, worst.weight_scale);
    auto again = io::parse_graph_text(text);
    CHECK(again.graph == worst.graph);
    CHECK(again.weight_scale == worst.weight_scale);
    CHECK(io::serialize_graph(again.graph, again.weight_scale) == text);
}

TEST_CASE("committed fixture files match the generators") {
    auto fig1 = io::load_graph_file(std::string(HEDONIC_FIXTURES_DIR) + "/fig1.graph");
    CHECK(fig1.graph == fixtures::fig1());
    CHECK(fig1.weight_scale == 1);

    auto fig5 =
        io::load_graph_file(std::string(HEDONIC_FIXTURES_DIR) + "/fig5_empty_core.graph");
    CHECK(fig5.graph == fixtures::fig5_empty_core());

    auto worst =
        io::load_graph_file(std::string(HEDONIC_FIXTURES_DIR) + "/mnm_weighted_worst.graph");
    GameInstance expected = fixtures::mnm_weighted_worst(Rational{1, 10});
    CHECK(worst.graph == expected.graph);
    CHECK(worst.weight_scale == expected.weight_scale);
}

TEST_CASE("partition json round trip and validation") {
    Partition p(4, {{2, 1}, {4, 3}});
    auto text = io::serialize_partition_file(p);
    CHECK(io::parse_partition_json(4, text) == p);

    CHECK_THROWS_AS(io::parse_partition_json(4, "{"), ParseError);
    CHECK_THROWS_AS(io::parse_partition_json(4, "[1,2]"), ParseError);
    CHECK_THROWS_AS(io::parse_partition_json(4, R"({"blocks": [[1,2],[2,3,4]]})"),
                    ValidationError);
    CHECK_THROWS_AS(io::parse_partition_json(3, R"({"blocks": [[1,2]]})"), ValidationError);
}

TEST_CASE("welfare rational strings") {
    CHECK(io::welfare_rational(42, 10) == "21/5");
    CHECK(io::welfare_rational(14, 1) == "14");
    CHECK(io::welfare_rational(0, 10) == "0");
    CHECK(io::welfare_rational(120, 10) == "12");
}
