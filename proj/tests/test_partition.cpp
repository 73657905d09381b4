#include <doctest.h>

#include <stdexcept>

#include "hedonic/errors.hpp"
#include "hedonic/partition.hpp"
#include "test_support.hpp"

using namespace hedonic;

TEST_CASE("partition validates coverage and disjointness") {
    CHECK_THROWS_AS(Partition(3, {{1, 2}}), std::invalid_argument);          // 3 missing
    CHECK_THROWS_AS(Partition(3, {{1, 2}, {2, 3}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(Partition(3, {{1, 2, 3}, {}}), std::invalid_argument);   // empty block
    Partition p(3, {{3}, {2, 1}});
    CHECK(p.block_count() == 2);
    CHECK(p.block_of(2) == std::vector<Agent>{1, 2});
    CHECK(p.max_block_size() == 2);
}

TEST_CASE("break_off matches the definition") {
    // P = {{1,2,3}}, S = {1} -> {{1},{2,3}}
    Partition p1(3, {{1, 2, 3}});
    CHECK(p1.break_off({1}).canonical_form() == "1|2,3");
    // P = {{1,2},{3,4}}, S = {2,3} -> {{2,3},{1},{4}}
    Partition p2(4, {{1, 2}, {3, 4}});
    CHECK(p2.break_off({2, 3}).canonical_form() == "1|2,3|4");
    // merge case: P = {{1},{2}}, S = {1,2} -> {{1,2}}
    Partition p3 = Partition::singletons(2);
    CHECK(p3.break_off({1, 2}).canonical_form() == "1,2");
}

TEST_CASE("break_off keeps the broken-off set together") {
    RngStream rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 9));
        // random partition via random assignment
        std::vector<std::vector<Agent>> blocks(static_cast<std::size_t>(n));
        for (Agent v = 1; v <= n; ++v)
            blocks[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))].push_back(v);
        blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                    [](const auto& b) { return b.empty(); }),
                     blocks.end());
        Partition p(n, blocks);
        // random non-empty coalition
        std::vector<Agent> s;
        for (Agent v = 1; v <= n; ++v)
            if (rng.bernoulli(0.4)) s.push_back(v);
        if (s.empty()) s.push_back(1);
        Partition q = p.break_off(s);
        for (Agent v : s) CHECK(q.block_of(v) == s);
        CHECK(q.agent_count() == n);
    }
}

TEST_CASE("canonical form is order independent and injective") {
    Partition a(3, {{2, 1}, {3}});
    Partition b(3, {{3}, {1, 2}});
    CHECK(a.canonical_form() == b.canonical_form());
    CHECK(Partition(2, {{1}, {2}}).canonical_form() !=
          Partition(2, {{1, 2}}).canonical_form());
    // round trip
    Partition p(12, {{10, 2}, {1, 12}, {3, 4, 5}, {6}, {7, 8, 9, 11}});
    CHECK(Partition::from_canonical(12, p.canonical_form()) == p);
}

TEST_CASE("validate_for enforces the k bound") {
    Graph g = testsupport::complete_graph(4);
    GameInstance game(g, 3);
    Partition ok(4, {{1, 2, 3}, {4}});
    CHECK_NOTHROW(ok.validate_for(game));
    Partition bad(4, {{1, 2, 3, 4}});
    CHECK_THROWS_AS(bad.validate_for(game), ValidationError);
    Partition wrong_n(3, {{1, 2, 3}});
    CHECK_THROWS_AS(wrong_n.validate_for(game), ValidationError);
}
