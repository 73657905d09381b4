#include <doctest.h>

#include <set>

#include "hedonic/errors.hpp"
#include "hedonic/mnm.hpp"
#include "hedonic/oracle.hpp"
#include "test_support.hpp"

using namespace hedonic;
using testsupport::complete_graph;
using testsupport::fig1_graph;
using testsupport::fig5_graph;

TEST_CASE("partition enumeration counts match the restricted Bell recurrence") {
    CHECK_THROWS_AS(enumerate_partitions(15, 3), GuardError);
    CHECK_NOTHROW(enumerate_partitions(15, 3, true));

    for (int n = 1; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            PartitionEnumerator it(n, k);
            std::uint64_t count = 0;
            std::set<std::string> seen;
            while (it.advance()) {
                ++count;
                Partition p = it.current();
                CHECK(p.max_block_size() <= k);
                seen.insert(p.canonical_form());
            }
            CHECK(count == testsupport::restricted_bell(n, k));
            CHECK(seen.size() == count);  // duplicate-free
        }
    }
    // spec-pinned counts
    PartitionEnumerator five(3, 3);
    int c = 0;
    while (five.advance()) ++c;
    CHECK(c == 5);
    PartitionEnumerator one(3, 1);
    c = 0;
    while (one.advance()) ++c;
    CHECK(c == 1);
    CHECK(testsupport::restricted_bell(9, 3) == 12644);
}

TEST_CASE("opt_max_util on pinned instances") {
    GameInstance fig1(fig1_graph(), 3);
    auto [p, welfare] = opt_max_util(fig1);
    CHECK(welfare == 14);
    CHECK(social_welfare(fig1, p) == 14);

    for (int k : {3, 4}) {
        GameInstance game(complete_graph(2 * k), k);
        auto [opt, w] = opt_max_util(game);
        CHECK(w == 2 * k * (k - 1));
        CHECK(opt.block_count() == 2);
    }

    GameInstance empty(Graph(6, {}), 3);
    CHECK(opt_max_util(empty).second == 0);
}

TEST_CASE("opt_max_util dominates every enumerated partition") {
    RngStream rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 8));
        const int k = static_cast<int>(rng.uniform_int(2, 4));
        Graph g = testsupport::random_graph(rng, n, 5);
        GameInstance game(g, k);
        auto [opt, w] = opt_max_util(game);
        CHECK(social_welfare(game, opt) == w);
        PartitionEnumerator it(n, k);
        while (it.advance()) CHECK(social_welfare(game, it.current()) <= w);
    }
}

TEST_CASE("core emptiness: fig5 is empty, triangle is not") {
    GameInstance fig5(fig5_graph(), 3);
    auto cert = core_emptiness(fig5);
    CHECK(cert.empty);
    CHECK(!cert.blocked_samples.empty());
    for (const auto& [p, w] : cert.blocked_samples) CHECK(witness_valid(fig5, p, w));

    GameInstance tri(complete_graph(3), 3);
    auto ok = core_emptiness(tri);
    CHECK(!ok.empty);
    REQUIRE(ok.witness.has_value());
    CHECK(ok.witness->canonical_form() == "1,2,3");
    CHECK(verify_membership(tri, *ok.witness, ConceptQuery::core()).member);
}

TEST_CASE("unweighted 3-bounded cores are never empty at small n") {
    RngStream rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 8));
        Graph g = testsupport::random_graph(rng, n, 1);
        GameInstance game(g, 3);
        auto cert = core_emptiness(game);
        CHECK(!cert.empty);
        REQUIRE(cert.witness.has_value());
        CHECK(verify_membership(game, *cert.witness, ConceptQuery::core()).member);
    }
}

TEST_CASE("pruned emptiness search agrees with plain enumeration") {
    RngStream rng(555);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 7));
        const int k = static_cast<int>(rng.uniform_int(2, 4));
        const Weight wmax = trial % 2 == 0 ? 1 : 7;
        Graph g = testsupport::random_graph(rng, n, wmax, 0.6);
        GameInstance game(g, k);

        // plain enumeration verdicts
        bool core_nonempty = false, sc_nonempty = false;
        PartitionEnumerator it(n, k);
        while (it.advance()) {
            Partition p = it.current();
            if (!core_nonempty && verify_membership(game, p, ConceptQuery::core()).member)
                core_nonempty = true;
            if (!sc_nonempty && verify_membership(game, p, ConceptQuery::strict_core()).member)
                sc_nonempty = true;
            if (core_nonempty && sc_nonempty) break;
        }
        CHECK(core_emptiness(game).empty == !core_nonempty);
        CHECK(sc_emptiness(game).empty == !sc_nonempty);
    }
}

TEST_CASE("strict core emptiness on cliques of size k+1") {
    // K_{k+1} with cap k: someone is always in a short coalition, and a
    // k-subset through her weakly blocks.
    for (int k : {2, 3}) {
        GameInstance game(complete_graph(k + 1), k);
        CHECK(sc_emptiness(game).empty);
    }
    // two disjoint triangles, k=3: the triangles themselves are strict-core
    Graph two_tris = Graph::unweighted(
        6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    GameInstance game(two_tris, 3);
    auto cert = sc_emptiness(game);
    CHECK(!cert.empty);
    CHECK(cert.witness->canonical_form() == "1,2,3|4,5,6");
    // single edge, k=2
    GameInstance edge(Graph::unweighted(2, {{1, 2}}), 2);
    CHECK(!sc_emptiness(edge).empty);
}

TEST_CASE("verify_membership pinned examples") {
    GameInstance fig1(fig1_graph(), 3);
    Partition opt(8, {{1, 3, 6}, {2, 4, 7}, {5, 8}});
    CHECK(verify_membership(fig1, opt, ConceptQuery::nash()).member);

    Partition singles = Partition::singletons(8);
    auto res = verify_membership(fig1, singles, ConceptQuery::core());
    CHECK(!res.member);
    REQUIRE(res.blocking.has_value());
    CHECK(witness_valid(fig1, singles, *res.blocking));

    // core membership implies eps_a membership for every eps_a >= 0
    RngStream rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 7));
        Graph g = testsupport::random_graph(rng, n, 1);
        GameInstance game(g, 3);
        auto cert = core_emptiness(game);
        REQUIRE(cert.witness.has_value());
        for (int eps = 0; eps <= 3; ++eps)
            CHECK(verify_membership(game, *cert.witness,
                                    ConceptQuery::eps_a(Rational{eps, 1}))
                      .member);
    }
}

TEST_CASE("verify_membership guard") {
    GameInstance big(Graph(31, {}), 5);
    CHECK_THROWS_AS(verify_membership(big, Partition::singletons(31), ConceptQuery::core()),
                    GuardError);
    CHECK_NOTHROW(
        verify_membership(big, Partition::singletons(31), ConceptQuery::core(), true));
}

TEST_CASE("kn_matching_partition: disjointness, coverage and size profile") {
    CHECK_THROWS_AS(kn_matching_partition(2), std::domain_error);
    for (int n = 3; n <= 12; ++n) {
        auto classes = kn_matching_partition(n);
        REQUIRE(classes.size() == static_cast<std::size_t>(n));
        Graph kn = complete_graph(n);
        std::set<std::pair<Agent, Agent>> covered;
        std::vector<std::size_t> sizes;
        for (const auto& m : classes) {
            CHECK(m.valid_for(kn));  // matching property + host edges
            for (auto e : m.edges) {
                CHECK(!covered.count(e));  // pairwise edge-disjoint
                covered.insert(e);
            }
            sizes.push_back(m.size());
        }
        CHECK(covered.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        if (n % 2 == 1) {
            for (auto s : sizes) CHECK(s == static_cast<std::size_t>((n - 1) / 2));
        } else {
            const auto big = static_cast<std::size_t>(n / 2);
            const auto small = static_cast<std::size_t>((n - 2) / 2);
            CHECK(std::count(sizes.begin(), sizes.end(), big) == n / 2);
            CHECK(std::count(sizes.begin(), sizes.end(), small) == n / 2);
        }
    }
    // pinned size profiles
    auto seven = kn_matching_partition(7);
    for (const auto& m : seven) CHECK(m.size() == 3);
    auto eight = kn_matching_partition(8);
    std::multiset<std::size_t> profile;
    for (const auto& m : eight) profile.insert(m.size());
    CHECK(profile == std::multiset<std::size_t>{3, 3, 3, 3, 4, 4, 4, 4});
    auto three = kn_matching_partition(3);
    for (const auto& m : three) CHECK(m.size() == 1);
}

TEST_CASE("enumeration counts hold at n = 12 as well") {
    for (int k : {3, 5}) {
        PartitionEnumerator it(12, k);
        std::uint64_t count = 0;
        while (it.advance()) ++count;
        CHECK(count == testsupport::restricted_bell(12, k));
    }
}
