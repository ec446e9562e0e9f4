#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "polyrec/oracle.hpp"

using namespace polyrec;
using namespace oracles;

namespace {

void expect_exact_pair(const ReconstructionOutcome& out, const Graph& g) {
    REQUIRE(out.status == RecStatus::Success);
    CHECK(out.phi.coeffs == charpoly(g).coeffs);
    CHECK(out.phibar.coeffs == charpoly(g.complement()).coeffs);
}

}  // namespace

TEST_CASE("reconstruct_full: examples") {
    // P4 with co-cards truncated to ceil((4+4)/2) = 4
    Graph p4 = path_graph(4);
    expect_exact_pair(reconstruct_full(make_deck(p4, true, 4)), p4);

    Graph s4 = star_graph(4);
    auto out = reconstruct_full(make_deck(s4, true, 4));
    expect_exact_pair(out, s4);
    // complement of the star is K3 plus an isolated vertex
    CHECK(out.phibar.coeffs == std::vector<Int>{1, 0, -3, -2, 0});

    Graph e3 = empty_graph(3);
    out = reconstruct_full(make_deck(e3, true));
    expect_exact_pair(out, e3);
    CHECK(out.phibar.coeffs == charpoly(complete_graph(3)).coeffs);
}

TEST_CASE("reconstruct_general on full generalized decks") {
    Graph k3 = complete_graph(3);
    auto out = reconstruct_general(make_deck(k3, true));
    expect_exact_pair(out, k3);
    CHECK(out.phi.coeffs == std::vector<Int>{1, 0, -3, -2});
    CHECK(out.phibar.coeffs == std::vector<Int>{1, 0, 0, 0});
}

TEST_CASE("reconstruct_general: 2K2 rank test fails at threshold 2") {
    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    Deck d = make_deck(two_k2, true);  // s = 4 (full co-cards)
    truncate_deck_cards(d, 3);         // t = 3 => threshold n+1-t = 2
    auto out = reconstruct_general(d);
    REQUIRE(out.status == RecStatus::RankTooLow);
    CHECK(out.threshold == 2);
}

TEST_CASE("reconstruct_general with asymmetric truncations (s=5, t=6, n=6)") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = random_graph(6, 0.5, 1000 + seed);
        Deck d = make_deck(g, true, 5);
        auto out = reconstruct_general(d);
        if (rank_q(walk_matrix(g)) >= 1) expect_exact_pair(out, g);
    }
}

TEST_CASE("reconstruct_general detects corrupted decks") {
    Graph g = path_graph(5);
    Deck d = make_deck(g, true, 5);
    d.cards[2][3] += 2;
    CHECK_THROWS(reconstruct_general(d));
}

TEST_CASE("reconstruct_controllable: examples") {
    // P4: rank 2 >= floor(3/3) = 1
    expect_exact_pair(reconstruct_controllable(make_deck(path_graph(4), true)), path_graph(4));
    // K4: rank 1 >= 1
    expect_exact_pair(reconstruct_controllable(make_deck(complete_graph(4), true)), complete_graph(4));
    // C6: rank 1 >= floor(5/3) = 1
    expect_exact_pair(reconstruct_controllable(make_deck(cycle_graph(6), true)), cycle_graph(6));
    // 2K2: rank 1 >= 1
    Graph two_k2 = disjoint_union(path_graph(2), path_graph(2));
    expect_exact_pair(reconstruct_controllable(make_deck(two_k2, true)), two_k2);
    // S7: rank 2 >= floor(6/3) = 2
    expect_exact_pair(reconstruct_controllable(make_deck(star_graph(7), true)), star_graph(7));
    // K7: rank 1 < 2
    auto out = reconstruct_controllable(make_deck(complete_graph(7), true));
    REQUIRE(out.status == RecStatus::RankTooLow);
    CHECK(out.threshold == 2);
}

TEST_CASE("round-trips on every graph up to n = 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : enumerate_unlabeled(n)) {
            expect_exact_pair(reconstruct_full(make_deck(g, true, (n + 5) / 2)), g);

            auto out = reconstruct_controllable(make_deck(g, true));
            const int threshold = (n - 1) / 3;
            if (rank_q(walk_matrix(g)) >= threshold)
                expect_exact_pair(out, g);
            else
                CHECK(out.status == RecStatus::RankTooLow);
        }
    }
}

TEST_CASE("count_c4_from_deck: examples") {
    CHECK(count_c4_from_deck(make_deck(cycle_graph(5))) == 0);
    CHECK(count_c4_from_deck(make_deck(complete_graph(5))) == 15);
    CHECK_THROWS_AS(count_c4_from_deck(make_deck(cycle_graph(4))), not_applicable_error);
}

TEST_CASE("count_c4_from_deck equals direct enumeration, n = 5, 6") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_unlabeled(n)) {
            Int expect = brute_c4_count(g);
            CHECK(count_c4_from_deck(make_deck(g)) == expect);
            CHECK(count_c4_direct(g) == expect);
        }
    }
}

TEST_CASE("reconstruct_c4free_lowrank: examples") {
    // star S6: C4-free, rank 2
    Graph s6 = star_graph(6);
    auto out = reconstruct_c4free_lowrank(make_deck(s6));
    expect_exact_pair(out, s6);
    CHECK(out.phi.coeffs == std::vector<Int>{1, 0, -5, 0, 0, 0, 0});

    // C5: C4-free, 2-regular so rank 1
    Graph c5 = cycle_graph(5);
    out = reconstruct_c4free_lowrank(make_deck(c5));
    expect_exact_pair(out, c5);
    CHECK(out.phi.coeffs == charpoly(c5).coeffs);  // x^5 - 5x^3 + 5x - 2 by the oracle

    // K_{3,3} contains 4-cycles
    out = reconstruct_c4free_lowrank(make_deck(complete_bipartite(3, 3)));
    REQUIRE(out.status == RecStatus::NotApplicable);
    CHECK(out.reason == "has C4");

    // P5 is C4-free but its walk matrix has rank 3
    out = reconstruct_c4free_lowrank(make_deck(path_graph(5)));
    REQUIRE(out.status == RecStatus::NotApplicable);
    CHECK(out.reason == "rank > 2");

    // small orders are out of the theorem's reach
    out = reconstruct_c4free_lowrank(make_deck(cycle_graph(4)));
    REQUIRE(out.status == RecStatus::NotApplicable);
}

TEST_CASE("c4free reconstruction sweeps stars, cycles and unions up to n = 9") {
    for (int n = 5; n <= 9; ++n) expect_exact_pair(reconstruct_c4free_lowrank(make_deck(star_graph(n))), star_graph(n));
    for (int n : {5, 6, 7, 9}) expect_exact_pair(reconstruct_c4free_lowrank(make_deck(cycle_graph(n))), cycle_graph(n));
    Graph two_c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
    expect_exact_pair(reconstruct_c4free_lowrank(make_deck(two_c3)), two_c3);
    Graph three_c3 = disjoint_union(two_c3, cycle_graph(3));
    expect_exact_pair(reconstruct_c4free_lowrank(make_deck(three_c3)), three_c3);
}

TEST_CASE("c4free verdicts agree with direct computation on all graphs, n = 5, 6") {
    for (int n = 5; n <= 6; ++n) {
        for (const Graph& g : enumerate_unlabeled(n)) {
            auto out = reconstruct_c4free_lowrank(make_deck(g));
            if (brute_c4_count(g) > 0) {
                CHECK(out.status == RecStatus::NotApplicable);
            } else if (rank_q(walk_matrix(g)) > 2) {
                REQUIRE(out.status == RecStatus::NotApplicable);
                CHECK(out.reason == "rank > 2");
            } else {
                expect_exact_pair(out, g);
            }
        }
    }
}

TEST_CASE("deck JSON round-trip keeps outcomes byte-identical") {
    Graph g = star_graph(4);
    Deck d = make_deck(g, true, 4);
    auto out1 = reconstruct_full(d);
    expect_exact_pair(out1, g);
}
