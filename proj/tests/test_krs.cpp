#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "krsdet/krs.hpp"

using namespace krsdet;

TEST_CASE("deletion") {
    SUBCASE("figure step") {
        auto r = delete_at(Tableau({{1, 2, 3, 6}, {4, 5}}, 6), 2);
        CHECK(r.tableau == Tableau({{1, 2, 5, 6}, {4}}, 6));
        CHECK(r.bumped == 3);
    }
    SUBCASE("single row removes the last entry") {
        auto r = delete_at(Tableau({{1, 4}}, 4), 1);
        CHECK(r.tableau == Tableau({{1}}, 4));
        CHECK(r.bumped == 4);
    }
    SUBCASE("equal entries bump through") {
        auto r = delete_at(Tableau({{1, 2}, {1, 2}}, 2), 2);
        CHECK(r.tableau == Tableau({{1, 2}, {1}}, 2));
        CHECK(r.bumped == 2);
    }
    SUBCASE("rejects bad inputs") {
        CHECK_THROWS(delete_at(Tableau({{2, 1}}, 2), 1));        // not standard
        CHECK_THROWS(delete_at(Tableau({{1, 2}, {1, 2}}, 2), 1));  // no corner at row 1
    }
}

TEST_CASE("insertion") {
    SUBCASE("figure step inverse") {
        auto [t, p] = insert(Tableau({{1, 2, 5, 6}, {4}}, 6), 3);
        CHECK(t == Tableau({{1, 2, 3, 6}, {4, 5}}, 6));
        CHECK(p == 2);
    }
    SUBCASE("append") {
        auto [t, p] = insert(Tableau({{1}}, 4), 4);
        CHECK(t == Tableau({{1, 4}}, 4));
        CHECK(p == 1);
    }
    SUBCASE("equal value bumps") {
        auto [t, p] = insert(Tableau({{1}}, 1), 1);
        CHECK(t == Tableau({{1}, {1}}, 1));
        CHECK(p == 2);
    }
    SUBCASE("rejects non-standard input") {
        CHECK_THROWS(insert(Tableau({{2, 1}}, 2), 1));
    }
}

TEST_CASE("insert and delete are mutually inverse") {
    // over every standard tableau with entries <= 3 and at most 5 boxes
    for (int d = 1; d <= 5; ++d)
        for (const auto& sh : partitions_of(d, 5))
            for (const auto& t : standard_tableaux(sh, 3)) {
                for (int x = 1; x <= 3; ++x) {
                    auto [grown, p] = insert(t, x);
                    auto back = delete_at(grown, p);
                    CHECK(back.tableau == t);
                    CHECK(back.bumped == x);
                }
                const auto& parts = sh.parts();
                for (std::size_t row = 0; row < parts.size(); ++row) {
                    bool corner = row + 1 == parts.size() || parts[row] > parts[row + 1];
                    if (!corner) continue;
                    auto del = delete_at(t, static_cast<int>(row) + 1);
                    auto [restored, p] = insert(del.tableau, del.bumped);
                    CHECK(restored == t);
                    CHECK(p == static_cast<int>(row) + 1);
                }
            }
}

TEST_CASE("krs on the worked bitableau") {
    Bitableau fig(Tableau({{1, 3, 4, 5}, {2, 6}}, 6), Tableau({{1, 2, 3, 6}, {4, 5}}, 6));
    TwoLineArray arr = krs(fig);
    CHECK(arr.top == std::vector<int>({1, 2, 3, 4, 5, 6}));
    CHECK(arr.bottom == std::vector<int>({4, 1, 2, 5, 6, 3}));
    CHECK(krs_inverse(arr, 6, 6) == fig);
}

TEST_CASE("krs of a single minor is its diagonal") {
    Bitableau minor({Minor({1, 3, 5}, {2, 4, 6})}, 6, 6);
    TwoLineArray arr = krs(minor);
    CHECK(arr.top == std::vector<int>({1, 3, 5}));
    CHECK(arr.bottom == std::vector<int>({2, 4, 6}));
}

TEST_CASE("krs of the empty bitableau") {
    TwoLineArray arr = krs(Bitableau({}, 3, 3));
    CHECK(arr.size() == 0);
}

TEST_CASE("krs rejects non-standard bitableaux") {
    Bitableau bad({Minor({2}, {1}), Minor({1}, {2})}, 2, 2);
    CHECK_THROWS(krs(bad));
}

TEST_CASE("krs_inverse basics") {
    Bitableau one = krs_inverse(TwoLineArray({1}, {1}), 1, 1);
    CHECK(one == Bitableau({Minor({1}, {1})}, 1, 1));

    Bitableau column = krs_inverse(TwoLineArray({1, 1}, {1, 1}), 1, 1);
    CHECK(column == Bitableau({Minor({1}, {1}), Minor({1}, {1})}, 1, 1));
}

TEST_CASE("ins") {
    CHECK(ins({4, 1, 2, 5, 6, 3}).shape() == Shape({4, 2}));
    CHECK(ins({4, 1, 2, 5, 6, 3}) == Tableau({{1, 2, 3, 6}, {4, 5}}, 0));
    CHECK(ins({1, 2, 3, 4}).shape() == Shape({4}));
    CHECK(ins({3, 1, 2, 4, 5, 3}).shape() == Shape({4, 2}));
}

TEST_CASE("canonical sequence") {
    CHECK(canonical_sequence(Tableau({{1, 2}, {3}}, 3)) == std::vector<int>({3, 1, 2}));
    CHECK(canonical_sequence(Tableau({{1, 3, 4, 5}, {2, 6}}, 6)) ==
          std::vector<int>({2, 6, 1, 3, 4, 5}));
    CHECK(canonical_sequence(Tableau({{1, 2, 3}}, 3)) == std::vector<int>({1, 2, 3}));
    // Ins of the canonical sequence recovers the tableau
    for (int d = 1; d <= 5; ++d)
        for (const auto& sh : partitions_of(d, 5))
            for (const auto& t : standard_tableaux(sh, 3))
                CHECK(ins(canonical_sequence(t)) == Tableau(t.rows(), 0));
}

TEST_CASE("knuth neighbors") {
    CHECK(knuth_neighbors({1, 3, 2}) == std::set<std::vector<int>>({{3, 1, 2}}));
    CHECK(knuth_neighbors({1, 2, 3}).empty());
    // (2,1,2) is the right-hand side of a type-(2) relation with z=1, y=2,
    // w=2, so its unique neighbor is (1,2,2); insertion confirms it
    CHECK(knuth_neighbors({2, 1, 2}) == std::set<std::vector<int>>({{1, 2, 2}}));
    CHECK(ins({2, 1, 2}) == ins({1, 2, 2}));
}

TEST_CASE("knuth equivalence") {
    CHECK(knuth_equivalent({3, 1, 2}, {1, 3, 2}));
    CHECK_FALSE(knuth_equivalent({1, 2}, {2, 1}));
    CHECK(knuth_equivalent({2, 1, 2}, {2, 1, 2}));
    CHECK_THROWS(knuth_equivalent(std::vector<int>(9, 1), std::vector<int>(9, 1)));
}

TEST_CASE("random roundtrips on a 4x5 matrix") {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> ri(1, 4), rj(1, 5), rd(0, 8);
    for (int trial = 0; trial < 500; ++trial) {
        PositionMonomial mon(4, 5);
        int d = rd(rng);
        for (int i = 0; i < d; ++i) mon.multiply_position(ri(rng), rj(rng));
        Bitableau bt = krs_inverse(mon);
        REQUIRE(is_standard(bt));
        REQUIRE(krs_monomial(bt) == mon);
        // the right tableau is the insertion tableau of the bottom row
        CHECK(Tableau(bt.right().rows(), 0) == ins(monomial_to_array(mon).bottom));
    }
}
