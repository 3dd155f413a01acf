#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krsdet/paths.hpp"

using namespace krsdet;

TEST_CASE("grid orders") {
    CHECK(grid_leq({1, 3}, {2, 1}));
    CHECK_FALSE(grid_leq({1, 1}, {2, 2}));
    CHECK(grid_prec({1, 1}, {2, 2}));
    CHECK_FALSE(grid_prec({1, 2}, {2, 2}));
}

TEST_CASE("faces") {
    CHECK(is_face({}, 3, 3, 2));
    CHECK_FALSE(is_face({{1, 1}, {2, 2}}, 3, 3, 2));
    CHECK(is_face({{1, 3}, {1, 2}, {2, 2}, {3, 2}, {3, 1}}, 3, 3, 2));  // a chain
    CHECK(is_face({{1, 1}, {2, 2}}, 3, 3, 3));
    CHECK_THROWS(is_face({{4, 1}}, 3, 3, 2));
}

TEST_CASE("facet counts") {
    CHECK(facets(3, 3, 2).size() == 6);
    CHECK(facets(2, 2, 2).size() == 2);
    CHECK(facets(4, 7, 1).size() == 1);
    CHECK(facets(4, 7, 1)[0].paths.empty());
    CHECK_THROWS(facets(3, 3, 4));
}

TEST_CASE("right turns") {
    // down-then-left on 2x2 turns right once at the corner
    std::vector<GridPoint> down_left{{1, 2}, {2, 2}, {2, 1}};
    CHECK(right_turns(down_left) == std::set<GridPoint>({{2, 2}}));
    std::vector<GridPoint> left_down{{1, 2}, {1, 1}, {2, 1}};
    CHECK(right_turns(left_down).empty());

    // the worked pair of non-intersecting paths on a 5x3 grid
    PathFamily fam;
    fam.paths = {{{1, 3}, {1, 2}, {2, 2}, {3, 2}, {3, 1}, {4, 1}, {5, 1}},
                 {{2, 3}, {3, 3}, {4, 3}, {4, 2}, {5, 2}}};
    CHECK(right_turns(fam) == std::set<GridPoint>({{3, 2}, {4, 3}}));
}

TEST_CASE("shelling order starts with the turn-free facet") {
    auto f = facets(2, 2, 2);
    REQUIRE(f.size() == 2);
    CHECK(right_turns(f[0]).empty());
    CHECK(right_turns(f[1]).size() == 1);
    auto cert = certify_shelling(f);
    CHECK(cert.valid);
    CHECK(cert.restrictions_are_right_turns);
}

TEST_CASE("light and shadow") {
    SUBCASE("single path on 2x2") {
        auto chains = light_shadow({{1, 2}, {1, 1}, {2, 1}}, 2, 2, 2);
        REQUIRE(chains.size() == 1);
        CHECK(chains[0] == std::vector<GridPoint>({{1, 2}, {1, 1}, {2, 1}}));
    }
    SUBCASE("full row on a 1xn grid") {
        auto chains = light_shadow({{1, 1}, {1, 2}, {1, 3}, {1, 4}}, 1, 4, 2);
        REQUIRE(chains.size() == 1);
        CHECK(chains[0] == std::vector<GridPoint>({{1, 4}, {1, 3}, {1, 2}, {1, 1}}));
    }
    SUBCASE("facets decompose into their paths") {
        for (const auto& fam : facets(3, 3, 3))
            CHECK(light_shadow(fam.points(), 3, 3, 3) == fam.paths);
    }
    SUBCASE("non-facets are rejected") {
        CHECK_THROWS(light_shadow({{1, 1}}, 2, 2, 2));
        CHECK_THROWS(light_shadow({{1, 2}, {2, 1}}, 2, 2, 2));
    }
}

TEST_CASE("h-vectors") {
    CHECK(h_vector(3, 3, 2) == std::vector<long long>({1, 4, 1}));
    CHECK(h_vector(2, 2, 2) == std::vector<long long>({1, 1}));
    CHECK(h_vector(4, 5, 1) == std::vector<long long>({1}));
}

TEST_CASE("multiplicities") {
    CHECK(gv_multiplicity(3, 3, 2) == 6);
    CHECK(gv_multiplicity(2, 2, 2) == 2);
    CHECK(gv_multiplicity(5, 7, 1) == 1);
    CHECK(giambelli_multiplicity(3, 3, 2) == 6);
    CHECK(giambelli_multiplicity(2, 2, 2) == 2);
    CHECK(giambelli_multiplicity(6, 2, 1) == 1);
    CHECK(gv_multiplicity(3, 3, 3) == 3);
    CHECK(giambelli_multiplicity(3, 3, 3) == 3);
}

TEST_CASE("hilbert series") {
    HilbertSeries h2 = hilbert_series(3, 3, 2);
    CHECK(h2.numerator == std::vector<long long>({1, 4, 1}));
    CHECK(h2.denom_degree == 5);
    CHECK(h2.multiplicity() == 6);

    HilbertSeries h3 = hilbert_series(3, 3, 3);
    CHECK(h3.numerator == std::vector<long long>({1, 1, 1}));
    CHECK(h3.denom_degree == 8);

    HilbertSeries h342 = hilbert_series(3, 4, 2);
    CHECK(h342.numerator == std::vector<long long>({1, 6, 3}));
    CHECK(h342.denom_degree == 6);

    HilbertSeries triv = hilbert_series(2, 5, 1);
    CHECK(triv.numerator == std::vector<long long>({1}));
    CHECK(triv.denom_degree == 0);
}

TEST_CASE("hilbert function") {
    CHECK(hilbert_function(3, 3, 2, 0) == 1);
    CHECK(hilbert_function(3, 3, 2, 1) == 9);
    CHECK(hilbert_function(3, 3, 2, 2) == 36);
    CHECK(hilbert_function(4, 4, 3, 0) == 1);
    CHECK(hilbert_function(2, 2, 1, 0) == 1);
    CHECK(hilbert_function(2, 2, 1, 1) == 0);
}

TEST_CASE("krull dimension") {
    CHECK(krull_dim(3, 3, 2) == 5);
    CHECK(krull_dim(4, 6, 1) == 0);
    CHECK(krull_dim(5, 3, 3) == 12);
    // the dimension equals the facet cardinality
    for (int t = 2; t <= 3; ++t)
        for (const auto& fam : facets(4, 3, t))
            CHECK(static_cast<int>(fam.point_count()) == krull_dim(4, 3, t));
}
