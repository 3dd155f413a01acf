#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krsdet/greene.hpp"
#include "krsdet/poly.hpp"
#include "krsdet/rees.hpp"

using namespace krsdet;

namespace {
PositionMonomial ex1() {
    return PositionMonomial(4, 5, {{1, 1}, {1, 3}, {2, 2}, {3, 4}, {4, 3}, {4, 5}});
}
}  // namespace

TEST_CASE("symbolic Rees membership") {
    PositionMonomial X = full_matrix_monomial(3, 3);
    CHECK(in_ini_symbolic_rees({X, 4}, 2));
    CHECK_FALSE(in_ini_symbolic_rees({X, 5}, 2));
    CHECK(in_ini_symbolic_rees({PositionMonomial(3, 3, {{1, 1}}), 0}, 2));
    CHECK_FALSE(in_ini_symbolic_rees({PositionMonomial(3, 3, {{1, 1}}), 1}, 2));
}

TEST_CASE("Rees algebra membership") {
    PositionMonomial diag(3, 3, {{1, 1}, {2, 2}});
    CHECK(in_ini_rees({diag, 1}, 2));
    CHECK(in_ini_rees({ex1(), 2}, 2));
    PositionMonomial d2(3, 3, {{1, 1}, {2, 2}});
    CHECK_FALSE(in_ini_rees({d2, 2}, 2));
}

TEST_CASE("Rees product membership") {
    CHECK(in_ini_rees_product({ex1(), 1}, {4, 2}));
    CHECK(in_ini_rees_product({PositionMonomial(3, 3), 0}, {2, 2}));
    PositionMonomial diag3(3, 3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK_FALSE(in_ini_rees_product({diag3, 2}, {2}));
}

TEST_CASE("algebra of minors membership") {
    PositionMonomial diag(4, 4, {{1, 1}, {2, 2}});
    CHECK(in_ini_At({diag, 1}, 2));
    PositionMonomial two(4, 4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}});
    CHECK(in_ini_At({two, 2}, 2));
    PositionMonomial sq(4, 4);
    sq.set_exponent(1, 1, 2);
    CHECK_FALSE(in_ini_At({sq, 1}, 2));
    CHECK_FALSE(in_ini_At({diag, 2}, 2));  // degree mismatch
}

TEST_CASE("canonical module of the Rees algebra") {
    PositionMonomial X = full_matrix_monomial(3, 3);
    CHECK(in_canonical_rees({X, 1}, 2));
    CHECK(in_canonical_rees({X, 3}, 2));
    CHECK_FALSE(in_canonical_rees({X, 4}, 2));
    PositionMonomial partial(3, 3, {{1, 1}, {2, 2}});
    CHECK_FALSE(in_canonical_rees({partial, 1}, 2));
}

TEST_CASE("canonical module of the algebra of minors") {
    PositionMonomial X = full_matrix_monomial(4, 4);
    CHECK(in_canonical_At({X, 8}, 2));
    CHECK_FALSE(in_canonical_At({X, 7}, 2));  // wrong bidegree
    PositionMonomial nonmult(4, 4);
    for (int d = 0; d < 16; ++d) nonmult.multiply_position(1, 1);
    CHECK_FALSE(in_canonical_At({nonmult, 8}, 2));
}

TEST_CASE("gamma of the full matrix") {
    CHECK(gamma_of_X(3, 3, 1) == 9);
    CHECK(gamma_of_X(3, 3, 2) == 4);
    CHECK(gamma_of_X(3, 3, 3) == 1);
    CHECK(gamma_of_X(4, 5, 2) == 12);
    for (int i = 1; i <= 3; ++i)
        CHECK(hat_gamma(full_matrix_monomial(3, 3), i) == gamma_of_X(3, 3, i));
    CHECK(hat_gamma(full_matrix_monomial(4, 5), 2) == 12);
}

TEST_CASE("distinguished product") {
    SUBCASE("2x2") {
        Bitableau d = distinguished_D(2, 2);
        CHECK(d.shape() == Shape({2, 1, 1}));
        ExactPolynomial p = expand_bitableau(d);
        CHECK(p.leading_monomial() == expo_of(full_matrix_monomial(2, 2)));
        CHECK(p.leading_coefficient() == 1);
    }
    SUBCASE("3x4 shape and gamma values") {
        Bitableau d = distinguished_D(3, 4);
        CHECK(d.shape() == Shape({3, 3, 2, 2, 1, 1}));
        CHECK(gamma(d.shape(), 2) == 6);
        for (int i = 1; i <= 3; ++i) CHECK(gamma(d.shape(), i) == gamma_of_X(3, 4, i));
    }
    SUBCASE("1xn is the product of the entries") {
        Bitableau d = distinguished_D(1, 4);
        CHECK(d.factor_count() == 4);
        ExactPolynomial p = expand_bitableau(d);
        CHECK(p.term_count() == 1);
        CHECK(p.leading_monomial() == expo_of(full_matrix_monomial(1, 4)));
    }
    SUBCASE("transposed orientation") {
        Bitableau d = distinguished_D(4, 3);
        ExactPolynomial p = expand_bitableau(d);
        CHECK(p.leading_monomial() == expo_of(full_matrix_monomial(4, 3)));
    }
}

TEST_CASE("Gorenstein classification") {
    CHECK(is_gorenstein_At(4, 4, 2).gorenstein);
    CHECK(is_gorenstein_At(4, 4, 2).clause == "mn=t(m+n)");
    CHECK(is_gorenstein_At(3, 3, 2).clause == "t=m-1=n-1");
    CHECK_FALSE(is_gorenstein_At(4, 3, 2).gorenstein);
    CHECK(is_gorenstein_At(6, 6, 3).clause == "mn=t(m+n)");
    CHECK(is_gorenstein_At(5, 7, 1).clause == "t=1");
    CHECK(is_gorenstein_At(2, 5, 2).clause == "t=min");
}

TEST_CASE("dimension of the algebra of minors") {
    CHECK(dim_At(2, 4, 2) == 5);
    CHECK(dim_At(3, 3, 2) == 9);
    CHECK(dim_At(4, 6, 1) == 24);
    CHECK(dim_At(3, 3, 3) == 1);  // m(n-m)+1 with m=n
}
