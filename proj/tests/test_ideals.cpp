#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "krsdet/ideals.hpp"

using namespace krsdet;

namespace {
PositionMonomial ex1() {
    return PositionMonomial(4, 5, {{1, 1}, {1, 3}, {2, 2}, {3, 4}, {4, 3}, {4, 5}});
}
}  // namespace

TEST_CASE("ideal spec parsing") {
    auto p = parse_ideal_spec("I[4]*I[2]");
    CHECK(p.kind == IdealSpec::Kind::product);
    CHECK(p.factors == std::vector<int>({4, 2}));

    auto s = parse_ideal_spec("I[2]^(3)");
    CHECK(s.kind == IdealSpec::Kind::symbolic_power);
    CHECK(s.t == 2);
    CHECK(s.k == 3);

    auto pw = parse_ideal_spec("I[3]^2");
    CHECK(pw.kind == IdealSpec::Kind::power);
    CHECK(pw.t == 3);
    CHECK(pw.k == 2);

    auto sum = parse_ideal_spec("I[2]^2 + I[3]");
    CHECK(sum.kind == IdealSpec::Kind::sum);
    CHECK(sum.parts.size() == 2);

    auto meet = parse_ideal_spec("I[1]^(4) & I[2]^(2)");
    CHECK(meet.kind == IdealSpec::Kind::intersection);

    // powers expand to product factor lists under '*'
    auto prod = parse_ideal_spec("I[2]^2*I[3]");
    CHECK(prod.kind == IdealSpec::Kind::product);
    CHECK(prod.factors == std::vector<int>({3, 2, 2}));

    CHECK_THROWS(parse_ideal_spec("I[2"));
    CHECK_THROWS(parse_ideal_spec("I[2]^(2) * I[3]"));  // symbolic factors unsupported
    CHECK_THROWS(parse_ideal_spec("J[2]"));
}

TEST_CASE("determinantal membership") {
    PositionMonomial diag(2, 2, {{1, 1}, {2, 2}});
    CHECK(in_ini_determinantal(diag, 2));
    PositionMonomial anti(2, 2, {{1, 2}, {2, 1}});
    CHECK_FALSE(in_ini_determinantal(anti, 2));
    CHECK(in_ini_determinantal(ex1(), 4));
}

TEST_CASE("symbolic membership") {
    CHECK(in_ini_symbolic(ex1(), 3, 2));
    PositionMonomial x11(2, 2, {{1, 1}});
    CHECK_FALSE(in_ini_symbolic(x11, 2, 1));
    CHECK(in_ini_symbolic(full_matrix_monomial(3, 3), 3, 1));
}

TEST_CASE("power membership") {
    PositionMonomial diag(2, 2, {{1, 1}, {2, 2}});
    CHECK(in_ini_power(diag, 2, 1));
    CHECK(in_ini_power(ex1(), 2, 3));
    PositionMonomial squared(2, 2, {{1, 1}, {1, 1}, {2, 2}});
    CHECK_FALSE(in_ini_power(squared, 2, 2));
}

TEST_CASE("product membership") {
    CHECK(in_ini_product(ex1(), {4, 2}));
    PositionMonomial x(3, 3, {{2, 3}});
    CHECK(in_ini_product(x, {1}));
    CHECK_FALSE(in_ini_product(PositionMonomial(3, 3), {1}));
    PositionMonomial diag2(3, 3, {{1, 1}, {2, 2}});
    CHECK_FALSE(in_ini_product(diag2, {2, 2}));
}

TEST_CASE("membership through a parsed spec") {
    CHECK(in_initial_ideal(ex1(), parse_ideal_spec("I[4]*I[2]")));
    PositionMonomial diag3(3, 3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(in_initial_ideal(diag3, parse_ideal_spec("I[2]^2 + I[3]")));
    CHECK(in_initial_ideal(diag3, parse_ideal_spec("I[1]^(3) & I[3]")));
    CHECK_FALSE(in_initial_ideal(diag3, parse_ideal_spec("I[1]^(4) & I[3]")));
}

TEST_CASE("Groebner shapes for symbolic powers") {
    CHECK(groebner_shapes_symbolic(2, 2, 2, 3) == std::set<Shape>({Shape({2, 2})}));
    CHECK(groebner_shapes_symbolic(2, 1, 3, 3) == std::set<Shape>({Shape({2})}));
    CHECK(groebner_shapes_symbolic(2, 2, 3, 3) ==
          std::set<Shape>({Shape({2, 2}), Shape({3})}));
}

TEST_CASE("Groebner shapes for powers") {
    CHECK(groebner_shapes_power(2, 2, 3, 3) == std::set<Shape>({Shape({2, 2}), Shape({3, 1})}));
    CHECK(groebner_shapes_power(2, 1, 5, 7) == std::set<Shape>({Shape({2})}));
    CHECK(groebner_shapes_power(3, 2, 4, 4) == std::set<Shape>({Shape({3, 3}), Shape({4, 2})}));
}

TEST_CASE("standard basis counts") {
    CHECK(standard_basis_count(IdealSpec::determinantal(2), 2, 2, 2) == 1);
    // I_1 at degree d contains everything: C(mn+d-1, d)
    CHECK(standard_basis_count(IdealSpec::determinantal(1), 3, 2, 2) == 20);
    CHECK(standard_basis_count(IdealSpec::determinantal(1), 2, 3, 3) == 45);
    // counts agree with monomial membership counts
    for (int d = 0; d <= 4; ++d) {
        IdealSpec spec = IdealSpec::symbolic_power(2, 2);
        CHECK(standard_basis_count(spec, d, 3, 3) == monomial_membership_count(spec, d, 3, 3));
    }
    CHECK_THROWS(standard_basis_count(parse_ideal_spec("I[1] & I[2]"), 2, 3, 3));
}

TEST_CASE("diagonal product divisibility") {
    PositionMonomial mon(3, 3, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(diagonal_product_divides(mon, Shape({3})));
    CHECK(diagonal_product_divides(mon, Shape({2, 1})));
    CHECK_FALSE(diagonal_product_divides(mon, Shape({2, 2})));
    PositionMonomial sq(2, 2);
    sq.set_exponent(1, 1, 2);
    sq.set_exponent(2, 2, 2);
    CHECK(diagonal_product_divides(sq, Shape({2, 2})));  // repeated diagonal
}

TEST_CASE("the G-KRS failure witness") {
    auto rep = gkrs_failure_witness();
    CHECK(rep.member);
    CHECK_FALSE(rep.bitableau_initial_exists);
    CHECK(rep.shapes_checked ==
          std::vector<Shape>({Shape({6}), Shape({5, 1}), Shape({4, 2})}));

    PositionMonomial good(4, 5, {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {1, 3}, {2, 4}});
    auto rep2 = gkrs_witness_for(good, {4, 2});
    CHECK(rep2.member);
    CHECK(rep2.bitableau_initial_exists);
    CHECK(rep2.shapes_with_witness == std::vector<Shape>({Shape({4, 2})}));
}
