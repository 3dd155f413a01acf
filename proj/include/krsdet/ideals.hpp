#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "krsdet/greene.hpp"
#include "krsdet/monomial.hpp"
#include "krsdet/shape.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

/// Description of an ideal built from determinantal ideals. Grammar:
///   I[t]        ideal of t-minors
///   I[t]^k      ordinary power
///   I[t]^(k)    symbolic power
/// combined with '*' (products of I[t]/I[t]^k factors), '+' (sums),
/// '&' (intersections) and parentheses. All membership answers describe
/// initial ideals under a diagonal order in characteristic zero.
struct IdealSpec {
    enum class Kind { determinantal, symbolic_power, power, product, sum, intersection };
    Kind kind = Kind::determinantal;
    int t = 0;
    int k = 0;
    std::vector<int> factors;                       // product factor sizes, non-increasing
    std::vector<std::shared_ptr<IdealSpec>> parts;  // sum / intersection operands

    static IdealSpec determinantal(int t);
    static IdealSpec symbolic_power(int t, int k);
    static IdealSpec power(int t, int k);
    static IdealSpec product(std::vector<int> factors);
    static IdealSpec sum_of(std::vector<IdealSpec> parts);
    static IdealSpec intersection_of(std::vector<IdealSpec> parts);

    std::string to_string() const;
};

IdealSpec parse_ideal_spec(const std::string& text);

/// Membership of a monomial in ini(I_t): some t-diagonal divides it.
bool in_ini_determinantal(const PositionMonomial& mon, int t);

/// Membership in ini(I_t^(k)): hat_gamma_t >= k.
bool in_ini_symbolic(const PositionMonomial& mon, int t, int k);

/// Membership in ini(I_t^k): hat_alpha_k >= kt.
bool in_ini_power(const PositionMonomial& mon, int t, int k);

/// Membership in ini(I_{t_1} ... I_{t_r}): hat_gamma_i >= gamma_i(factors)
/// for all i.
bool in_ini_product(const PositionMonomial& mon, const std::vector<int>& factors);

/// Membership for a full spec (sums = union, intersections = intersection).
bool in_initial_ideal(const PositionMonomial& mon, const IdealSpec& spec);

/// Shapes of the Groebner basis of I_t^(k): all parts in [t, min(m,n)] and
/// gamma_t == k.
std::set<Shape> groebner_shapes_symbolic(int t, int k, int m, int n);

/// Shapes of the Groebner basis of I_t^k: partitions of kt into at most k
/// parts, each at most min(m,n).
std::set<Shape> groebner_shapes_power(int t, int k, int m, int n);

/// Number of standard bitableaux of total degree d on [1,m] x [1,n] whose
/// shape satisfies the spec's conditions. Supported kinds: determinantal,
/// symbolic_power, power, product.
long long standard_basis_count(const IdealSpec& spec, int degree, int m, int n);

/// Whether the shape's conditions admit a given bitableau shape.
bool shape_in_ideal(const IdealSpec& spec, const Shape& shape);

/// Number of degree-d monomials passing the membership predicate.
long long monomial_membership_count(const IdealSpec& spec, int degree, int m, int n);

/// True iff some product of diagonal monomials with factor sizes given by
/// the shape divides mon.
bool diagonal_product_divides(const PositionMonomial& mon, const Shape& shape);

struct GkrsWitnessReport {
    PositionMonomial monomial;
    std::vector<int> factors;
    bool member = false;
    std::vector<Shape> shapes_checked;
    std::vector<Shape> shapes_with_witness;
    bool bitableau_initial_exists = false;
    GkrsWitnessReport() : monomial(0, 0) {}
};

/// The classical failure of products of minors to form a Groebner basis of
/// I_4 I_2: a monomial in the initial ideal that no product of minors in the
/// ideal reaches with its initial term.
GkrsWitnessReport gkrs_failure_witness();

/// Same exhaustive check for an arbitrary monomial and product.
GkrsWitnessReport gkrs_witness_for(const PositionMonomial& mon,
                                   const std::vector<int>& factors);

}  // namespace krsdet
