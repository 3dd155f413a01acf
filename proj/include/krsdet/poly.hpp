#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "krsdet/ideals.hpp"
#include "krsdet/monomial.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

using Rat = mpq_class;
using Int = mpz_class;

/// Exponent vector over the mn matrix entries in row-major variable order
/// X11, X12, ..., Xmn.
using Expo = std::vector<int>;

/// Descending diagonal order: pure lexicographic with X11 > X12 > ... > Xmn.
/// The leading monomial of every minor is its main diagonal.
struct DiagGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return a.size() > b.size();
    }
};

Expo expo_of(const PositionMonomial& mon);
PositionMonomial monomial_of(const Expo& e, int m, int n);

/// Multivariate polynomial over Q with terms kept in descending diagonal
/// order; zero coefficients are never stored.
class ExactPolynomial {
public:
    ExactPolynomial(int m, int n) : m_(m), n_(n) {}
    static ExactPolynomial monomial(const PositionMonomial& mon, const Rat& c = 1);
    static ExactPolynomial constant(int m, int n, const Rat& c);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<Expo, Rat, DiagGreater>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Expo& leading_monomial() const;
    const Rat& leading_coefficient() const;
    int degree() const;  // total degree; -1 for the zero polynomial

    void add_term(const Expo& e, const Rat& c);
    ExactPolynomial& operator+=(const ExactPolynomial& o);
    ExactPolynomial& operator-=(const ExactPolynomial& o);
    ExactPolynomial operator*(const ExactPolynomial& o) const;
    ExactPolynomial operator*(const Rat& c) const;
    bool operator==(const ExactPolynomial& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    int m_, n_;
    std::map<Expo, Rat, DiagGreater> terms_;
};

/// Signed expansion of a minor; leading term is the main diagonal with
/// coefficient +1.
ExactPolynomial expand_minor(const Minor& minor, int m, int n);

/// Product of the expansions of the factors.
ExactPolynomial expand_bitableau(const Bitableau& b);

/// Row space over the degree-d monomials with exact Gaussian elimination;
/// pivot columns are the initial monomials of the space.
class RowSpace {
public:
    /// Sparse row, terms in descending diagonal order.
    using Row = std::vector<std::pair<Expo, Rat>>;

    RowSpace(int m, int n) : m_(m), n_(n) {}

    /// Reduces p against the current pivots and inserts the monic remainder;
    /// returns false if p reduced to zero.
    bool add(ExactPolynomial p);
    /// Remainder of p after reduction (not inserted).
    ExactPolynomial reduce(const ExactPolynomial& p) const;
    bool contains(const ExactPolynomial& p) const { return reduce(p).is_zero(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    std::set<Expo, DiagGreater> pivot_monomials() const;
    std::vector<ExactPolynomial> rows() const;
    int m() const { return m_; }
    int n() const { return n_; }

private:
    Row reduce_row(Row r) const;
    int m_, n_;
    std::vector<Row> rows_;
    std::map<Expo, std::size_t, DiagGreater> pivot_of_;
};

/// Pivot monomials of the span of the given polynomials (all homogeneous of
/// one degree).
std::set<Expo, DiagGreater> initial_space(const std::vector<ExactPolynomial>& polys);

struct ComponentOptions {
    int max_degree = 6;
    int max_cells = 16;  // mn guard
};

/// Row-reduced basis of the degree-d component of the ideal described by
/// spec. Leaves are built from explicit generators (minor products times
/// monomials) except symbolic powers, which use their standard-bitableau
/// description; sums and intersections are vector-space operations.
RowSpace ideal_component(const IdealSpec& spec, int degree, int m, int n,
                         const ComponentOptions& opts = {});

/// Intersection of two row spaces (Zassenhaus elimination).
RowSpace intersect(const RowSpace& a, const RowSpace& b, int degree);

struct GroebnerReport {
    bool pass = true;
    struct Degree {
        int degree;
        int rank;
        long long diagonal_monomials;
        bool initial_matches;
    };
    std::vector<Degree> degrees;
};

/// Checks that the initial space of (I_t)_d equals the degree-d part of the
/// monomial ideal generated by the t-diagonals, for every d <= dmax.
GroebnerReport verify_groebner_determinantal(int m, int n, int t, int dmax);

struct IdentityReport {
    bool holds = true;
    bool containment_only = false;
    int first_failing_degree = -1;
    std::string witness;  // a polynomial exhibiting the failure, if any
    std::vector<std::array<int, 3>> dims;  // degree, dim lhs, dim rhs
};

/// Componentwise equality (or containment when containment_only) of two
/// ideal specs for all degrees <= dmax.
IdentityReport verify_identity(const IdealSpec& lhs, const IdealSpec& rhs, int dmax,
                               int m, int n, bool containment_only = false);

struct SeparatingWeightResult {
    bool feasible = false;
    std::vector<Int> weights;  // positive integral weight, length mn
    /// Nonnegative multipliers over the input pairs followed by the
    /// positivity constraints, certifying infeasibility.
    std::vector<Rat> farkas;
};

/// Finds a positive integral weight vector a with a(bigger) > a(smaller) for
/// every pair, by Fourier-Motzkin elimination; returns a Farkas certificate
/// when none exists.
SeparatingWeightResult find_separating_weight(
    const std::vector<std::pair<PositionMonomial, PositionMonomial>>& pairs, int m, int n);

}  // namespace krsdet
