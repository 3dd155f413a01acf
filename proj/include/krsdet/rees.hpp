#pragma once

#include <string>
#include <vector>

#include "krsdet/monomial.hpp"
#include "krsdet/paths.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

/// Monomial M T^k of the extended ring K[X, T].
struct BigradedMonomial {
    PositionMonomial mon;
    int k = 0;
};

enum class ReesVariant { symbolic, rees_product };

/// Linear form attached to a facet F of the step-t complex:
/// l_F(X_ij) = 1 if (i,j) is not in F, else 0; the T-coefficient is -1 for
/// the symbolic Rees algebra and -g_j for Rees algebras of products.
struct FacetLinearForm {
    PathFamily facet;
    int t_coefficient = -1;
    long long evaluate(const BigradedMonomial& x) const;
};

/// Membership in the initial algebra of the symbolic Rees algebra of I_t:
/// hat_gamma_t(M) >= k.
bool in_ini_symbolic_rees(const BigradedMonomial& x, int t);

/// The same membership via the facet linear forms (L_F(MT^k) >= 0 for every
/// facet F of the step-t complex).
bool in_ini_symbolic_rees_by_forms(const BigradedMonomial& x, int t);

/// Membership in the initial algebra of the Rees algebra of I_t:
/// hat_gamma_i(M) >= k(t+1-i) for i = 1..t.
bool in_ini_rees(const BigradedMonomial& x, int t);

/// Membership for the Rees algebra of a product I_{t_1} ... I_{t_r}:
/// hat_gamma_j(M) >= k gamma_j(factors) for all j.
bool in_ini_rees_product(const BigradedMonomial& x, const std::vector<int>& factors);

/// The same membership via facet linear forms with L_F(T) = -g_j.
bool in_ini_rees_product_by_forms(const BigradedMonomial& x, const std::vector<int>& factors);

/// Membership in the initial algebra of the algebra of t-minors:
/// deg M = tk and hat_gamma_2(M) >= k(t-1).
bool in_ini_At(const BigradedMonomial& x, int t);

/// Membership in the canonical module of ini(Rees(I_t)): the full-matrix
/// monomial times T divides MT^k and hat_gamma_i(M) >= (t+1-i)k + 1 for all
/// i = 1..t.
bool in_canonical_rees(const BigradedMonomial& x, int t);

/// Membership in the canonical module of ini(A_t): deg M = tk, divisibility
/// by the full matrix times T, and hat_gamma_2(M) >= (t-1)k + 1.
bool in_canonical_At(const BigradedMonomial& x, int t);

/// hat_gamma_i of the product of all matrix entries: (m-i+1)(n-i+1).
long long gamma_of_X(int m, int n, int i);

/// The distinguished product of minors with initial term equal to the
/// product of all matrix entries: two minors of each size s < min(m,n)
/// hugging opposite corners, plus consecutive maximal column windows.
Bitableau distinguished_D(int m, int n);

struct GorensteinResult {
    bool gorenstein = false;
    /// which clause holds: "t=1", "t=min", "t=m-1=n-1", "mn=t(m+n)", or "none"
    std::string clause;
};

GorensteinResult is_gorenstein_At(int m, int n, int t);

/// Krull dimension of the algebra of t-minors.
int dim_At(int m, int n, int t);

}  // namespace krsdet
