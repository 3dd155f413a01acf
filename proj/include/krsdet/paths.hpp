#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "krsdet/poly.hpp"

namespace krsdet {

/// Grid point in matrix coordinates, 1-based.
using GridPoint = std::pair<int, int>;

/// The grid poset on [1,m] x [1,n]: (i,j) <= (h,k) iff i <= h and j >= k.
/// Antichains of size t are exactly main diagonals of t-minors.
bool grid_leq(const GridPoint& a, const GridPoint& b);

/// The auxiliary strict order: (a,b) before (c,d) iff a < c and b < d.
bool grid_prec(const GridPoint& a, const GridPoint& b);

/// Family of t-1 pairwise disjoint monotone paths, path i from (i,n) to
/// (m,i); the facets of the step-t order complex.
struct PathFamily {
    std::vector<std::vector<GridPoint>> paths;

    std::set<GridPoint> points() const;
    std::size_t point_count() const;
    bool operator==(const PathFamily& o) const { return paths == o.paths; }
};

struct HilbertSeries {
    std::vector<long long> numerator;  // h_0 .. h_s
    int denom_degree = 0;
    long long multiplicity() const;  // h(1)
};

/// Whether the point set contains no t-element antichain of the grid order.
bool is_face(const std::set<GridPoint>& points, int m, int n, int t);

/// All facets of the step-t order complex, listed in shelling order.
std::vector<PathFamily> facets(int m, int n, int t);

/// Light-and-shadow decomposition of a face into chains; for a facet the
/// i-th chain is its i-th path. Throws if the input is not a facet.
std::vector<std::vector<GridPoint>> light_shadow(const std::set<GridPoint>& face, int m,
                                                 int n, int t);

/// Interior points where a (1,0) step is followed by a (0,-1) step.
std::set<GridPoint> right_turns(const std::vector<GridPoint>& path);
std::set<GridPoint> right_turns(const PathFamily& family);

/// Sorts families into the shelling order: compare at the largest index
/// with different paths, earlier means further to the right (smaller exit
/// columns); deterministic tie-breaking.
void shelling_order(std::vector<PathFamily>& families);

struct ShellingCertificate {
    bool valid = false;
    std::string failure;
    /// c(F_i): points v such that F_i minus F_k = {v} for some k < i.
    std::vector<std::set<GridPoint>> restriction_sets;
    bool restrictions_are_right_turns = false;
};

/// Verifies the shelling definition verbatim on the given order.
ShellingCertificate certify_shelling(const std::vector<PathFamily>& order);

/// Histogram of |c(F_i)| over the shelling; equals the histogram of
/// right-turn counts.
std::vector<long long> h_vector(int m, int n, int t);

/// Number of facets via the Gessel-Viennot binomial determinant.
long long gv_multiplicity(int m, int n, int t);

/// The same number via the Giambelli binomial-quotient product.
long long giambelli_multiplicity(int m, int n, int t);

/// Hilbert series numerator computed three independent ways (right-turn
/// generating polynomial, shelling h-vector, shifted binomial determinant);
/// throws if the routes disagree.
HilbertSeries hilbert_series(int m, int n, int t);

/// Coefficient of z^d in the series expansion.
long long hilbert_function(int m, int n, int t, int d);

/// (m+n-t+1)(t-1): the Krull dimension of the determinantal ring, equal to
/// the facet cardinality of the complex.
int krull_dim(int m, int n, int t);

}  // namespace krsdet
