#pragma once

#include <optional>
#include <vector>

#include "krsdet/monomial.hpp"
#include "krsdet/shape.hpp"

namespace krsdet {

enum class DecompKind { increasing, non_increasing };

/// A partition of the index set {0..k-1} of a sequence into blocks whose
/// induced subsequences are strictly increasing (or weakly non-increasing).
struct DecompositionWitness {
    std::vector<std::vector<int>> blocks;  // index lists, each ascending
    DecompKind kind = DecompKind::increasing;
    Shape shape() const;
    bool validates(const std::vector<int>& seq) const;
};

struct BruteResult {
    int value = 0;
    DecompositionWitness witness;
};

/// alpha_k of the insertion tableau; equals the longest subsequence
/// decomposable into k strictly increasing subsequences.
int hat_alpha(const std::vector<int>& seq, int k);

/// gamma_t of the insertion tableau.
int hat_gamma(const std::vector<int>& seq, int t);

/// alpha_k of the dual shape of the insertion tableau; equals the longest
/// subsequence decomposable into k non-increasing subsequences.
int hat_alpha_star(const std::vector<int>& seq, int k);

/// Longest subsequence decomposable into t-1 non-increasing subsequences;
/// satisfies hat_gamma(seq, t) + w(seq, t) == seq length.
int w_stat(const std::vector<int>& seq, int t);

/// Brute-force counterparts maximizing over all decompositions; they must
/// agree with the fast versions. Guarded by a length bound.
BruteResult hat_alpha_brute(const std::vector<int>& seq, int k,
                            std::size_t max_len = 10);
BruteResult hat_gamma_brute(const std::vector<int>& seq, int t,
                            std::size_t max_len = 10);
BruteResult hat_alpha_star_brute(const std::vector<int>& seq, int k,
                                 std::size_t max_len = 10);

/// Shapes of all decompositions of seq into increasing (or non-increasing)
/// subsequences.
std::vector<Shape> decomposition_shapes(const std::vector<int>& seq, DecompKind kind,
                                        std::size_t max_len = 10);

/// Sequence statistics lifted to monomials through the canonical bottom row.
int hat_alpha(const PositionMonomial& mon, int k);
int hat_gamma(const PositionMonomial& mon, int t);
int w_stat(const PositionMonomial& mon, int t);

}  // namespace krsdet
