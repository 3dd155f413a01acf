#pragma once

#include <utility>
#include <vector>

#include "krsdet/poly.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

struct StraightTerm {
    Rat coeff;
    Bitableau bitableau;
};

/// Linear combination of distinct standard bitableaux equal to the input as
/// a polynomial.
using StraightRepresentation = std::vector<StraightTerm>;

/// Straightens the product of two maximal minors of an m x n matrix (given
/// by their column lists) via iterated Pluecker relations.
StraightRepresentation straighten_maximal(const Minor& g, const Minor& d, int m, int n);

/// Image of a maximal minor of the extended matrix (X | anti-triangular
/// block) under the specialization onto K[X]: a signed minor of X. Column
/// indices lie in [1, n+m]; the result sign is computed by cofactor
/// expansion of the unit columns.
std::pair<int, Minor> phi_specialize(const std::vector<int>& cols, int m, int n);

/// Preimage of a minor of X: the column list of the extended maximal minor
/// mapping onto +-(the minor), together with that sign.
std::pair<int, std::vector<int>> phi_lift(const Minor& minor, int m, int n);

/// Standard representation of an arbitrary bitableau: lift the factors to
/// maximal minors of the extended matrix, straighten there, push back down.
StraightRepresentation straighten(const Bitableau& b);

/// Independent route: expand the bitableau, enumerate the standard
/// bitableaux of equal content, and solve the exact linear system. Fails
/// loudly if the system is not uniquely solvable.
StraightRepresentation straighten_oracle(const Bitableau& b, int max_degree = 8);

/// Sum of coeff * expansion over the representation.
ExactPolynomial expand_representation(const StraightRepresentation& rep, int m, int n);

}  // namespace krsdet
