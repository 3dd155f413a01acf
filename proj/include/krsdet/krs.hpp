#pragma once

#include <set>
#include <vector>

#include "krsdet/monomial.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

struct DeletionResult {
    Tableau tableau;
    int bumped;
};

/// Removes the last entry of row p (which must be a removable corner) and
/// bumps a value out through the rows above. Requires a standard tableau.
DeletionResult delete_at(const Tableau& t, int p);

/// Inserts x, bumping the leftmost entry >= x of each row downward; the exact
/// inverse of delete_at. Returns the tableau and the index of the row that
/// grew.
std::pair<Tableau, int> insert(const Tableau& t, int x);

/// The bijection from standard bitableaux to two-line arrays (equivalently,
/// monomials).
TwoLineArray krs(const Bitableau& b);

/// Inverse bijection; rejects arrays violating the sorting invariants.
Bitableau krs_inverse(const TwoLineArray& arr, int m, int n);

PositionMonomial krs_monomial(const Bitableau& b);
Bitableau krs_inverse(const PositionMonomial& mon);

/// Insertion tableau of a sequence.
Tableau ins(const std::vector<int>& seq);

/// Rows of a standard tableau read bottom to top; Ins of the result is the
/// tableau itself.
std::vector<int> canonical_sequence(const Tableau& t);

/// All sequences differing from seq by one Knuth relation, either type,
/// either direction, at any window.
std::set<std::vector<int>> knuth_neighbors(const std::vector<int>& seq);

/// BFS closure under Knuth relations. Guards against state-space blowup by
/// rejecting sequences longer than max_len.
bool knuth_equivalent(const std::vector<int>& r, const std::vector<int>& s,
                      std::size_t max_len = 8);

}  // namespace krsdet
