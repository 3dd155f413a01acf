#pragma once

#include <utility>
#include <vector>

#include "krsdet/shape.hpp"

namespace krsdet {

/// Tableau with integer entries; row lengths must form a Shape. "Standard"
/// means rows strictly increase left to right and columns are non-decreasing
/// top to bottom. bound == 0 means entries are unconstrained above.
class Tableau {
public:
    Tableau() : bound_(0) {}
    Tableau(std::vector<std::vector<int>> rows, int bound);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int bound() const { return bound_; }
    Shape shape() const;
    int size() const;  // number of entries
    bool empty() const { return rows_.empty(); }
    bool is_standard() const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    int bound_;
};

/// Determinant of the square submatrix picked by strictly increasing row and
/// column index lists; the empty minor has value 1.
struct Minor {
    std::vector<int> rows;
    std::vector<int> cols;

    Minor() = default;
    Minor(std::vector<int> r, std::vector<int> c);
    int size() const { return static_cast<int>(rows.size()); }

    bool operator==(const Minor& o) const { return rows == o.rows && cols == o.cols; }
    bool operator<(const Minor& o) const;
};

/// a preceq b iff size(a) >= size(b) and a's indices are componentwise <= b's
/// on the first size(b) entries. A partial order on minors.
bool minor_preceq(const Minor& a, const Minor& b);

/// Product of minors, stored as a pair of equal-shape tableaux with rows
/// increasing left to right. Factors are kept in non-increasing size order.
class Bitableau {
public:
    Bitableau() : m_(0), n_(0) {}
    Bitableau(Tableau left, Tableau right);
    /// Builds from factors, sorting them by non-increasing size (stable).
    Bitableau(std::vector<Minor> factors, int m, int n);

    const Tableau& left() const { return left_; }
    const Tableau& right() const { return right_; }
    int m() const { return m_; }
    int n() const { return n_; }
    Shape shape() const { return left_.shape(); }
    int degree() const { return left_.size(); }
    std::size_t factor_count() const { return left_.rows().size(); }
    Minor factor(std::size_t i) const;
    std::vector<Minor> factors() const;
    bool empty() const { return left_.empty(); }

    bool operator==(const Bitableau& o) const { return left_ == o.left_ && right_ == o.right_; }
    bool operator<(const Bitableau& o) const;

private:
    Tableau left_, right_;
    int m_, n_;
};

bool is_standard(const Bitableau& b);

/// Row-index multiplicities (length m) and column-index multiplicities
/// (length n). Preserved by straightening.
std::pair<std::vector<int>, std::vector<int>> content(const Bitableau& b);

/// Swaps the two tableaux (the bitableau of the transposed matrix).
Bitableau transpose(const Bitableau& b);

/// All standard tableaux of the given shape with entries in [1, bound].
std::vector<Tableau> standard_tableaux(const Shape& shape, int bound);

/// All standard bitableaux of total degree d on [1,m] x [1,n], grouped by
/// enumeration over shapes; deterministic order.
std::vector<Bitableau> standard_bitableaux(int degree, int m, int n);

/// All minors of the m x n generic matrix of the given size.
std::vector<Minor> all_minors(int m, int n, int size);

/// All non-empty minors, sizes 1..min(m,n).
std::vector<Minor> all_minors(int m, int n);

}  // namespace krsdet
