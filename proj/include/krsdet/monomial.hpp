#pragma once

#include <map>
#include <utility>
#include <vector>

namespace krsdet {

/// Two-line array (l | r) with l non-decreasing and r non-increasing within
/// blocks of equal l.
struct TwoLineArray {
    std::vector<int> top;
    std::vector<int> bottom;

    TwoLineArray() = default;
    TwoLineArray(std::vector<int> t, std::vector<int> b);
    std::size_t size() const { return top.size(); }

    bool operator==(const TwoLineArray& o) const {
        return top == o.top && bottom == o.bottom;
    }
};

/// Monomial in the entries of an m x n generic matrix, stored as an exponent
/// map over positions (i, j).
class PositionMonomial {
public:
    PositionMonomial(int m, int n) : m_(m), n_(n) {}
    PositionMonomial(int m, int n, const std::vector<std::pair<int, int>>& positions);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::map<std::pair<int, int>, int>& exponents() const { return exp_; }
    int exponent(int i, int j) const;
    void set_exponent(int i, int j, int e);
    void multiply_position(int i, int j, int e = 1);
    int degree() const;
    bool divides(const PositionMonomial& other) const;
    /// Positions with multiplicity, in row-major order.
    std::vector<std::pair<int, int>> positions() const;

    bool operator==(const PositionMonomial& o) const {
        return m_ == o.m_ && n_ == o.n_ && exp_ == o.exp_;
    }
    bool operator<(const PositionMonomial& o) const { return exp_ < o.exp_; }

private:
    int m_, n_;
    std::map<std::pair<int, int>, int> exp_;  // only nonzero exponents
};

/// Canonical two-line array of a monomial: positions listed with
/// multiplicity, l ascending, r descending within equal l.
TwoLineArray monomial_to_array(const PositionMonomial& mon);

PositionMonomial array_to_monomial(const TwoLineArray& arr, int m, int n);

/// Product of all mn matrix entries.
PositionMonomial full_matrix_monomial(int m, int n);

/// All monomials of the given degree on an m x n matrix, in deterministic
/// (lexicographic by exponent vector) order.
std::vector<PositionMonomial> monomials_of_degree(int m, int n, int degree);

}  // namespace krsdet
