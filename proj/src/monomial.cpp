#include "krsdet/monomial.hpp"

#include <functional>
#include <stdexcept>

namespace krsdet {

TwoLineArray::TwoLineArray(std::vector<int> t, std::vector<int> b)
    : top(std::move(t)), bottom(std::move(b)) {
    if (top.size() != bottom.size())
        throw std::invalid_argument("two-line array rows must have equal length");
    for (std::size_t i = 0; i + 1 < top.size(); ++i) {
        if (top[i] > top[i + 1])
            throw std::invalid_argument("two-line array: top row must be non-decreasing");
        if (top[i] == top[i + 1] && bottom[i] < bottom[i + 1])
            throw std::invalid_argument(
                "two-line array: bottom row must be non-increasing within equal top entries");
    }
    for (std::size_t i = 0; i < top.size(); ++i)
        if (top[i] < 1 || bottom[i] < 1)
            throw std::invalid_argument("two-line array entries must be positive");
}

PositionMonomial::PositionMonomial(int m, int n,
                                   const std::vector<std::pair<int, int>>& positions)
    : m_(m), n_(n) {
    for (auto [i, j] : positions) multiply_position(i, j);
}

int PositionMonomial::exponent(int i, int j) const {
    auto it = exp_.find({i, j});
    return it == exp_.end() ? 0 : it->second;
}

void PositionMonomial::set_exponent(int i, int j, int e) {
    if (i < 1 || i > m_ || j < 1 || j > n_)
        throw std::invalid_argument("position outside matrix");
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0)
        exp_.erase({i, j});
    else
        exp_[{i, j}] = e;
}

void PositionMonomial::multiply_position(int i, int j, int e) {
    set_exponent(i, j, exponent(i, j) + e);
}

int PositionMonomial::degree() const {
    int d = 0;
    for (const auto& [pos, e] : exp_) d += e;
    return d;
}

bool PositionMonomial::divides(const PositionMonomial& other) const {
    for (const auto& [pos, e] : exp_)
        if (other.exponent(pos.first, pos.second) < e) return false;
    return true;
}

std::vector<std::pair<int, int>> PositionMonomial::positions() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [pos, e] : exp_)
        for (int k = 0; k < e; ++k) out.push_back(pos);
    return out;
}

TwoLineArray monomial_to_array(const PositionMonomial& mon) {
    std::vector<int> top, bottom;
    // exp_ iterates row-major; reverse the column order within each row.
    int row = 0;
    std::vector<int> cols;
    auto flush = [&]() {
        for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
            top.push_back(row);
            bottom.push_back(*it);
        }
        cols.clear();
    };
    for (const auto& [pos, e] : mon.exponents()) {
        if (pos.first != row) {
            flush();
            row = pos.first;
        }
        for (int k = 0; k < e; ++k) cols.push_back(pos.second);
    }
    flush();
    return TwoLineArray(std::move(top), std::move(bottom));
}

PositionMonomial array_to_monomial(const TwoLineArray& arr, int m, int n) {
    PositionMonomial mon(m, n);
    for (std::size_t i = 0; i < arr.size(); ++i)
        mon.multiply_position(arr.top[i], arr.bottom[i]);
    return mon;
}

PositionMonomial full_matrix_monomial(int m, int n) {
    PositionMonomial mon(m, n);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) mon.set_exponent(i, j, 1);
    return mon;
}

std::vector<PositionMonomial> monomials_of_degree(int m, int n, int degree) {
    std::vector<PositionMonomial> out;
    PositionMonomial cur(m, n);
    // positions in row-major order, distribute the degree
    std::vector<std::pair<int, int>> vars;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) vars.emplace_back(i, j);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int remaining) {
        if (v + 1 == vars.size()) {
            if (remaining > 0) cur.set_exponent(vars[v].first, vars[v].second, remaining);
            out.push_back(cur);
            if (remaining > 0) cur.set_exponent(vars[v].first, vars[v].second, 0);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            if (e > 0) cur.set_exponent(vars[v].first, vars[v].second, e);
            rec(v + 1, remaining - e);
            if (e > 0) cur.set_exponent(vars[v].first, vars[v].second, 0);
        }
    };
    if (vars.empty()) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(0, degree);
    return out;
}

}  // namespace krsdet
