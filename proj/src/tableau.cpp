#include "krsdet/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace krsdet {

Tableau::Tableau(std::vector<std::vector<int>> rows, int bound)
    : rows_(std::move(rows)), bound_(bound) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i + 1 < rows_.size() && rows_[i].size() < rows_[i + 1].size())
            throw std::invalid_argument("tableau row lengths must be non-increasing");
        if (rows_[i].empty())
            throw std::invalid_argument("tableau rows must be non-empty");
        for (int e : rows_[i]) {
            if (e < 1 || (bound_ > 0 && e > bound_))
                throw std::invalid_argument("tableau entry out of range");
        }
    }
}

Shape Tableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Shape(std::move(parts));
}

int Tableau::size() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

bool Tableau::is_standard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j + 1 < rows_[i].size(); ++j)
            if (rows_[i][j] >= rows_[i][j + 1]) return false;
        if (i + 1 < rows_.size())
            for (std::size_t j = 0; j < rows_[i + 1].size(); ++j)
                if (rows_[i][j] > rows_[i + 1][j]) return false;
    }
    return true;
}

Minor::Minor(std::vector<int> r, std::vector<int> c)
    : rows(std::move(r)), cols(std::move(c)) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("minor needs equally many row and column indices");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i] >= rows[i + 1] || cols[i] >= cols[i + 1])
            throw std::invalid_argument("minor indices must be strictly increasing");
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] < 1 || cols[i] < 1)
            throw std::invalid_argument("minor indices must be positive");
}

bool Minor::operator<(const Minor& o) const {
    if (rows != o.rows) return rows < o.rows;
    return cols < o.cols;
}

bool minor_preceq(const Minor& a, const Minor& b) {
    if (a.size() < b.size()) return false;
    for (int i = 0; i < b.size(); ++i)
        if (a.rows[i] > b.rows[i] || a.cols[i] > b.cols[i]) return false;
    return true;
}

Bitableau::Bitableau(Tableau left, Tableau right)
    : left_(std::move(left)), right_(std::move(right)),
      m_(left_.bound()), n_(right_.bound()) {
    if (!(left_.shape() == right_.shape()))
        throw std::invalid_argument("bitableau tableaux must have equal shape");
    for (const auto& t : {left_, right_})
        for (const auto& r : t.rows())
            for (std::size_t j = 0; j + 1 < r.size(); ++j)
                if (r[j] >= r[j + 1])
                    throw std::invalid_argument("bitableau rows must strictly increase");
}

Bitableau::Bitableau(std::vector<Minor> factors, int m, int n) : m_(m), n_(n) {
    std::stable_sort(factors.begin(), factors.end(),
                     [](const Minor& a, const Minor& b) { return a.size() > b.size(); });
    std::vector<std::vector<int>> lrows, rrows;
    for (const auto& f : factors) {
        if (f.size() == 0) continue;  // empty minor contributes the factor 1
        if (f.rows.back() > m || f.cols.back() > n)
            throw std::invalid_argument("minor indices exceed matrix bounds");
        lrows.push_back(f.rows);
        rrows.push_back(f.cols);
    }
    left_ = Tableau(std::move(lrows), m);
    right_ = Tableau(std::move(rrows), n);
}

Minor Bitableau::factor(std::size_t i) const {
    return Minor(left_.rows().at(i), right_.rows().at(i));
}

std::vector<Minor> Bitableau::factors() const {
    std::vector<Minor> fs;
    for (std::size_t i = 0; i < factor_count(); ++i) fs.push_back(factor(i));
    return fs;
}

bool Bitableau::operator<(const Bitableau& o) const {
    if (!(left_ == o.left_)) return left_ < o.left_;
    return right_ < o.right_;
}

bool is_standard(const Bitableau& b) {
    return b.left().is_standard() && b.right().is_standard();
}

std::pair<std::vector<int>, std::vector<int>> content(const Bitableau& b) {
    std::vector<int> rows(b.m(), 0), cols(b.n(), 0);
    for (const auto& r : b.left().rows())
        for (int e : r) ++rows.at(e - 1);
    for (const auto& r : b.right().rows())
        for (int e : r) ++cols.at(e - 1);
    return {rows, cols};
}

Bitableau transpose(const Bitableau& b) {
    return Bitableau(b.right(), b.left());
}

std::vector<Tableau> standard_tableaux(const Shape& shape, int bound) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows;

    // Fill row by row; each row is a strictly increasing sequence bounded
    // below, entrywise, by the previous row.
    std::function<void(std::size_t)> fill_row = [&](std::size_t i) {
        if (i == shape.length()) {
            out.emplace_back(rows, bound);
            return;
        }
        int len = shape.parts()[i];
        std::vector<int> row(len);
        std::function<void(int)> fill_entry = [&](int j) {
            if (j == len) {
                rows.push_back(row);
                fill_row(i + 1);
                rows.pop_back();
                return;
            }
            int lo = j > 0 ? row[j - 1] + 1 : 1;
            if (i > 0) lo = std::max(lo, rows[i - 1][j]);
            for (int v = lo; v <= bound - (len - 1 - j); ++v) {
                row[j] = v;
                fill_entry(j + 1);
            }
        };
        fill_entry(0);
        return;
    };
    fill_row(0);
    return out;
}

std::vector<Bitableau> standard_bitableaux(int degree, int m, int n) {
    std::vector<Bitableau> out;
    if (degree == 0) {
        out.emplace_back(std::vector<Minor>{}, m, n);
        return out;
    }
    for (const Shape& sh : partitions_of(degree, std::min(m, n))) {
        auto lefts = standard_tableaux(sh, m);
        auto rights = standard_tableaux(sh, n);
        for (const auto& l : lefts)
            for (const auto& r : rights)
                out.emplace_back(l, r);
    }
    return out;
}

std::vector<Minor> all_minors(int m, int n, int size) {
    std::vector<Minor> out;
    std::vector<std::vector<int>> row_sets, col_sets;
    std::function<void(int, int, int, std::vector<int>&, std::vector<std::vector<int>>&)> subsets =
        [&](int from, int bound, int remaining, std::vector<int>& acc,
            std::vector<std::vector<int>>& sink) {
            if (remaining == 0) {
                sink.push_back(acc);
                return;
            }
            for (int v = from; v <= bound - remaining + 1; ++v) {
                acc.push_back(v);
                subsets(v + 1, bound, remaining - 1, acc, sink);
                acc.pop_back();
            }
        };
    std::vector<int> acc;
    subsets(1, m, size, acc, row_sets);
    subsets(1, n, size, acc, col_sets);
    for (const auto& r : row_sets)
        for (const auto& c : col_sets) out.emplace_back(r, c);
    return out;
}

std::vector<Minor> all_minors(int m, int n) {
    std::vector<Minor> out;
    for (int t = 1; t <= std::min(m, n); ++t) {
        auto ms = all_minors(m, n, t);
        out.insert(out.end(), ms.begin(), ms.end());
    }
    return out;
}

}  // namespace krsdet
