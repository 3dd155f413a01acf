#include "krsdet/krs.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace krsdet {

DeletionResult delete_at(const Tableau& t, int p) {
    if (!t.is_standard())
        throw std::invalid_argument("delete_at requires a standard tableau");
    auto rows = t.rows();
    std::size_t pi = static_cast<std::size_t>(p) - 1;
    if (p < 1 || pi >= rows.size())
        throw std::invalid_argument("row index out of range");
    std::size_t below = pi + 1 < rows.size() ? rows[pi + 1].size() : 0;
    if (rows[pi].size() <= below)
        throw std::invalid_argument("row p must be strictly longer than row p+1");

    // k_p is the last index of row p; k_i for i < p is the largest index with
    // a[i][k_i] <= a[i+1][k_{i+1}].
    int carried = rows[pi].back();
    rows[pi].pop_back();
    if (rows[pi].empty()) rows.erase(rows.begin() + pi);
    for (std::size_t i = pi; i-- > 0;) {
        auto& row = rows[i];
        std::size_t k = row.size();
        while (k > 0 && row[k - 1] > carried) --k;
        if (k == 0)
            throw std::invalid_argument("deletion bump failed; tableau not standard");
        std::swap(row[k - 1], carried);
    }
    return DeletionResult{Tableau(std::move(rows), t.bound()), carried};
}

std::pair<Tableau, int> insert(const Tableau& t, int x) {
    if (!t.is_standard())
        throw std::invalid_argument("insert requires a standard tableau");
    auto rows = t.rows();
    int carried = x;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({carried});
            return {Tableau(std::move(rows), t.bound()), static_cast<int>(i) + 1};
        }
        auto& row = rows[i];
        if (carried > row.back()) {
            row.push_back(carried);
            return {Tableau(std::move(rows), t.bound()), static_cast<int>(i) + 1};
        }
        auto it = std::lower_bound(row.begin(), row.end(), carried);
        std::swap(*it, carried);
    }
}

TwoLineArray krs(const Bitableau& b) {
    if (!is_standard(b))
        throw std::invalid_argument("krs requires a standard bitableau");
    auto lrows = b.left().rows();
    Tableau right = b.right();
    std::deque<int> top, bottom;
    while (!lrows.empty()) {
        // Pivot: bottom-most occurrence of the largest left entry. Rows
        // strictly increase, so each row's maximum is its last entry.
        int best = 0;
        std::size_t prow = 0;
        for (std::size_t i = 0; i < lrows.size(); ++i) {
            if (lrows[i].back() >= best) {
                best = lrows[i].back();
                prow = i;
            }
        }
        lrows[prow].pop_back();
        if (lrows[prow].empty()) lrows.erase(lrows.begin() + prow);
        DeletionResult del = delete_at(right, static_cast<int>(prow) + 1);
        right = del.tableau;
        top.push_front(best);
        bottom.push_front(del.bumped);
    }
    return TwoLineArray(std::vector<int>(top.begin(), top.end()),
                        std::vector<int>(bottom.begin(), bottom.end()));
}

Bitableau krs_inverse(const TwoLineArray& arr, int m, int n) {
    Tableau right({}, n);
    std::vector<std::vector<int>> lrows;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        auto [next, p] = insert(right, arr.bottom[i]);
        right = next;
        std::size_t pi = static_cast<std::size_t>(p) - 1;
        if (pi == lrows.size()) lrows.emplace_back();
        lrows[pi].push_back(arr.top[i]);
    }
    Bitableau out(Tableau(std::move(lrows), m), right);
    return out;
}

PositionMonomial krs_monomial(const Bitableau& b) {
    return array_to_monomial(krs(b), b.m(), b.n());
}

Bitableau krs_inverse(const PositionMonomial& mon) {
    return krs_inverse(monomial_to_array(mon), mon.m(), mon.n());
}

Tableau ins(const std::vector<int>& seq) {
    Tableau t({}, 0);
    for (int x : seq) {
        if (x < 1) throw std::invalid_argument("sequence entries must be positive");
        t = insert(t, x).first;
    }
    return t;
}

std::vector<int> canonical_sequence(const Tableau& t) {
    if (!t.is_standard())
        throw std::invalid_argument("canonical_sequence requires a standard tableau");
    std::vector<int> seq;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        seq.insert(seq.end(), it->begin(), it->end());
    return seq;
}

std::set<std::vector<int>> knuth_neighbors(const std::vector<int>& seq) {
    std::set<std::vector<int>> out;
    for (std::size_t i = 0; i + 3 <= seq.size(); ++i) {
        int a = seq[i], b = seq[i + 1], c = seq[i + 2];
        // Type (1) swaps the last two of (y,z,w) <-> (y,w,z) with z <= y < w.
        if ((b <= a && a < c) || (c <= a && a < b)) {
            auto s = seq;
            std::swap(s[i + 1], s[i + 2]);
            out.insert(std::move(s));
        }
        // Type (2) swaps the first two of (z,w,y) <-> (w,z,y) with z < y <= w.
        if ((a < c && c <= b) || (b < c && c <= a)) {
            auto s = seq;
            std::swap(s[i], s[i + 1]);
            out.insert(std::move(s));
        }
    }
    return out;
}

bool knuth_equivalent(const std::vector<int>& r, const std::vector<int>& s,
                      std::size_t max_len) {
    if (r.size() > max_len || s.size() > max_len)
        throw std::invalid_argument("knuth_equivalent: sequence exceeds length bound");
    if (r.size() != s.size()) return false;
    if (r == s) return true;
    std::set<std::vector<int>> seen{r};
    std::deque<std::vector<int>> queue{r};
    while (!queue.empty()) {
        auto cur = queue.front();
        queue.pop_front();
        for (const auto& nb : knuth_neighbors(cur)) {
            if (nb == s) return true;
            if (seen.insert(nb).second) queue.push_back(nb);
        }
    }
    return false;
}

}  // namespace krsdet
