#include "krsdet/straighten.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace krsdet {

namespace {

using Cols = std::vector<int>;

// sorts a bracket's columns; returns 0 on a repeated index, else the sign of
// the sorting permutation
int normalize_bracket(Cols& c) {
    int sign = 1;
    for (std::size_t i = 1; i < c.size(); ++i)
        for (std::size_t j = i; j > 0 && c[j - 1] >= c[j]; --j) {
            if (c[j - 1] == c[j]) return 0;
            std::swap(c[j - 1], c[j]);
            sign = -sign;
        }
    return sign;
}

bool cols_leq(const Cols& a, const Cols& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// coefficient map over ordered products of two sorted brackets
using PairRep = std::map<std::pair<Cols, Cols>, Rat>;

// Straightens the product [a][b] of two maximal minors (sorted column
// lists). All terms in the result are standard pairs (first <= second
// componentwise). Memoized; terminates by the classical exchange argument.
const PairRep& straighten_bracket_pair(const Cols& a, const Cols& b,
                                       std::map<std::pair<Cols, Cols>, PairRep>& memo) {
    auto key = std::make_pair(a, b);
    auto found = memo.find(key);
    if (found != memo.end()) return found->second;

    PairRep rep;
    if (cols_leq(a, b)) {
        rep[{a, b}] = 1;
        return memo.emplace(key, std::move(rep)).first->second;
    }
    if (cols_leq(b, a)) {
        rep[{b, a}] = 1;
        return memo.emplace(key, std::move(rep)).first->second;
    }

    std::size_t msz = a.size();
    std::size_t p = 0;
    while (a[p] <= b[p]) ++p;  // first violation; exists since a !<= b

    // Pluecker relation with c = (a_{p+1},...,a_m, b_1,...,b_{p+1}); the
    // identity split reproduces [a][b], every other split is strictly
    // smaller in the exchange order.
    Cols c(a.begin() + p, a.end());
    c.insert(c.end(), b.begin(), b.begin() + p + 1);
    std::size_t s = c.size();       // m - p + 1... total m + 1
    std::size_t t = msz - p;        // first bracket takes t of the c's

    std::vector<int> pick(t);
    PairRep expansion;
    std::vector<char> in_first(s, 0);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t got) {
        if (got == t) {
            bool identity = true;
            for (std::size_t i = 0; i < t; ++i)
                if (pick[i] != static_cast<int>(i)) identity = false;
            if (identity) return;

            std::fill(in_first.begin(), in_first.end(), 0);
            for (int i : pick) in_first[i] = 1;
            // sign of the permutation (i_1..i_t, complement)
            int inv = 0;
            std::vector<int> order;
            order.reserve(s);
            for (int i : pick) order.push_back(i);
            for (std::size_t i = 0; i < s; ++i)
                if (!in_first[i]) order.push_back(static_cast<int>(i));
            for (std::size_t i = 0; i < s; ++i)
                for (std::size_t j = i + 1; j < s; ++j)
                    if (order[i] > order[j]) ++inv;
            int sigma = inv % 2 == 0 ? 1 : -1;

            Cols first(a.begin(), a.begin() + p);
            for (int i : pick) first.push_back(c[i]);
            Cols second;
            for (std::size_t i = 0; i < s; ++i)
                if (!in_first[i]) second.push_back(c[i]);
            second.insert(second.end(), b.begin() + p + 1, b.end());

            int s1 = normalize_bracket(first);
            if (s1 == 0) return;
            int s2 = normalize_bracket(second);
            if (s2 == 0) return;
            expansion[{first, second}] += Rat(-sigma * s1 * s2);
            return;
        }
        for (std::size_t i = from; i + (t - got) <= s; ++i) {
            pick[got] = static_cast<int>(i);
            choose(i + 1, got + 1);
        }
    };
    choose(0, 0);

    for (const auto& [pair, coeff] : expansion) {
        if (coeff == 0) continue;
        const PairRep& sub = straighten_bracket_pair(pair.first, pair.second, memo);
        for (const auto& [spair, scoeff] : sub) {
            Rat v = coeff * scoeff;
            auto it = rep.find(spair);
            if (it == rep.end())
                rep.emplace(spair, v);
            else {
                it->second += v;
                if (it->second == 0) rep.erase(it);
            }
        }
    }
    return memo.emplace(key, std::move(rep)).first->second;
}

std::map<std::pair<Cols, Cols>, PairRep>& pair_memo() {
    thread_local std::map<std::pair<Cols, Cols>, PairRep> memo;
    return memo;
}

}  // namespace

StraightRepresentation straighten_maximal(const Minor& g, const Minor& d, int m, int n) {
    if (g.size() != m || d.size() != m)
        throw std::invalid_argument("straighten_maximal requires maximal minors");
    for (int i = 0; i < m; ++i)
        if (g.rows[i] != i + 1 || d.rows[i] != i + 1)
            throw std::invalid_argument("maximal minors must use rows 1..m");
    const PairRep& rep = straighten_bracket_pair(g.cols, d.cols, pair_memo());
    StraightRepresentation out;
    for (const auto& [pair, coeff] : rep) {
        std::vector<int> rows(m);
        for (int i = 0; i < m; ++i) rows[i] = i + 1;
        Bitableau b({Minor(rows, pair.first), Minor(rows, pair.second)}, m, n);
        out.push_back({coeff, std::move(b)});
    }
    return out;
}

std::pair<int, Minor> phi_specialize(const std::vector<int>& cols, int m, int n) {
    Cols c(cols);
    int sign = normalize_bracket(c);
    if (sign == 0) throw std::invalid_argument("repeated column index");
    if (static_cast<int>(c.size()) != m)
        throw std::invalid_argument("phi acts on maximal minors of the extended matrix");
    if (c.back() > n + m || c.front() < 1)
        throw std::invalid_argument("column index out of range");

    // columns beyond n are unit vectors with unit entry in row n+m+1-b;
    // expand the determinant along them, rightmost first
    std::vector<int> live_rows(m);
    for (int i = 0; i < m; ++i) live_rows[i] = i + 1;
    std::vector<int> live_cols(c);
    while (!live_cols.empty() && live_cols.back() > n) {
        int b = live_cols.back();
        int unit_row = n + m + 1 - b;
        auto rpos = std::find(live_rows.begin(), live_rows.end(), unit_row);
        if (rpos == live_rows.end())
            throw std::logic_error("unit row eliminated twice");
        int rindex = static_cast<int>(rpos - live_rows.begin()) + 1;
        int cindex = static_cast<int>(live_cols.size());
        if ((rindex + cindex) % 2 != 0) sign = -sign;
        live_rows.erase(rpos);
        live_cols.pop_back();
    }
    return {sign, Minor(live_rows, live_cols)};
}

std::pair<int, std::vector<int>> phi_lift(const Minor& minor, int m, int n) {
    std::vector<char> in_rows(m + 1, 0);
    for (int r : minor.rows) {
        if (r > m) throw std::invalid_argument("row index exceeds m");
        in_rows[r] = 1;
    }
    Cols cols(minor.cols);
    for (int u = 1; u <= m; ++u)
        if (!in_rows[u]) cols.push_back(n + m + 1 - u);
    std::sort(cols.begin(), cols.end());
    auto [sign, back] = phi_specialize(cols, m, n);
    if (!(back == minor)) throw std::logic_error("phi_lift does not invert phi_specialize");
    return {sign, cols};
}

StraightRepresentation straighten(const Bitableau& b) {
    int m = b.m(), n = b.n();
    if (b.empty()) return {StraightTerm{1, b}};

    // lift every factor to a maximal minor of the extended m x (n+m) matrix
    Rat lead_sign = 1;
    std::vector<Cols> brackets;
    for (const auto& f : b.factors()) {
        auto [sign, cols] = phi_lift(f, m, n);
        lead_sign *= sign;
        brackets.push_back(std::move(cols));
    }

    std::map<std::vector<Cols>, Rat> work{{brackets, lead_sign}};
    auto& memo = pair_memo();
    bool changed = true;
    int fuel = 1000000;  // the exchange argument bounds the rewriting
    while (changed) {
        if (--fuel < 0) throw std::logic_error("straightening did not terminate");
        changed = false;
        std::map<std::vector<Cols>, Rat> next;
        for (const auto& [prod, coeff] : work) {
            std::size_t bad = prod.size();
            for (std::size_t i = 0; i + 1 < prod.size(); ++i)
                if (!cols_leq(prod[i], prod[i + 1])) {
                    bad = i;
                    break;
                }
            if (bad == prod.size()) {
                next[prod] += coeff;
                continue;
            }
            changed = true;
            const PairRep& rep = straighten_bracket_pair(prod[bad], prod[bad + 1], memo);
            for (const auto& [pair, c] : rep) {
                std::vector<Cols> replaced(prod);
                replaced[bad] = pair.first;
                replaced[bad + 1] = pair.second;
                next[replaced] += coeff * c;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        work = std::move(next);
    }

    // push the straightened bracket products back down to K[X]
    std::map<Bitableau, Rat> acc;
    for (const auto& [prod, coeff] : work) {
        Rat c = coeff;
        std::vector<Minor> factors;
        for (const auto& cols : prod) {
            auto [sign, minor] = phi_specialize(cols, m, n);
            c *= sign;
            if (minor.size() > 0) factors.push_back(minor);
        }
        Bitableau bt(std::move(factors), m, n);
        if (!is_standard(bt))
            throw std::logic_error("straightening produced a non-standard bitableau");
        acc[bt] += c;
    }

    StraightRepresentation out;
    for (const auto& [bt, c] : acc)
        if (c != 0) out.push_back({c, bt});
    return out;
}

StraightRepresentation straighten_oracle(const Bitableau& b, int max_degree) {
    int m = b.m(), n = b.n();
    int d = b.degree();
    if (d > max_degree)
        throw std::invalid_argument("straighten_oracle: degree exceeds configured bound");
    ExactPolynomial target = expand_bitableau(b);
    auto [crows, ccols] = content(b);

    std::vector<Bitableau> candidates;
    for (const auto& sb : standard_bitableaux(d, m, n)) {
        auto [r, c] = content(sb);
        if (r == crows && c == ccols) candidates.push_back(sb);
    }

    // echelonize candidate expansions, tracking the coefficients of each
    // echelon row over the candidates
    struct TrackedRow {
        RowSpace::Row row;
        std::vector<Rat> combo;
    };
    std::vector<TrackedRow> echelon;
    std::map<Expo, std::size_t, DiagGreater> pivot_of;
    auto to_row = [](const ExactPolynomial& p) {
        RowSpace::Row r;
        r.reserve(p.term_count());
        for (const auto& [e, c] : p.terms()) r.emplace_back(e, c);
        return r;
    };
    DiagGreater gt;
    auto axpy = [&gt](RowSpace::Row&& row, const Rat& c, const RowSpace::Row& piv) {
        RowSpace::Row out;
        out.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() && j < piv.size()) {
            if (row[i].first == piv[j].first) {
                Rat v = row[i].second - c * piv[j].second;
                if (v != 0) out.emplace_back(std::move(row[i].first), std::move(v));
                ++i, ++j;
            } else if (gt(row[i].first, piv[j].first)) {
                out.emplace_back(std::move(row[i]));
                ++i;
            } else {
                out.emplace_back(piv[j].first, -c * piv[j].second);
                ++j;
            }
        }
        for (; i < row.size(); ++i) out.emplace_back(std::move(row[i]));
        for (; j < piv.size(); ++j) out.emplace_back(piv[j].first, -c * piv[j].second);
        return out;
    };

    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
        TrackedRow tr;
        tr.row = to_row(expand_bitableau(candidates[ci]));
        tr.combo.assign(candidates.size(), 0);
        tr.combo[ci] = 1;
        while (!tr.row.empty()) {
            auto it = pivot_of.find(tr.row.front().first);
            if (it == pivot_of.end()) break;
            const TrackedRow& piv = echelon[it->second];
            Rat c = tr.row.front().second;
            tr.row = axpy(std::move(tr.row), c, piv.row);
            for (std::size_t k = 0; k < tr.combo.size(); ++k) tr.combo[k] -= c * piv.combo[k];
        }
        if (tr.row.empty())
            throw std::logic_error(
                "standard bitableaux of equal content are linearly dependent; "
                "this contradicts the straightening basis theorem");
        Rat lead = tr.row.front().second;
        for (auto& [e, c] : tr.row) c /= lead;
        for (auto& c : tr.combo) c /= lead;
        pivot_of.emplace(tr.row.front().first, echelon.size());
        echelon.push_back(std::move(tr));
    }

    // express the target over the echelon rows
    RowSpace::Row rest = to_row(target);
    std::vector<Rat> solution(candidates.size(), 0);
    while (!rest.empty()) {
        auto it = pivot_of.find(rest.front().first);
        if (it == pivot_of.end())
            throw std::logic_error(
                "bitableau expansion escapes the span of equal-content standard "
                "bitableaux; this contradicts the straightening theorem");
        const TrackedRow& piv = echelon[it->second];
        Rat c = rest.front().second;
        rest = axpy(std::move(rest), c, piv.row);
        for (std::size_t k = 0; k < solution.size(); ++k) solution[k] += c * piv.combo[k];
    }

    StraightRepresentation out;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci)
        if (solution[ci] != 0) out.push_back({solution[ci], candidates[ci]});
    return out;
}

ExactPolynomial expand_representation(const StraightRepresentation& rep, int m, int n) {
    ExactPolynomial out(m, n);
    for (const auto& term : rep) out += expand_bitableau(term.bitableau) * term.coeff;
    return out;
}

}  // namespace krsdet
