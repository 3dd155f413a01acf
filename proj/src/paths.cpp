#include "krsdet/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace krsdet {

bool grid_leq(const GridPoint& a, const GridPoint& b) {
    return a.first <= b.first && a.second >= b.second;
}

bool grid_prec(const GridPoint& a, const GridPoint& b) {
    return a.first < b.first && a.second < b.second;
}

std::set<GridPoint> PathFamily::points() const {
    std::set<GridPoint> out;
    for (const auto& p : paths) out.insert(p.begin(), p.end());
    return out;
}

std::size_t PathFamily::point_count() const {
    std::size_t c = 0;
    for (const auto& p : paths) c += p.size();
    return c;
}

long long HilbertSeries::multiplicity() const {
    long long s = 0;
    for (long long h : numerator) s += h;
    return s;
}

bool is_face(const std::set<GridPoint>& points, int m, int n, int t) {
    for (const auto& [i, j] : points)
        if (i < 1 || i > m || j < 1 || j > n)
            throw std::invalid_argument("point outside the grid");
    // longest chain of the strict order prec = largest antichain of the grid
    // order
    std::vector<GridPoint> pts(points.begin(), points.end());
    std::vector<int> best(pts.size(), 1);
    int longest = pts.empty() ? 0 : 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (grid_prec(pts[j], pts[i])) best[i] = std::max(best[i], best[j] + 1);
        longest = std::max(longest, best[i]);
    }
    return longest < t;
}

namespace {

void enumerate_paths(GridPoint from, GridPoint to, const std::set<GridPoint>& blocked,
                     std::vector<GridPoint>& cur,
                     const std::function<void(const std::vector<GridPoint>&)>& visit) {
    if (blocked.count(cur.back())) return;
    if (cur.back() == to) {
        visit(cur);
        return;
    }
    auto [i, j] = cur.back();
    if (i < to.first) {
        cur.emplace_back(i + 1, j);
        enumerate_paths(from, to, blocked, cur, visit);
        cur.pop_back();
    }
    if (j > to.second) {
        cur.emplace_back(i, j - 1);
        enumerate_paths(from, to, blocked, cur, visit);
        cur.pop_back();
    }
}

// Total order on same-endpoint paths: lexicographic on the walking-order
// point lists. It extends "P is to the right of Q" (P exiting each row at a
// weakly smaller column): at the first divergence the right-hand path steps
// left while the other steps down.
bool path_less(const std::vector<GridPoint>& p, const std::vector<GridPoint>& q) {
    return p < q;
}

bool family_less(const PathFamily& a, const PathFamily& b) {
    for (std::size_t i = a.paths.size(); i-- > 0;) {
        if (a.paths[i] == b.paths[i]) continue;
        return path_less(a.paths[i], b.paths[i]);
    }
    return false;
}

}  // namespace

std::vector<PathFamily> facets(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("facets requires 1 <= t <= min(m,n)");
    std::vector<PathFamily> out;
    if (t == 1) {
        out.emplace_back();  // the complex {emptyset}
        return out;
    }
    PathFamily fam;
    std::set<GridPoint> used;
    std::function<void(int)> rec = [&](int i) {
        if (i == t) {
            out.push_back(fam);
            return;
        }
        std::vector<GridPoint> cur{{i, n}};
        enumerate_paths({i, n}, {m, i}, used, cur, [&](const std::vector<GridPoint>& path) {
            fam.paths.push_back(path);
            for (const auto& pt : path) used.insert(pt);
            rec(i + 1);
            for (const auto& pt : path) used.erase(pt);
            fam.paths.pop_back();
        });
    };
    rec(1);
    shelling_order(out);
    return out;
}

std::vector<std::vector<GridPoint>> light_shadow(const std::set<GridPoint>& face, int m,
                                                 int n, int t) {
    std::vector<std::vector<GridPoint>> chains;
    std::set<GridPoint> rest = face;
    while (!rest.empty()) {
        std::vector<GridPoint> minimal;
        for (const auto& p : rest) {
            bool is_min = true;
            for (const auto& q : rest)
                if (grid_prec(q, p)) {
                    is_min = false;
                    break;
                }
            if (is_min) minimal.push_back(p);
        }
        // a prec-antichain is a chain of the grid order: sort along it
        std::sort(minimal.begin(), minimal.end(), [](const GridPoint& a, const GridPoint& b) {
            return a.first != b.first ? a.first < b.first : a.second > b.second;
        });
        for (const auto& p : minimal) rest.erase(p);
        chains.push_back(std::move(minimal));
    }
    if (static_cast<int>(chains.size()) > t - 1)
        throw std::invalid_argument("light_shadow: face contains a t-antichain");
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto& chain = chains[i];
        if (chain.front() != GridPoint{static_cast<int>(i) + 1, n} ||
            chain.back() != GridPoint{m, static_cast<int>(i) + 1})
            throw std::invalid_argument("light_shadow: chain endpoints do not span the grid");
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            int di = chain[k + 1].first - chain[k].first;
            int dj = chain[k + 1].second - chain[k].second;
            if (!((di == 1 && dj == 0) || (di == 0 && dj == -1)))
                throw std::invalid_argument("light_shadow: chain is not an unrefinable path");
        }
    }
    if (static_cast<int>(chains.size()) != t - 1)
        throw std::invalid_argument("light_shadow: face is not a facet");
    return chains;
}

std::set<GridPoint> right_turns(const std::vector<GridPoint>& path) {
    std::set<GridPoint> out;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        bool step_down = path[k].first == path[k - 1].first + 1;
        bool step_left = path[k + 1].second == path[k].second - 1;
        if (step_down && step_left) out.insert(path[k]);
    }
    return out;
}

std::set<GridPoint> right_turns(const PathFamily& family) {
    std::set<GridPoint> out;
    for (const auto& p : family.paths) {
        auto r = right_turns(p);
        out.insert(r.begin(), r.end());
    }
    return out;
}

void shelling_order(std::vector<PathFamily>& families) {
    std::sort(families.begin(), families.end(), family_less);
}

ShellingCertificate certify_shelling(const std::vector<PathFamily>& order) {
    ShellingCertificate cert;
    cert.restriction_sets.resize(order.size());
    std::vector<std::set<GridPoint>> pts;
    pts.reserve(order.size());
    for (const auto& f : order) pts.push_back(f.points());

    for (std::size_t i = 0; i < order.size(); ++i) {
        // c(F_i)
        for (std::size_t k = 0; k < i; ++k) {
            std::vector<GridPoint> diff;
            std::set_difference(pts[i].begin(), pts[i].end(), pts[k].begin(), pts[k].end(),
                                std::back_inserter(diff));
            if (diff.size() == 1) cert.restriction_sets[i].insert(diff[0]);
        }
        for (std::size_t j = 0; j < i; ++j) {
            // need v in F_i \ F_j with F_i \ F_k = {v} for some k < i
            std::vector<GridPoint> diff;
            std::set_difference(pts[i].begin(), pts[i].end(), pts[j].begin(), pts[j].end(),
                                std::back_inserter(diff));
            bool found = false;
            for (const auto& v : diff)
                if (cert.restriction_sets[i].count(v)) {
                    found = true;
                    break;
                }
            if (!found) {
                cert.valid = false;
                cert.failure = "facets " + std::to_string(j) + " and " + std::to_string(i) +
                               " violate the shelling condition";
                return cert;
            }
        }
    }
    cert.valid = true;
    cert.restrictions_are_right_turns = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (cert.restriction_sets[i] != right_turns(order[i]))
            cert.restrictions_are_right_turns = false;
    return cert;
}

std::vector<long long> h_vector(int m, int n, int t) {
    auto order = facets(m, n, t);
    auto cert = certify_shelling(order);
    if (!cert.valid) throw std::logic_error("facet order is not a shelling: " + cert.failure);
    std::vector<long long> h;
    for (const auto& c : cert.restriction_sets) {
        std::size_t j = c.size();
        if (h.size() <= j) h.resize(j + 1, 0);
        ++h[j];
    }
    return h;
}

namespace {

Int binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

long long to_ll(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("value exceeds long long");
    return v.get_si();
}

// dense univariate polynomials over Z, little-endian coefficients
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

// exact division; throws if not divisible
ZPoly zdiv(ZPoly num, const ZPoly& den) {
    ztrim(num);
    if (den.empty()) throw std::logic_error("polynomial division by zero");
    if (num.empty()) return {};
    if (num.size() < den.size()) throw std::logic_error("polynomial division is not exact");
    ZPoly q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int lead = num[k + den.size() - 1];
        if (lead == 0) continue;
        Int qc = lead / den.back();
        if (qc * den.back() != lead) throw std::logic_error("polynomial division is not exact");
        q[k] = qc;
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= qc * den[i];
    }
    ztrim(num);
    if (!num.empty()) throw std::logic_error("polynomial division is not exact");
    return q;
}

// fraction-free Bareiss determinant of a polynomial matrix
ZPoly zdet(std::vector<std::vector<ZPoly>> a) {
    std::size_t sz = a.size();
    if (sz == 0) return {Int(1)};
    int swap_sign = 1;
    ZPoly prev{Int(1)};
    for (std::size_t k = 0; k + 1 < sz; ++k) {
        if (a[k][k].empty()) {
            std::size_t swap_with = sz;
            for (std::size_t i = k + 1; i < sz; ++i)
                if (!a[i][k].empty()) {
                    swap_with = i;
                    break;
                }
            if (swap_with == sz) return {};
            std::swap(a[k], a[swap_with]);
            swap_sign = -swap_sign;
        }
        for (std::size_t i = k + 1; i < sz; ++i)
            for (std::size_t j = k + 1; j < sz; ++j)
                a[i][j] = zdiv(zsub(zmul(a[k][k], a[i][j]), zmul(a[i][k], a[k][j])), prev);
        prev = a[k][k];
    }
    ZPoly det = a[sz - 1][sz - 1];
    if (swap_sign < 0)
        for (auto& c : det) c = -c;
    return det;
}

std::vector<long long> determinant_numerator(int m, int n, int t) {
    // entries sum_k C(m-i,k) C(n-j,k) z^k, i,j = 1..t-1
    std::size_t sz = static_cast<std::size_t>(t) - 1;
    std::vector<std::vector<ZPoly>> mat(sz, std::vector<ZPoly>(sz));
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j) {
            int a = m - static_cast<int>(i) - 1, b = n - static_cast<int>(j) - 1;
            ZPoly p;
            for (int k = 0; k <= std::min(a, b); ++k) p.push_back(binom(a, k) * binom(b, k));
            mat[i][j] = std::move(p);
        }
    ZPoly det = zdet(std::move(mat));
    long long shift = static_cast<long long>(sz) * (sz - 1) / 2;  // C(t-1, 2)
    for (long long s = 0; s < shift; ++s) {
        if (det.empty() || det.front() != 0)
            throw std::logic_error("determinant numerator is not divisible by the z-shift");
        det.erase(det.begin());
    }
    std::vector<long long> out;
    for (const auto& c : det) out.push_back(to_ll(c));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

long long gv_multiplicity(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("gv_multiplicity requires 1 <= t <= min(m,n)");
    std::size_t sz = static_cast<std::size_t>(t) - 1;
    std::vector<std::vector<ZPoly>> mat(sz, std::vector<ZPoly>(sz));
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = 0; j < sz; ++j)
            mat[i][j] = {binom(m - static_cast<long long>(i) - 1 + n - static_cast<long long>(j) - 1,
                               m - static_cast<long long>(i) - 1)};
    ZPoly det = zdet(std::move(mat));
    return det.empty() ? 0 : to_ll(det[0]);
}

long long giambelli_multiplicity(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("giambelli_multiplicity requires 1 <= t <= min(m,n)");
    Rat prod = 1;
    for (int i = 0; i <= n - t; ++i) prod *= Rat(binom(m + i, t - 1)) / Rat(binom(t + i - 1, t - 1));
    if (prod.get_den() != 1)
        throw std::logic_error("Giambelli product is not an integer");
    return to_ll(Int(prod.get_num()));
}

HilbertSeries hilbert_series(int m, int n, int t) {
    auto order = facets(m, n, t);

    // route (i): right-turn generating polynomial
    std::vector<long long> by_turns;
    for (const auto& f : order) {
        std::size_t k = right_turns(f).size();
        if (by_turns.size() <= k) by_turns.resize(k + 1, 0);
        ++by_turns[k];
    }

    // route (ii): shelling restriction counts
    std::vector<long long> by_shelling = h_vector(m, n, t);

    // route (iii): the shifted binomial determinant
    std::vector<long long> by_det = determinant_numerator(m, n, t);
    if (by_det.empty()) by_det.push_back(1);  // t = 1: empty determinant

    if (by_turns != by_shelling || by_shelling != by_det)
        throw std::logic_error("Hilbert series numerator routes disagree");

    HilbertSeries hs;
    hs.numerator = by_det;
    hs.denom_degree = (m + n + 1 - t) * (t - 1);
    return hs;
}

long long hilbert_function(int m, int n, int t, int d) {
    HilbertSeries hs = hilbert_series(m, n, t);
    if (d < 0) return 0;
    long long sum = 0;
    for (std::size_t j = 0; j < hs.numerator.size(); ++j) {
        long long dd = d - static_cast<long long>(j);
        if (dd < 0) break;
        if (hs.denom_degree == 0)
            sum += dd == 0 ? hs.numerator[j] : 0;
        else
            sum += hs.numerator[j] * to_ll(binom(dd + hs.denom_degree - 1, hs.denom_degree - 1));
    }
    return sum;
}

int krull_dim(int m, int n, int t) {
    return (m + n - t + 1) * (t - 1);
}

}  // namespace krsdet
