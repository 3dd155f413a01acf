#include "krsdet/rees.hpp"

#include <algorithm>
#include <stdexcept>

#include "krsdet/greene.hpp"

namespace krsdet {

long long FacetLinearForm::evaluate(const BigradedMonomial& x) const {
    auto pts = facet.points();
    long long v = 0;
    for (const auto& [pos, e] : x.mon.exponents())
        if (!pts.count({pos.first, pos.second})) v += e;
    return v + static_cast<long long>(t_coefficient) * x.k;
}

bool in_ini_symbolic_rees(const BigradedMonomial& x, int t) {
    if (x.k < 0) throw std::invalid_argument("negative T-exponent");
    if (x.k == 0) return true;
    return hat_gamma(x.mon, t) >= x.k;
}

bool in_ini_symbolic_rees_by_forms(const BigradedMonomial& x, int t) {
    for (const auto& f : facets(x.mon.m(), x.mon.n(), t)) {
        FacetLinearForm form{f, -1};
        if (form.evaluate(x) < 0) return false;
    }
    return true;
}

bool in_ini_rees(const BigradedMonomial& x, int t) {
    for (int i = 1; i <= t; ++i)
        if (hat_gamma(x.mon, i) < x.k * (t + 1 - i)) return false;
    return true;
}

bool in_ini_rees_product(const BigradedMonomial& x, const std::vector<int>& factors) {
    if (factors.empty()) return true;
    Shape rho{std::vector<int>(factors)};
    for (int j = 1; j <= rho.parts()[0]; ++j)
        if (hat_gamma(x.mon, j) < static_cast<long long>(x.k) * gamma(rho, j)) return false;
    return true;
}

bool in_ini_rees_product_by_forms(const BigradedMonomial& x, const std::vector<int>& factors) {
    if (factors.empty()) return true;
    Shape rho{std::vector<int>(factors)};
    for (int j = 1; j <= rho.parts()[0]; ++j) {
        int gj = gamma(rho, j);
        for (const auto& f : facets(x.mon.m(), x.mon.n(), j)) {
            FacetLinearForm form{f, -gj};
            if (form.evaluate(x) < 0) return false;
        }
    }
    return true;
}

bool in_ini_At(const BigradedMonomial& x, int t) {
    if (x.mon.degree() != static_cast<long long>(t) * x.k) return false;
    return hat_gamma(x.mon, 2) >= x.k * (t - 1);
}

bool in_canonical_rees(const BigradedMonomial& x, int t) {
    if (x.k < 1) return false;
    if (!full_matrix_monomial(x.mon.m(), x.mon.n()).divides(x.mon)) return false;
    for (int i = 1; i <= t; ++i)
        if (hat_gamma(x.mon, i) < (t + 1 - i) * x.k + 1) return false;
    return true;
}

bool in_canonical_At(const BigradedMonomial& x, int t) {
    if (x.mon.degree() != static_cast<long long>(t) * x.k) return false;
    if (x.k < 1) return false;
    if (!full_matrix_monomial(x.mon.m(), x.mon.n()).divides(x.mon)) return false;
    return hat_gamma(x.mon, 2) >= (t - 1) * x.k + 1;
}

long long gamma_of_X(int m, int n, int i) {
    if (i < 1 || i > std::min(m, n))
        throw std::invalid_argument("gamma_of_X requires 1 <= i <= min(m,n)");
    return static_cast<long long>(m - i + 1) * (n - i + 1);
}

Bitableau distinguished_D(int m, int n) {
    bool transposed = m > n;
    int mm = std::min(m, n), nn = std::max(m, n);
    std::vector<Minor> factors;
    for (int s = 1; s < mm; ++s) {
        std::vector<int> low_rows, low_cols, high_rows, high_cols;
        for (int i = 0; i < s; ++i) {
            low_rows.push_back(mm - s + 1 + i);
            low_cols.push_back(1 + i);
            high_rows.push_back(1 + i);
            high_cols.push_back(nn - s + 1 + i);
        }
        factors.emplace_back(low_rows, low_cols);
        factors.emplace_back(high_rows, high_cols);
    }
    for (int j = 1; j <= nn - mm + 1; ++j) {
        std::vector<int> rows, cols;
        for (int i = 0; i < mm; ++i) {
            rows.push_back(1 + i);
            cols.push_back(j + i);
        }
        factors.emplace_back(rows, cols);
    }
    if (transposed)
        for (auto& f : factors) std::swap(f.rows, f.cols);
    return Bitableau(std::move(factors), m, n);
}

GorensteinResult is_gorenstein_At(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("is_gorenstein_At requires 1 <= t <= min(m,n)");
    GorensteinResult res;
    if (t == 1) {
        res.gorenstein = true;
        res.clause = "t=1";
    } else if (t == std::min(m, n)) {
        res.gorenstein = true;
        res.clause = "t=min";
    } else if (m == n && t == m - 1) {
        res.gorenstein = true;
        res.clause = "t=m-1=n-1";
    } else if (static_cast<long long>(m) * n == static_cast<long long>(t) * (m + n)) {
        res.gorenstein = true;
        res.clause = "mn=t(m+n)";
    } else {
        res.clause = "none";
    }
    return res;
}

int dim_At(int m, int n, int t) {
    if (t < 1 || t > std::min(m, n))
        throw std::invalid_argument("dim_At requires 1 <= t <= min(m,n)");
    int mm = std::min(m, n), nn = std::max(m, n);
    if (t == mm) return mm * (nn - mm) + 1;
    return m * n;
}

}  // namespace krsdet
