#include "krsdet/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace krsdet {

Expo expo_of(const PositionMonomial& mon) {
    Expo e(static_cast<std::size_t>(mon.m()) * mon.n(), 0);
    for (const auto& [pos, exp] : mon.exponents())
        e[static_cast<std::size_t>(pos.first - 1) * mon.n() + (pos.second - 1)] = exp;
    return e;
}

PositionMonomial monomial_of(const Expo& e, int m, int n) {
    PositionMonomial mon(m, n);
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v] != 0)
            mon.set_exponent(static_cast<int>(v) / n + 1, static_cast<int>(v) % n + 1, e[v]);
    return mon;
}

ExactPolynomial ExactPolynomial::monomial(const PositionMonomial& mon, const Rat& c) {
    ExactPolynomial p(mon.m(), mon.n());
    p.add_term(expo_of(mon), c);
    return p;
}

ExactPolynomial ExactPolynomial::constant(int m, int n, const Rat& c) {
    ExactPolynomial p(m, n);
    p.add_term(Expo(static_cast<std::size_t>(m) * n, 0), c);
    return p;
}

const Expo& ExactPolynomial::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    return terms_.begin()->first;
}

const Rat& ExactPolynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

int ExactPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

void ExactPolynomial::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& o) const {
    ExactPolynomial out(m_, n_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

ExactPolynomial ExactPolynomial::operator*(const Rat& c) const {
    ExactPolynomial out(m_, n_);
    if (c == 0) return out;
    for (const auto& [e, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, coeff * c);
    return out;
}

std::string ExactPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = a == 1;
        bool any = false;
        std::ostringstream vars;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            any = true;
            vars << "X[" << static_cast<int>(v) / n_ + 1 << "," << static_cast<int>(v) % n_ + 1
                 << "]";
            if (e[v] > 1) vars << "^" << e[v];
        }
        if (!any)
            os << a.get_str();
        else if (unit)
            os << vars.str();
        else
            os << a.get_str() << "*" << vars.str();
    }
    return os.str();
}

ExactPolynomial expand_minor(const Minor& minor, int m, int n) {
    int t = minor.size();
    if (t == 0) return ExactPolynomial::constant(m, n, 1);
    if (minor.rows.back() > m || minor.cols.back() > n)
        throw std::invalid_argument("minor indices exceed matrix bounds");
    // cofactor expansion along the first remaining row, memoized on the
    // column subset
    std::vector<std::map<unsigned, ExactPolynomial>> memo(t + 1);
    std::function<ExactPolynomial(int, unsigned)> rec = [&](int r, unsigned mask) {
        if (r == t) return ExactPolynomial::constant(m, n, 1);
        auto it = memo[r].find(mask);
        if (it != memo[r].end()) return it->second;
        ExactPolynomial out(m, n);
        int sign = 1;
        for (int j = 0; j < t; ++j) {
            if (!(mask & (1u << j))) continue;
            PositionMonomial var(m, n);
            var.set_exponent(minor.rows[r], minor.cols[j], 1);
            ExactPolynomial term = ExactPolynomial::monomial(var, sign);
            out += term * rec(r + 1, mask & ~(1u << j));
            sign = -sign;
        }
        memo[r].emplace(mask, out);
        return out;
    };
    return rec(0, (1u << t) - 1);
}

ExactPolynomial expand_bitableau(const Bitableau& b) {
    ExactPolynomial out = ExactPolynomial::constant(b.m(), b.n(), 1);
    for (const auto& f : b.factors()) out = out * expand_minor(f, b.m(), b.n());
    return out;
}

namespace {

RowSpace::Row to_row(const ExactPolynomial& p) {
    RowSpace::Row r;
    r.reserve(p.term_count());
    for (const auto& [e, c] : p.terms()) r.emplace_back(e, c);
    return r;
}

ExactPolynomial to_poly(const RowSpace::Row& r, int m, int n) {
    ExactPolynomial p(m, n);
    for (const auto& [e, c] : r) p.add_term(e, c);
    return p;
}

// row -= c * piv, merging in one pass
RowSpace::Row axpy(RowSpace::Row&& row, const Rat& c, const RowSpace::Row& piv) {
    RowSpace::Row out;
    out.reserve(row.size() + piv.size());
    DiagGreater gt;
    std::size_t i = 0, j = 0;
    while (i < row.size() && j < piv.size()) {
        if (row[i].first == piv[j].first) {
            Rat v = row[i].second - c * piv[j].second;
            if (v != 0) out.emplace_back(std::move(row[i].first), std::move(v));
            ++i;
            ++j;
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
}

}  // namespace

RowSpace::Row RowSpace::reduce_row(Row r) const {
    while (!r.empty()) {
        auto it = pivot_of_.find(r.front().first);
        if (it == pivot_of_.end()) break;
        r = axpy(std::move(r), r.front().second, rows_[it->second]);
    }
    return r;
}

bool RowSpace::add(ExactPolynomial p) {
    Row r = reduce_row(to_row(p));
    if (r.empty()) return false;
    Rat lead = r.front().second;
    if (lead != 1)
        for (auto& [e, c] : r) c /= lead;
    pivot_of_.emplace(r.front().first, rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

ExactPolynomial RowSpace::reduce(const ExactPolynomial& p) const {
    return to_poly(reduce_row(to_row(p)), m_, n_);
}

std::set<Expo, DiagGreater> RowSpace::pivot_monomials() const {
    std::set<Expo, DiagGreater> out;
    for (const auto& [e, idx] : pivot_of_) out.insert(e);
    return out;
}

std::vector<ExactPolynomial> RowSpace::rows() const {
    std::vector<ExactPolynomial> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(to_poly(r, m_, n_));
    return out;
}

std::set<Expo, DiagGreater> initial_space(const std::vector<ExactPolynomial>& polys) {
    if (polys.empty()) return {};
    int deg = -1;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (deg == -1) deg = p.degree();
        if (p.degree() != deg)
            throw std::invalid_argument("initial_space requires equal-degree homogeneous input");
    }
    RowSpace space(polys.front().m(), polys.front().n());
    for (const auto& p : polys)
        if (!p.is_zero()) space.add(p);
    return space.pivot_monomials();
}

namespace {

void check_options(const IdealSpec&, int degree, int m, int n, const ComponentOptions& opts) {
    if (degree > opts.max_degree)
        throw std::invalid_argument("ideal_component: degree exceeds configured bound");
    if (m * n > opts.max_cells)
        throw std::invalid_argument("ideal_component: matrix exceeds configured bound");
}

// products of minors with the given factor sizes, as polynomials
void for_each_factor_product(int m, int n, const std::vector<int>& sizes,
                             const std::function<void(const ExactPolynomial&)>& visit) {
    // group equal sizes; choose multisets within each group
    std::vector<std::pair<int, int>> groups;  // (size, count)
    for (int s : sizes) {
        if (!groups.empty() && groups.back().first == s)
            ++groups.back().second;
        else
            groups.emplace_back(s, 1);
    }
    std::vector<std::vector<ExactPolynomial>> pool;
    for (auto [s, cnt] : groups) {
        std::vector<ExactPolynomial> ps;
        for (const auto& mi : all_minors(m, n, s)) ps.push_back(expand_minor(mi, m, n));
        pool.push_back(std::move(ps));
    }
    ExactPolynomial acc = ExactPolynomial::constant(m, n, 1);
    std::function<void(std::size_t, int, int, const ExactPolynomial&)> rec =
        [&](std::size_t g, int kth, int from, const ExactPolynomial& prod) {
            if (g == groups.size()) {
                visit(prod);
                return;
            }
            auto [s, cnt] = groups[g];
            if (kth == cnt) {
                rec(g + 1, 0, 0, prod);
                return;
            }
            for (int i = from; i < static_cast<int>(pool[g].size()); ++i)
                rec(g, kth + 1, i, prod * pool[g][i]);
        };
    rec(0, 0, 0, acc);
}

}  // namespace

RowSpace ideal_component(const IdealSpec& spec, int degree, int m, int n,
                         const ComponentOptions& opts) {
    check_options(spec, degree, m, n, opts);
    RowSpace space(m, n);
    if (degree < 0) return space;

    auto add_monomial_multiples = [&](const std::vector<ExactPolynomial>& gens, int gdeg) {
        if (degree < gdeg) return;
        auto mons = monomials_of_degree(m, n, degree - gdeg);
        for (const auto& g : gens)
            for (const auto& M : mons) space.add(g * ExactPolynomial::monomial(M));
    };

    switch (spec.kind) {
        case IdealSpec::Kind::determinantal: {
            if (spec.t == 1) {  // I_1 is the irrelevant maximal ideal
                if (degree >= 1)
                    for (const auto& M : monomials_of_degree(m, n, degree))
                        space.add(ExactPolynomial::monomial(M));
                return space;
            }
            if (spec.t > std::min(m, n)) return space;
            std::vector<ExactPolynomial> gens;
            for (const auto& mi : all_minors(m, n, spec.t)) gens.push_back(expand_minor(mi, m, n));
            add_monomial_multiples(gens, spec.t);
            return space;
        }
        case IdealSpec::Kind::power: {
            if (spec.t == 1) {
                if (degree >= spec.k)
                    for (const auto& M : monomials_of_degree(m, n, degree))
                        space.add(ExactPolynomial::monomial(M));
                return space;
            }
            std::vector<int> sizes(spec.k, spec.t);
            int gdeg = spec.k * spec.t;
            if (degree < gdeg || spec.t > std::min(m, n)) return space;
            auto mons = monomials_of_degree(m, n, degree - gdeg);
            for_each_factor_product(m, n, sizes, [&](const ExactPolynomial& prod) {
                for (const auto& M : mons) space.add(prod * ExactPolynomial::monomial(M));
            });
            return space;
        }
        case IdealSpec::Kind::product: {
            int gdeg = 0;
            for (int s : spec.factors) gdeg += s;
            if (degree < gdeg) return space;
            for (int s : spec.factors)
                if (s > std::min(m, n)) return space;
            auto mons = monomials_of_degree(m, n, degree - gdeg);
            for_each_factor_product(m, n, spec.factors, [&](const ExactPolynomial& prod) {
                for (const auto& M : mons) space.add(prod * ExactPolynomial::monomial(M));
            });
            return space;
        }
        case IdealSpec::Kind::symbolic_power: {
            if (spec.t == 1) {  // symbolic powers of the maximal ideal are ordinary
                if (degree >= spec.k)
                    for (const auto& M : monomials_of_degree(m, n, degree))
                        space.add(ExactPolynomial::monomial(M));
                return space;
            }
            for (const auto& b : standard_bitableaux(degree, m, n))
                if (gamma(b.shape(), spec.t) >= spec.k) space.add(expand_bitableau(b));
            return space;
        }
        case IdealSpec::Kind::sum: {
            for (const auto& part : spec.parts) {
                RowSpace sub = ideal_component(*part, degree, m, n, opts);
                for (const auto& row : sub.rows()) space.add(row);
            }
            return space;
        }
        case IdealSpec::Kind::intersection: {
            bool first = true;
            RowSpace acc(m, n);
            for (const auto& part : spec.parts) {
                RowSpace sub = ideal_component(*part, degree, m, n, opts);
                if (first) {
                    acc = std::move(sub);
                    first = false;
                } else {
                    acc = intersect(acc, sub, degree);
                }
                if (acc.rank() == 0) break;
            }
            return acc;
        }
    }
    return space;
}

RowSpace intersect(const RowSpace& a, const RowSpace& b, int degree) {
    int m = a.m(), n = a.n();
    long long full = 1;
    {
        // dim of the full degree component, to spot the trivial cases
        long long num = 1, den = 1;
        for (int i = 1; i <= degree; ++i) {
            num *= m * n - 1 + i;
            den *= i;
        }
        full = den == 0 ? 1 : num / den;
    }
    if (a.rank() == 0 || b.rank() == 0) return RowSpace(m, n);
    if (a.rank() == full) return b;
    if (b.rank() == full) return a;

    // Zassenhaus: eliminate rows (v|v) for v in A and (w|0) for w in B; rows
    // supported entirely on the right block span the intersection.
    std::size_t cells = static_cast<std::size_t>(m) * n;
    auto doubled = [cells](const ExactPolynomial& p, bool both) {
        ExactPolynomial out(p.m(), 2 * p.n());  // widths only matter for conversions
        for (const auto& [e, c] : p.terms()) {
            Expo d(2 * cells, 0);
            std::copy(e.begin(), e.end(), d.begin());
            if (both) std::copy(e.begin(), e.end(), d.begin() + cells);
            out.add_term(d, c);
        }
        return out;
    };
    RowSpace big(m, 2 * n);
    for (const auto& row : a.rows()) big.add(doubled(row, true));
    for (const auto& row : b.rows()) big.add(doubled(row, false));

    RowSpace out(m, n);
    for (const auto& row : big.rows()) {
        bool right_only = true;
        Expo lead = row.leading_monomial();
        for (std::size_t i = 0; i < cells; ++i)
            if (lead[i] != 0) {
                right_only = false;
                break;
            }
        if (!right_only) continue;
        ExactPolynomial p(m, n);
        for (const auto& [e, c] : row.terms()) {
            Expo tail(e.begin() + cells, e.end());
            p.add_term(tail, c);
        }
        out.add(p);
    }
    return out;
}

GroebnerReport verify_groebner_determinantal(int m, int n, int t, int dmax) {
    GroebnerReport rep;
    Shape tdiag(std::vector<int>{t});
    for (int d = 0; d <= dmax; ++d) {
        RowSpace comp = ideal_component(IdealSpec::determinantal(t), d, m, n,
                                        ComponentOptions{.max_degree = dmax, .max_cells = m * n});
        auto pivots = comp.pivot_monomials();
        std::set<Expo, DiagGreater> diag;
        for (const auto& mon : monomials_of_degree(m, n, d))
            if (diagonal_product_divides(mon, tdiag)) diag.insert(expo_of(mon));
        bool match = pivots == diag;
        rep.degrees.push_back({d, comp.rank(), static_cast<long long>(diag.size()), match});
        if (!match) rep.pass = false;
    }
    return rep;
}

IdentityReport verify_identity(const IdealSpec& lhs, const IdealSpec& rhs, int dmax, int m,
                               int n, bool containment_only) {
    IdentityReport rep;
    rep.containment_only = containment_only;
    ComponentOptions opts{.max_degree = dmax, .max_cells = m * n};
    for (int d = 0; d <= dmax; ++d) {
        RowSpace left = ideal_component(lhs, d, m, n, opts);
        RowSpace right = ideal_component(rhs, d, m, n, opts);
        rep.dims.push_back({d, left.rank(), right.rank()});
        bool ok = true;
        std::string witness;
        if (!containment_only && left.rank() != right.rank()) {
            ok = false;
            // a basis row of the larger side escaping the smaller one
            const RowSpace& bigger = left.rank() > right.rank() ? left : right;
            const RowSpace& smaller = left.rank() > right.rank() ? right : left;
            for (const auto& row : bigger.rows()) {
                auto rem = smaller.reduce(row);
                if (!rem.is_zero()) {
                    witness = row.to_string();
                    break;
                }
            }
        }
        if (ok) {
            for (const auto& row : left.rows()) {
                if (!right.contains(row)) {
                    ok = false;
                    witness = row.to_string();
                    break;
                }
            }
        }
        if (!ok) {
            rep.holds = false;
            rep.first_failing_degree = d;
            rep.witness = witness;
            return rep;
        }
    }
    return rep;
}

namespace {

struct FmRow {
    std::vector<Rat> a;      // coefficients
    Rat b;                   // a . x >= b
    std::vector<Rat> combo;  // multipliers over the original constraints
};

}  // namespace

SeparatingWeightResult find_separating_weight(
    const std::vector<std::pair<PositionMonomial, PositionMonomial>>& pairs, int m, int n) {
    SeparatingWeightResult res;
    std::size_t nv = static_cast<std::size_t>(m) * n;
    std::size_t nc = pairs.size() + nv;

    std::vector<FmRow> rows;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        FmRow r;
        r.a.assign(nv, 0);
        Expo big = expo_of(pairs[p].first), small = expo_of(pairs[p].second);
        for (std::size_t v = 0; v < nv; ++v) r.a[v] = big[v] - small[v];
        r.b = 1;
        r.combo.assign(nc, 0);
        r.combo[p] = 1;
        rows.push_back(std::move(r));
    }
    for (std::size_t v = 0; v < nv; ++v) {
        FmRow r;
        r.a.assign(nv, 0);
        r.a[v] = 1;
        r.b = 1;
        r.combo.assign(nc, 0);
        r.combo[pairs.size() + v] = 1;
        rows.push_back(std::move(r));
    }

    auto contradiction = [&](const FmRow& r) {
        for (const auto& c : r.a)
            if (c != 0) return false;
        return r.b > 0;
    };

    // snapshots of the lower-bound rows per eliminated variable, for the
    // back-substitution
    std::vector<std::vector<FmRow>> lower_rows(nv);

    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<FmRow> lows, ups, rest;
        for (auto& r : rows) {
            if (r.a[v] > 0)
                lows.push_back(std::move(r));
            else if (r.a[v] < 0)
                ups.push_back(std::move(r));
            else
                rest.push_back(std::move(r));
        }
        for (const auto& lo : lows)
            for (const auto& up : ups) {
                FmRow nr;
                nr.a.assign(nv, 0);
                Rat cl = -up.a[v];  // > 0
                Rat cu = lo.a[v];   // > 0
                for (std::size_t i = 0; i < nv; ++i) nr.a[i] = cl * lo.a[i] + cu * up.a[i];
                nr.b = cl * lo.b + cu * up.b;
                nr.combo.assign(nc, 0);
                for (std::size_t i = 0; i < nc; ++i)
                    nr.combo[i] = cl * lo.combo[i] + cu * up.combo[i];
                if (contradiction(nr)) {
                    res.feasible = false;
                    res.farkas = nr.combo;
                    return res;
                }
                bool all_zero = true;
                for (const auto& c : nr.a)
                    if (c != 0) {
                        all_zero = false;
                        break;
                    }
                if (!all_zero) rest.push_back(std::move(nr));
            }
        lower_rows[v] = std::move(lows);
        rows = std::move(rest);
        // keep only the strongest row per coefficient vector
        std::sort(rows.begin(), rows.end(), [](const FmRow& x, const FmRow& y) {
            if (x.a != y.a) return x.a < y.a;
            return x.b > y.b;
        });
        std::vector<FmRow> dedup;
        for (auto& r : rows) {
            if (!dedup.empty() && dedup.back().a == r.a) continue;
            dedup.push_back(std::move(r));
        }
        rows = std::move(dedup);
    }
    for (const auto& r : rows)
        if (contradiction(r)) {
            res.feasible = false;
            res.farkas = r.combo;
            return res;
        }

    // feasible: back-substitute, picking each variable at its tightest lower
    // bound (upper bounds, when present, are then satisfied automatically by
    // the Fourier-Motzkin construction)
    std::vector<Rat> x(nv, 0);
    for (std::size_t v = nv; v-- > 0;) {
        Rat best = 1;  // positivity constraint is always present
        for (const auto& lo : lower_rows[v]) {
            Rat rhs = lo.b;
            for (std::size_t i = v + 1; i < nv; ++i) rhs -= lo.a[i] * x[i];
            Rat bound = rhs / lo.a[v];
            if (bound > best) best = bound;
        }
        x[v] = best;
    }

    // clear denominators
    Int denom = 1;
    for (const auto& xi : x) {
        Int d(xi.get_den());
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
    res.weights.resize(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        Rat scaled = x[v] * Rat(denom);
        res.weights[v] = Int(scaled.get_num());
    }
    for (const auto& [big, small] : pairs) {
        Int wb = 0, ws = 0;
        Expo eb = expo_of(big), es = expo_of(small);
        for (std::size_t v = 0; v < nv; ++v) {
            wb += res.weights[v] * eb[v];
            ws += res.weights[v] * es[v];
        }
        if (!(wb > ws)) throw std::logic_error("separating weight failed post-hoc validation");
    }
    res.feasible = true;
    return res;
}

}  // namespace krsdet
