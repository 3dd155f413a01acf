#include "krsdet/ideals.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace krsdet {

IdealSpec IdealSpec::determinantal(int t) {
    IdealSpec s;
    s.kind = Kind::determinantal;
    s.t = t;
    return s;
}

IdealSpec IdealSpec::symbolic_power(int t, int k) {
    IdealSpec s;
    s.kind = Kind::symbolic_power;
    s.t = t;
    s.k = k;
    return s;
}

IdealSpec IdealSpec::power(int t, int k) {
    IdealSpec s;
    s.kind = Kind::power;
    s.t = t;
    s.k = k;
    return s;
}

IdealSpec IdealSpec::product(std::vector<int> factors) {
    IdealSpec s;
    s.kind = Kind::product;
    std::sort(factors.begin(), factors.end(), std::greater<int>());
    for (int f : factors)
        if (f < 1) throw std::invalid_argument("product factors must be positive");
    s.factors = std::move(factors);
    return s;
}

IdealSpec IdealSpec::sum_of(std::vector<IdealSpec> parts) {
    IdealSpec s;
    s.kind = Kind::sum;
    for (auto& p : parts) s.parts.push_back(std::make_shared<IdealSpec>(std::move(p)));
    return s;
}

IdealSpec IdealSpec::intersection_of(std::vector<IdealSpec> parts) {
    IdealSpec s;
    s.kind = Kind::intersection;
    for (auto& p : parts) s.parts.push_back(std::make_shared<IdealSpec>(std::move(p)));
    return s;
}

std::string IdealSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::determinantal:
            os << "I[" << t << "]";
            break;
        case Kind::symbolic_power:
            os << "I[" << t << "]^(" << k << ")";
            break;
        case Kind::power:
            os << "I[" << t << "]^" << k;
            break;
        case Kind::product:
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << "I[" << factors[i] << "]";
            }
            break;
        case Kind::sum:
        case Kind::intersection: {
            const char* op = kind == Kind::sum ? " + " : " & ";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) os << op;
                os << "(" << parts[i]->to_string() << ")";
            }
            break;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("ideal spec: expected a number");
        return std::stoi(text.substr(start, pos - start));
    }

    // atom := I[t] | I[t]^k | I[t]^(k) | ( expr )
    IdealSpec atom() {
        skip_ws();
        if (eat('(')) {
            IdealSpec inner = intersection();
            if (!eat(')')) throw std::invalid_argument("ideal spec: missing ')'");
            return inner;
        }
        if (!eat('I') || !eat('['))
            throw std::invalid_argument("ideal spec: expected 'I['");
        int t = number();
        if (!eat(']')) throw std::invalid_argument("ideal spec: missing ']'");
        if (eat('^')) {
            if (eat('(')) {
                int k = number();
                if (!eat(')')) throw std::invalid_argument("ideal spec: missing ')'");
                return IdealSpec::symbolic_power(t, k);
            }
            return IdealSpec::power(t, number());
        }
        return IdealSpec::determinantal(t);
    }

    // product := atom (* atom)*, factors restricted to I[t] / I[t]^k
    IdealSpec product() {
        IdealSpec first = atom();
        if (peek() != '*') return first;
        std::vector<int> factors;
        auto absorb = [&factors](const IdealSpec& s) {
            if (s.kind == IdealSpec::Kind::determinantal)
                factors.push_back(s.t);
            else if (s.kind == IdealSpec::Kind::power)
                factors.insert(factors.end(), s.k, s.t);
            else if (s.kind == IdealSpec::Kind::product)
                factors.insert(factors.end(), s.factors.begin(), s.factors.end());
            else
                throw std::invalid_argument(
                    "ideal spec: '*' only combines I[t] and I[t]^k factors");
        };
        absorb(first);
        while (eat('*')) absorb(atom());
        return IdealSpec::product(std::move(factors));
    }

    IdealSpec sum() {
        std::vector<IdealSpec> parts{product()};
        while (eat('+')) parts.push_back(product());
        return parts.size() == 1 ? parts[0] : IdealSpec::sum_of(std::move(parts));
    }

    IdealSpec intersection() {
        std::vector<IdealSpec> parts{sum()};
        while (eat('&')) parts.push_back(sum());
        return parts.size() == 1 ? parts[0] : IdealSpec::intersection_of(std::move(parts));
    }
};

}  // namespace

IdealSpec parse_ideal_spec(const std::string& text) {
    Parser p(text);
    IdealSpec spec = p.intersection();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("ideal spec: trailing characters");
    return spec;
}

bool in_ini_determinantal(const PositionMonomial& mon, int t) {
    return hat_gamma(mon, t) >= 1;
}

bool in_ini_symbolic(const PositionMonomial& mon, int t, int k) {
    return hat_gamma(mon, t) >= k;
}

bool in_ini_power(const PositionMonomial& mon, int t, int k) {
    return hat_alpha(mon, k) >= k * t;
}

bool in_ini_product(const PositionMonomial& mon, const std::vector<int>& factors) {
    if (factors.empty()) return true;
    Shape rho{std::vector<int>(factors)};
    for (int i = 1; i <= rho.parts()[0]; ++i)
        if (hat_gamma(mon, i) < gamma(rho, i)) return false;
    return true;
}

bool in_initial_ideal(const PositionMonomial& mon, const IdealSpec& spec) {
    switch (spec.kind) {
        case IdealSpec::Kind::determinantal:
            return in_ini_determinantal(mon, spec.t);
        case IdealSpec::Kind::symbolic_power:
            return in_ini_symbolic(mon, spec.t, spec.k);
        case IdealSpec::Kind::power:
            return in_ini_power(mon, spec.t, spec.k);
        case IdealSpec::Kind::product:
            return in_ini_product(mon, spec.factors);
        case IdealSpec::Kind::sum:
            for (const auto& p : spec.parts)
                if (in_initial_ideal(mon, *p)) return true;
            return false;
        case IdealSpec::Kind::intersection:
            for (const auto& p : spec.parts)
                if (!in_initial_ideal(mon, *p)) return false;
            return true;
    }
    return false;
}

std::set<Shape> groebner_shapes_symbolic(int t, int k, int m, int n) {
    std::set<Shape> out;
    int maxpart = std::min(m, n);
    if (t < 1 || t > maxpart || k < 1) return out;
    // parts lie in [t, maxpart]; each contributes >= 1 to gamma_t, so there
    // are at most k of them
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int maxp, int got) {
        if (got == k) {
            out.insert(Shape(parts));
            return;
        }
        for (int p = std::min(maxp, t + (k - got) - 1); p >= t; --p) {
            if (p - t + 1 > k - got) continue;
            parts.push_back(p);
            rec(p, got + p - t + 1);
            parts.pop_back();
        }
    };
    rec(maxpart, 0);
    return out;
}

std::set<Shape> groebner_shapes_power(int t, int k, int m, int n) {
    std::set<Shape> out;
    for (const Shape& s : partitions_of(k * t, std::min(m, n), k)) out.insert(s);
    return out;
}

bool shape_in_ideal(const IdealSpec& spec, const Shape& shape) {
    switch (spec.kind) {
        case IdealSpec::Kind::determinantal:
            return gamma(shape, spec.t) >= 1;
        case IdealSpec::Kind::symbolic_power:
            return gamma(shape, spec.t) >= spec.k;
        case IdealSpec::Kind::power:
            return alpha(shape, spec.k) >= spec.k * spec.t;
        case IdealSpec::Kind::product: {
            if (spec.factors.empty()) return true;
            Shape rho(std::vector<int>(spec.factors));
            for (int i = 1; i <= rho.parts()[0]; ++i)
                if (gamma(shape, i) < gamma(rho, i)) return false;
            return true;
        }
        default:
            throw std::invalid_argument(
                "shape conditions are defined only for determinantal ideals, "
                "their powers, symbolic powers and products");
    }
}

long long standard_basis_count(const IdealSpec& spec, int degree, int m, int n) {
    long long count = 0;
    for (const Shape& sh : partitions_of(degree, std::min(m, n))) {
        if (!shape_in_ideal(spec, sh)) continue;
        long long lefts = static_cast<long long>(standard_tableaux(sh, m).size());
        long long rights = static_cast<long long>(standard_tableaux(sh, n).size());
        count += lefts * rights;
    }
    return count;
}

long long monomial_membership_count(const IdealSpec& spec, int degree, int m, int n) {
    long long count = 0;
    for (const auto& mon : monomials_of_degree(m, n, degree))
        if (in_initial_ideal(mon, spec)) ++count;
    return count;
}

namespace {

bool place_diagonals(std::map<std::pair<int, int>, int>& avail,
                     const std::vector<int>& sizes, std::size_t fi) {
    if (fi == sizes.size()) return true;
    int need = sizes[fi];
    std::vector<std::pair<int, int>> chain;
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(chain.size()) == need) {
            if (place_diagonals(avail, sizes, fi + 1)) return true;
            return false;
        }
        for (auto& [pos, mult] : avail) {
            if (mult == 0) continue;
            if (!chain.empty() &&
                (pos.first <= chain.back().first || pos.second <= chain.back().second))
                continue;
            --mult;
            chain.push_back(pos);
            if (extend()) return true;
            chain.pop_back();
            ++mult;
        }
        return false;
    };
    return extend();
}

}  // namespace

bool diagonal_product_divides(const PositionMonomial& mon, const Shape& shape) {
    if (shape.total() > mon.degree()) return false;
    std::map<std::pair<int, int>, int> avail(mon.exponents().begin(),
                                             mon.exponents().end());
    return place_diagonals(avail, shape.parts(), 0);
}

GkrsWitnessReport gkrs_witness_for(const PositionMonomial& mon,
                                   const std::vector<int>& factors) {
    GkrsWitnessReport rep;
    rep.monomial = mon;
    rep.factors = factors;
    rep.member = in_ini_product(mon, factors);

    // Products of minors of the same degree lying in the product ideal have
    // shapes dominating the factor shape in every gamma function. Shapes with
    // parts exceeding min(m,n) are kept in the list; they never produce a
    // dividing diagonal product.
    Shape rho{std::vector<int>(factors)};
    int d = mon.degree();
    for (const Shape& sh : partitions_of(d, d)) {
        bool inside = true;
        for (int i = 1; !rho.empty() && i <= rho.parts()[0]; ++i)
            if (gamma(sh, i) < gamma(rho, i)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        rep.shapes_checked.push_back(sh);
        if (diagonal_product_divides(mon, sh)) rep.shapes_with_witness.push_back(sh);
    }
    rep.bitableau_initial_exists = !rep.shapes_with_witness.empty();
    return rep;
}

GkrsWitnessReport gkrs_failure_witness() {
    PositionMonomial mon(4, 5, {{1, 1}, {1, 3}, {2, 2}, {3, 4}, {4, 3}, {4, 5}});
    return gkrs_witness_for(mon, {4, 2});
}

}  // namespace krsdet
