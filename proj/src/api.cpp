#include "krsdet/api.hpp"

#include <stdexcept>

#include "krsdet/greene.hpp"
#include "krsdet/ideals.hpp"
#include "krsdet/json_io.hpp"
#include "krsdet/krs.hpp"
#include "krsdet/paths.hpp"
#include "krsdet/rees.hpp"
#include "krsdet/straighten.hpp"
#include "krsdet/verify.hpp"

namespace krsdet {

namespace {

constexpr const char* kVersion = "1.0.0";

int get_int(const json& j, const std::string& key) {
    if (!j.contains(key)) throw std::invalid_argument("missing field \"" + key + "\"");
    return j.at(key).get<int>();
}

int get_int_or(const json& j, const std::string& key, int fallback) {
    return j.contains(key) ? j.at(key).get<int>() : fallback;
}

PositionMonomial request_monomial(const json& req) {
    if (req.contains("monomial") && req.at("monomial").is_object())
        return monomial_from_json(req.at("monomial"));
    int m = get_int(req, "m"), n = get_int(req, "n");
    if (req.contains("monomial"))  // inline string form
        return parse_monomial(req.at("monomial").get<std::string>(), m, n);
    throw std::invalid_argument("missing field \"monomial\"");
}

Bitableau request_bitableau(const json& req) {
    int m = get_int(req, "m"), n = get_int(req, "n");
    if (req.contains("bitableau")) return bitableau_from_json(req.at("bitableau"), m, n);
    if (req.contains("left") && req.contains("right")) {
        auto lrows = req.at("left").is_string()
                         ? parse_rows(req.at("left").get<std::string>())
                         : req.at("left").get<std::vector<std::vector<int>>>();
        auto rrows = req.at("right").is_string()
                         ? parse_rows(req.at("right").get<std::string>())
                         : req.at("right").get<std::vector<std::vector<int>>>();
        std::vector<Minor> factors;
        if (lrows.size() != rrows.size())
            throw std::invalid_argument("left and right factor counts differ");
        for (std::size_t i = 0; i < lrows.size(); ++i)
            factors.emplace_back(lrows[i], rrows[i]);
        return Bitableau(std::move(factors), m, n);
    }
    throw std::invalid_argument("missing bitableau (give \"bitableau\" or \"left\"/\"right\")");
}

json cmd_krs(const json& req) {
    Bitableau b = request_bitableau(req);
    TwoLineArray arr = krs(b);
    return json{{"array", array_to_json(arr)},
                {"monomial", monomial_to_json(array_to_monomial(arr, b.m(), b.n()))}};
}

json cmd_krs_inverse(const json& req) {
    if (req.contains("array")) {
        int m = get_int(req, "m"), n = get_int(req, "n");
        return json{
            {"bitableau", bitableau_to_json(krs_inverse(array_from_json(req.at("array")), m, n))}};
    }
    return json{{"bitableau", bitableau_to_json(krs_inverse(request_monomial(req)))}};
}

json cmd_greene(const json& req) {
    std::vector<int> seq;
    if (req.at("seq").is_string())
        seq = parse_int_list(req.at("seq").get<std::string>());
    else
        seq = req.at("seq").get<std::vector<int>>();
    std::string stat = req.value("stat", "alpha");
    bool brute = req.value("brute", false);
    int k = get_int_or(req, "k", get_int_or(req, "t", 1));

    json out;
    if (stat == "alpha") {
        out["value"] = hat_alpha(seq, k);
        if (brute) {
            auto r = hat_alpha_brute(seq, k);
            out["value"] = r.value;
            out["witness"] = witness_to_json(r.witness);
        }
    } else if (stat == "gamma") {
        out["value"] = hat_gamma(seq, k);
        if (brute) {
            auto r = hat_gamma_brute(seq, k);
            out["value"] = r.value;
            out["witness"] = witness_to_json(r.witness);
        }
    } else if (stat == "alphastar") {
        out["value"] = hat_alpha_star(seq, k);
        if (brute) {
            auto r = hat_alpha_star_brute(seq, k);
            out["value"] = r.value;
            out["witness"] = witness_to_json(r.witness);
        }
    } else if (stat == "w") {
        out["value"] = w_stat(seq, k);
        if (brute) {
            auto r = hat_alpha_star_brute(seq, k - 1);
            out["value"] = r.value;
            out["witness"] = witness_to_json(r.witness);
        }
    } else {
        throw std::invalid_argument("unknown stat \"" + stat + "\"");
    }
    out["ins_shape"] = ins(seq).shape().parts();
    return out;
}

json cmd_membership(const json& req) {
    IdealSpec spec = parse_ideal_spec(req.at("ideal").get<std::string>());
    PositionMonomial mon = request_monomial(req);
    json out{{"ideal", spec.to_string()}, {"member", in_initial_ideal(mon, spec)}};
    if (req.value("witness", false) && spec.kind == IdealSpec::Kind::product) {
        auto rep = gkrs_witness_for(mon, spec.factors);
        json shapes = json::array();
        for (const auto& sh : rep.shapes_checked) shapes.push_back(sh.parts());
        json found = json::array();
        for (const auto& sh : rep.shapes_with_witness) found.push_back(sh.parts());
        out["shapes_checked"] = shapes;
        out["shapes_with_witness"] = found;
        out["bitableau_initial_exists"] = rep.bitableau_initial_exists;
    }
    return out;
}

json cmd_straighten(const json& req) {
    Bitableau b = request_bitableau(req);
    return json{{"representation", representation_to_json(straighten(b))}};
}

json cmd_facets(const json& req) {
    int m = get_int(req, "m"), n = get_int(req, "n"), t = get_int(req, "t");
    auto f = facets(m, n, t);
    json out{{"count", f.size()}};
    json fams = json::array();
    for (const auto& fam : f) fams.push_back(path_family_to_json(fam));
    out["facets"] = fams;
    return out;
}

json cmd_shelling(const json& req) {
    int m = get_int(req, "m"), n = get_int(req, "n"), t = get_int(req, "t");
    auto f = facets(m, n, t);
    json out{{"count", f.size()}};
    json fams = json::array();
    for (const auto& fam : f) fams.push_back(path_family_to_json(fam));
    out["facets"] = fams;
    if (req.value("certify", true)) {
        auto cert = certify_shelling(f);
        out["certified"] = cert.valid;
        out["restrictions_are_right_turns"] = cert.restrictions_are_right_turns;
        json sizes = json::array();
        for (const auto& c : cert.restriction_sets) sizes.push_back(c.size());
        out["restriction_sizes"] = sizes;
        if (!cert.valid) out["failure"] = cert.failure;
    }
    return out;
}

json cmd_hilbert(const json& req) {
    int m = get_int(req, "m"), n = get_int(req, "n"), t = get_int(req, "t");
    HilbertSeries hs = hilbert_series(m, n, t);
    return json{{"numerator", hs.numerator},
                {"denominator_degree", hs.denom_degree},
                {"multiplicity", hs.multiplicity()},
                {"dimension", krull_dim(m, n, t)}};
}

json cmd_multiplicity(const json& req) {
    int m = get_int(req, "m"), n = get_int(req, "n"), t = get_int(req, "t");
    return json{{"facets", facets(m, n, t).size()},
                {"gv", gv_multiplicity(m, n, t)},
                {"giambelli", giambelli_multiplicity(m, n, t)}};
}

json cmd_rees(const json& req) {
    std::string algebra = req.at("algebra").get<std::string>();
    BigradedMonomial x{request_monomial(req), get_int_or(req, "k", 0)};
    json out{{"algebra", algebra}, {"k", x.k}};
    if (algebra == "symbolic") {
        out["member"] = in_ini_symbolic_rees(x, get_int(req, "t"));
    } else if (algebra == "rees") {
        out["member"] = in_ini_rees(x, get_int(req, "t"));
    } else if (algebra == "rees-product") {
        std::vector<int> factors = req.at("factors").is_string()
                                       ? parse_int_list(req.at("factors").get<std::string>())
                                       : req.at("factors").get<std::vector<int>>();
        out["member"] = in_ini_rees_product(x, factors);
    } else if (algebra == "at") {
        out["member"] = in_ini_At(x, get_int(req, "t"));
    } else if (algebra == "canonical-rees") {
        out["member"] = in_canonical_rees(x, get_int(req, "t"));
    } else if (algebra == "canonical-at") {
        out["member"] = in_canonical_At(x, get_int(req, "t"));
    } else {
        throw std::invalid_argument("unknown algebra \"" + algebra + "\"");
    }
    return out;
}

json cmd_gorenstein(const json& req) {
    auto res = is_gorenstein_At(get_int(req, "m"), get_int(req, "n"), get_int(req, "t"));
    return json{{"gorenstein", res.gorenstein}, {"clause", res.clause}};
}

json report_to_json(const VerifyReport& rep) {
    json failures = json::array();
    for (const auto& f : rep.failures)
        failures.push_back(json{{"case", f.name}, {"detail", f.detail}});
    return json{{"suite", rep.suite},
                {"cases", rep.cases},
                {"failures", failures},
                {"elapsed_seconds", rep.elapsed_seconds}};
}

json cmd_verify(const json& req, bool& failed) {
    VerifyBounds bounds;
    bounds.max_m = get_int_or(req, "max_m", 0);
    bounds.max_n = get_int_or(req, "max_n", 0);
    bounds.max_degree = get_int_or(req, "max_degree", 0);
    bounds.max_seq_len = get_int_or(req, "max_seq_len", 0);
    bounds.seed = static_cast<unsigned long long>(get_int_or(req, "seed", 42));
    std::string suite = req.value("suite", "all");
    auto reports = run_suites(suite, bounds);
    json out;
    json list = json::array();
    bool pass = true;
    long long cases = 0;
    for (const auto& rep : reports) {
        list.push_back(report_to_json(rep));
        pass = pass && rep.passed();
        cases += rep.cases;
    }
    out["reports"] = list;
    out["passed"] = pass;
    out["cases"] = cases;
    failed = !pass;
    return out;
}

}  // namespace

const char* api_version() {
    return kVersion;
}

ApiResult eval_request(const std::string& request_json) {
    ApiResult res;
    json req;
    try {
        req = json::parse(request_json);
    } catch (const json::exception& e) {
        res.code = 2;
        res.error = std::string("invalid JSON: ") + e.what();
        return res;
    }
    try {
        if (!req.is_object() || !req.contains("command"))
            throw std::invalid_argument("request must be an object with a \"command\" field");
        std::string command = req.at("command").get<std::string>();
        json out;
        bool verify_failed = false;
        if (command == "krs")
            out = cmd_krs(req);
        else if (command == "krs-inverse")
            out = cmd_krs_inverse(req);
        else if (command == "greene")
            out = cmd_greene(req);
        else if (command == "membership")
            out = cmd_membership(req);
        else if (command == "straighten")
            out = cmd_straighten(req);
        else if (command == "facets")
            out = cmd_facets(req);
        else if (command == "shelling")
            out = cmd_shelling(req);
        else if (command == "hilbert")
            out = cmd_hilbert(req);
        else if (command == "multiplicity")
            out = cmd_multiplicity(req);
        else if (command == "rees")
            out = cmd_rees(req);
        else if (command == "gorenstein")
            out = cmd_gorenstein(req);
        else if (command == "verify")
            out = cmd_verify(req, verify_failed);
        else if (command == "version")
            out = json{{"version", kVersion}};
        else
            throw std::invalid_argument("unknown command \"" + command + "\"");
        out["schema"] = 1;
        res.output = out.dump();
        res.code = verify_failed ? 1 : 0;
    } catch (const json::exception& e) {
        res.code = 2;
        res.error = std::string("bad request: ") + e.what();
    } catch (const std::invalid_argument& e) {
        res.code = 2;
        res.error = e.what();
    } catch (const std::exception& e) {
        res.code = 3;
        res.error = std::string("internal error: ") + e.what();
    }
    return res;
}

}  // namespace krsdet
