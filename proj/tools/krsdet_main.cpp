// Command-line front end; all computation goes through the shared-library C
// API.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "krsdet.h"

using nlohmann::json;

namespace {

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void render_text(const std::string& command, const json& out, std::ostream& os) {
    auto list = [](const json& arr) {
        std::ostringstream s;
        for (std::size_t i = 0; i < arr.size(); ++i) s << (i ? " " : "") << arr[i];
        return s.str();
    };
    if (command == "krs") {
        os << "top:    " << list(out["array"]["top"]) << "\n";
        os << "bottom: " << list(out["array"]["bottom"]) << "\n";
        os << "monomial:";
        for (const auto& term : out["monomial"]["terms"]) {
            os << " X[" << term[0] << "," << term[1] << "]";
            if (term[2].get<int>() > 1) os << "^" << term[2];
        }
        os << "\n";
    } else if (command == "krs-inverse") {
        os << "left rows:";
        for (const auto& r : out["bitableau"]["left"]["rows"]) os << "  " << list(r);
        os << "\nright rows:";
        for (const auto& r : out["bitableau"]["right"]["rows"]) os << "  " << list(r);
        os << "\n";
    } else if (command == "greene") {
        os << out["value"] << "\n";
        if (out.contains("witness"))
            os << "witness: " << out["witness"].dump() << "\n";
    } else if (command == "membership") {
        os << (out["member"].get<bool>() ? "member" : "not a member") << "\n";
        if (out.contains("bitableau_initial_exists"))
            os << "bitableau initial monomial exists: "
               << (out["bitableau_initial_exists"].get<bool>() ? "yes" : "no") << "\n";
    } else if (command == "straighten") {
        for (const auto& term : out["representation"]) {
            os << term["coeff"].get<std::string>() << " * [";
            for (const auto& r : term["bitableau"]["left"]["rows"]) os << " " << list(r) << ";";
            os << " |";
            for (const auto& r : term["bitableau"]["right"]["rows"]) os << " " << list(r) << ";";
            os << " ]\n";
        }
    } else if (command == "facets" || command == "shelling") {
        os << "count: " << out["count"] << "\n";
        if (out.contains("certified"))
            os << "shelling certified: " << (out["certified"].get<bool>() ? "yes" : "no")
               << ", restrictions are right turns: "
               << (out["restrictions_are_right_turns"].get<bool>() ? "yes" : "no") << "\n";
        for (const auto& fam : out["facets"]) {
            for (const auto& path : fam["paths"]) {
                for (const auto& pt : path) os << "(" << pt[0] << "," << pt[1] << ")";
                os << "  ";
            }
            os << "\n";
        }
    } else if (command == "hilbert") {
        os << "numerator: " << list(out["numerator"]) << "\n";
        os << "denominator degree: " << out["denominator_degree"] << "\n";
        os << "multiplicity: " << out["multiplicity"] << "\n";
        os << "dimension: " << out["dimension"] << "\n";
    } else if (command == "multiplicity") {
        os << "facets: " << out["facets"] << "\ngv: " << out["gv"]
           << "\ngiambelli: " << out["giambelli"] << "\n";
    } else if (command == "rees") {
        os << (out["member"].get<bool>() ? "member" : "not a member") << "\n";
    } else if (command == "gorenstein") {
        os << (out["gorenstein"].get<bool>() ? "Gorenstein" : "not Gorenstein")
           << " (clause: " << out["clause"].get<std::string>() << ")\n";
    } else if (command == "verify") {
        for (const auto& rep : out["reports"]) {
            os << (rep["failures"].empty() ? "PASS" : "FAIL") << " " << rep["suite"].get<std::string>()
               << " (" << rep["cases"] << " cases, " << rep["elapsed_seconds"].get<double>()
               << "s)\n";
            for (const auto& f : rep["failures"])
                os << "  failed: " << f["case"].get<std::string>() << " "
                   << f["detail"].get<std::string>() << "\n";
        }
        os << (out["passed"].get<bool>() ? "all suites passed" : "FAILURES") << "\n";
    } else {
        os << out.dump(2) << "\n";
    }
}

int dispatch(const json& request, const std::string& format) {
    krsdet_result* result = krsdet_eval(request.dump().c_str());
    int code = krsdet_result_code(result);
    const char* err = krsdet_result_error(result);
    const char* out = krsdet_result_json(result);
    if (err) std::cerr << "error: " << err << "\n";
    if (out) {
        if (format == "json") {
            std::cout << out << "\n";
        } else {
            render_text(request.at("command").get<std::string>(), json::parse(out), std::cout);
        }
    }
    krsdet_result_free(result);
    if (code == KRSDET_ERR_INTERNAL) return 1;
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Standard bitableaux, the Knuth-Robinson-Schensted correspondence and "
                 "initial ideals of determinantal ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    int m = 0, n = 0, t = 0, k = 0;
    std::string left, right, file, seq, stat = "alpha", ideal, monomial, algebra, factors;
    std::string suite = "all";
    bool brute = false, witness = false, certify = false;
    int seed = 42, max_m = 0, max_n = 0, max_degree = 0, max_seq_len = 0;

    auto add_mn = [&](CLI::App* cmd, bool need_t) {
        cmd->add_option("-m", m, "row count")->required();
        cmd->add_option("-n", n, "column count")->required();
        if (need_t) cmd->add_option("-t", t, "minor size")->required();
    };

    auto* c_krs = app.add_subcommand("krs", "two-line array of a standard bitableau");
    c_krs->add_option("--left", left, "left tableau rows, e.g. 1,3,4,5;2,6");
    c_krs->add_option("--right", right, "right tableau rows");
    c_krs->add_option("--file", file, "bitableau JSON file");
    add_mn(c_krs, false);

    auto* c_inv = app.add_subcommand("krs-inverse", "standard bitableau of a monomial");
    c_inv->add_option("--top", left, "top row, comma separated");
    c_inv->add_option("--bottom", right, "bottom row");
    c_inv->add_option("--monomial", monomial, "positions i,j separated by spaces");
    c_inv->add_option("--file", file, "two-line array JSON file");
    add_mn(c_inv, false);

    auto* c_greene = app.add_subcommand("greene", "subsequence statistics of a sequence");
    c_greene->add_option("--seq", seq, "comma separated sequence")->required();
    c_greene->add_option("--stat", stat, "alpha | gamma | alphastar | w");
    c_greene->add_option("--k", k, "k (or t) parameter");
    c_greene->add_option("--t", t, "alias for --k");
    c_greene->add_flag("--brute", brute, "maximize over decompositions and print a witness");

    auto* c_mem = app.add_subcommand("membership", "initial-ideal membership of a monomial");
    c_mem->add_option("--ideal", ideal, "e.g. I[4]*I[2], I[2]^(3), I[2]^2 + I[3]")->required();
    c_mem->add_option("--monomial", monomial, "positions i,j separated by spaces");
    c_mem->add_option("--file", file, "monomial JSON file");
    c_mem->add_flag("--witness", witness, "search for a dividing product of diagonals");
    add_mn(c_mem, false);

    auto* c_str = app.add_subcommand("straighten", "standard representation of a bitableau");
    c_str->add_option("--left", left, "left tableau rows, e.g. 1;2");
    c_str->add_option("--right", right, "right tableau rows");
    c_str->add_option("--file", file, "bitableau JSON file");
    add_mn(c_str, false);

    auto* c_fac = app.add_subcommand("facets", "facets of the step-t order complex");
    add_mn(c_fac, true);

    auto* c_shell = app.add_subcommand("shelling", "facets in shelling order");
    c_shell->add_flag("--certify", certify, "verify the shelling condition");
    add_mn(c_shell, true);

    auto* c_hil = app.add_subcommand("hilbert", "Hilbert series of the determinantal ring");
    add_mn(c_hil, true);

    auto* c_mult = app.add_subcommand("multiplicity", "multiplicity three ways");
    add_mn(c_mult, true);

    auto* c_rees = app.add_subcommand("rees", "membership in initial algebras");
    c_rees->add_option("--algebra", algebra,
                       "symbolic | rees | rees-product | at | canonical-rees | canonical-at")
        ->required();
    c_rees->add_option("--monomial", monomial, "positions i,j separated by spaces");
    c_rees->add_option("--file", file, "monomial JSON file");
    c_rees->add_option("--k", k, "T-exponent");
    c_rees->add_option("-t", t, "minor size");
    c_rees->add_option("--factors", factors, "product factor sizes, comma separated");
    c_rees->add_option("-m", m, "row count")->required();
    c_rees->add_option("-n", n, "column count")->required();

    auto* c_gor = app.add_subcommand("gorenstein", "Gorenstein classification of A_t");
    add_mn(c_gor, true);

    auto* c_ver = app.add_subcommand("verify", "run the verification suites");
    c_ver->add_option("--suite", suite,
                      "krs | greene | groebner | symbolic | powers | products | straight | "
                      "decomp | destr | paths | hilbert | rees | all");
    c_ver->add_option("--seed", seed, "random seed");
    c_ver->add_option("--max-m", max_m, "override row bound");
    c_ver->add_option("--max-n", max_n, "override column bound");
    c_ver->add_option("--max-degree", max_degree, "override degree bound");
    c_ver->add_option("--max-seq-len", max_seq_len, "override sequence length bound");

    CLI11_PARSE(app, argc, argv);

    try {
        json req;
        if (c_krs->parsed()) {
            req["command"] = "krs";
            req["m"] = m;
            req["n"] = n;
            if (!file.empty())
                req["bitableau"] = load_file(file);
            else {
                req["left"] = left;
                req["right"] = right;
            }
        } else if (c_inv->parsed()) {
            req["command"] = "krs-inverse";
            req["m"] = m;
            req["n"] = n;
            if (!file.empty())
                req["array"] = load_file(file);
            else if (!monomial.empty())
                req["monomial"] = monomial;
            else {
                json arr;
                arr["top"] = json::array();
                arr["bottom"] = json::array();
                std::stringstream ts(left), bs(right);
                std::string tok;
                while (std::getline(ts, tok, ',')) arr["top"].push_back(std::stoi(tok));
                while (std::getline(bs, tok, ',')) arr["bottom"].push_back(std::stoi(tok));
                req["array"] = arr;
            }
        } else if (c_greene->parsed()) {
            req["command"] = "greene";
            req["seq"] = seq;
            req["stat"] = stat;
            req["k"] = k > 0 ? k : t;
            req["brute"] = brute;
        } else if (c_mem->parsed()) {
            req["command"] = "membership";
            req["ideal"] = ideal;
            if (!file.empty())
                req["monomial"] = load_file(file);
            else
                req["monomial"] = monomial;
            req["m"] = m;
            req["n"] = n;
            req["witness"] = witness;
        } else if (c_str->parsed()) {
            req["command"] = "straighten";
            req["m"] = m;
            req["n"] = n;
            if (!file.empty())
                req["bitableau"] = load_file(file);
            else {
                req["left"] = left;
                req["right"] = right;
            }
        } else if (c_fac->parsed() || c_shell->parsed() || c_hil->parsed() || c_mult->parsed() ||
                   c_gor->parsed()) {
            req["command"] = c_fac->parsed()      ? "facets"
                             : c_shell->parsed()  ? "shelling"
                             : c_hil->parsed()    ? "hilbert"
                             : c_mult->parsed()   ? "multiplicity"
                                                  : "gorenstein";
            req["m"] = m;
            req["n"] = n;
            req["t"] = t;
            if (c_shell->parsed()) req["certify"] = certify;
        } else if (c_rees->parsed()) {
            req["command"] = "rees";
            req["algebra"] = algebra;
            if (!file.empty())
                req["monomial"] = load_file(file);
            else
                req["monomial"] = monomial;
            req["m"] = m;
            req["n"] = n;
            req["k"] = k;
            if (t > 0) req["t"] = t;
            if (!factors.empty()) req["factors"] = factors;
        } else if (c_ver->parsed()) {
            req["command"] = "verify";
            req["suite"] = suite;
            req["seed"] = seed;
            if (max_m > 0) req["max_m"] = max_m;
            if (max_n > 0) req["max_n"] = max_n;
            if (max_degree > 0) req["max_degree"] = max_degree;
            if (max_seq_len > 0) req["max_seq_len"] = max_seq_len;
        }
        return dispatch(req, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
