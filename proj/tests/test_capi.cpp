#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "krsdet.h"

using nlohmann::json;

namespace {

struct Result {
    int code;
    json output;
    std::string error;
};

Result eval(const json& request) {
    krsdet_result* r = krsdet_eval(request.dump().c_str());
    Result out;
    out.code = krsdet_result_code(r);
    if (krsdet_result_json(r)) out.output = json::parse(krsdet_result_json(r));
    if (krsdet_result_error(r)) out.error = krsdet_result_error(r);
    krsdet_result_free(r);
    return out;
}

}  // namespace

TEST_CASE("version") {
    CHECK(krsdet_version() != nullptr);
    auto r = eval({{"command", "version"}});
    CHECK(r.code == KRSDET_OK);
    CHECK(r.output.at("version").get<std::string>() == krsdet_version());
    CHECK(r.output.at("schema") == 1);
}

TEST_CASE("krs on the worked bitableau") {
    json req{{"command", "krs"},
             {"m", 6},
             {"n", 6},
             {"bitableau",
              {{"left", {{"rows", {{1, 3, 4, 5}, {2, 6}}}}},
               {"right", {{"rows", {{1, 2, 3, 6}, {4, 5}}}}}}}};
    auto r = eval(req);
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["array"]["top"] == json({1, 2, 3, 4, 5, 6}));
    CHECK(r.output["array"]["bottom"] == json({4, 1, 2, 5, 6, 3}));

    json inv{{"command", "krs-inverse"}, {"m", 6}, {"n", 6}, {"array", r.output["array"]}};
    auto r2 = eval(inv);
    REQUIRE(r2.code == KRSDET_OK);
    CHECK(r2.output["bitableau"] == req["bitableau"]);
}

TEST_CASE("inline tableau rows") {
    json req{{"command", "krs"}, {"m", 6}, {"n", 6}, {"left", "1,3,4,5;2,6"},
             {"right", "1,2,3,6;4,5"}};
    auto r = eval(req);
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["array"]["bottom"] == json({4, 1, 2, 5, 6, 3}));
}

TEST_CASE("greene") {
    auto r = eval({{"command", "greene"}, {"seq", "4,1,2,5,6,3"}, {"stat", "alpha"}, {"k", 2}});
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["value"] == 6);
    CHECK(r.output["ins_shape"] == json({4, 2}));

    auto rb = eval({{"command", "greene"},
                    {"seq", json::array({4, 1, 2, 5, 6, 3})},
                    {"stat", "alpha"},
                    {"k", 2},
                    {"brute", true}});
    REQUIRE(rb.code == KRSDET_OK);
    CHECK(rb.output["value"] == 6);
    CHECK(rb.output.contains("witness"));
}

TEST_CASE("membership with witness search") {
    json req{{"command", "membership"},
             {"ideal", "I[4]*I[2]"},
             {"monomial", "1,1 1,3 2,2 3,4 4,3 4,5"},
             {"m", 4},
             {"n", 5},
             {"witness", true}};
    auto r = eval(req);
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["member"] == true);
    CHECK(r.output["bitableau_initial_exists"] == false);
}

TEST_CASE("straighten") {
    json req{{"command", "straighten"}, {"m", 2}, {"n", 2}, {"left", "1;2"}, {"right", "2;1"}};
    auto r = eval(req);
    REQUIRE(r.code == KRSDET_OK);
    const auto& rep = r.output["representation"];
    REQUIRE(rep.size() == 2);
    // coefficients are exact rational strings
    for (const auto& term : rep)
        CHECK((term["coeff"] == "1" || term["coeff"] == "-1"));
}

TEST_CASE("hilbert") {
    auto r = eval({{"command", "hilbert"}, {"m", 3}, {"n", 3}, {"t", 2}});
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["numerator"] == json({1, 4, 1}));
    CHECK(r.output["denominator_degree"] == 5);
    CHECK(r.output["multiplicity"] == 6);
    CHECK(r.output["dimension"] == 5);
}

TEST_CASE("multiplicity and facets") {
    auto r = eval({{"command", "multiplicity"}, {"m", 3}, {"n", 3}, {"t", 2}});
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["facets"] == 6);
    CHECK(r.output["gv"] == 6);
    CHECK(r.output["giambelli"] == 6);

    auto f = eval({{"command", "facets"}, {"m", 2}, {"n", 2}, {"t", 2}});
    REQUIRE(f.code == KRSDET_OK);
    CHECK(f.output["count"] == 2);

    auto sh = eval({{"command", "shelling"}, {"m", 3}, {"n", 3}, {"t", 2}, {"certify", true}});
    REQUIRE(sh.code == KRSDET_OK);
    CHECK(sh.output["certified"] == true);
    CHECK(sh.output["restrictions_are_right_turns"] == true);
}

TEST_CASE("rees and gorenstein") {
    json x;
    x["command"] = "rees";
    x["algebra"] = "symbolic";
    x["m"] = 3;
    x["n"] = 3;
    x["t"] = 2;
    x["k"] = 4;
    x["monomial"] = "1,1 1,2 1,3 2,1 2,2 2,3 3,1 3,2 3,3";
    auto r = eval(x);
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["member"] == true);

    auto g = eval({{"command", "gorenstein"}, {"m", 4}, {"n", 4}, {"t", 2}});
    REQUIRE(g.code == KRSDET_OK);
    CHECK(g.output["gorenstein"] == true);
    CHECK(g.output["clause"] == "mn=t(m+n)");
}

TEST_CASE("error handling") {
    auto bad = eval({{"command", "nonsense"}});
    CHECK(bad.code == KRSDET_ERR_USAGE);
    CHECK_FALSE(bad.error.empty());

    krsdet_result* r = krsdet_eval("not json");
    CHECK(krsdet_result_code(r) == KRSDET_ERR_USAGE);
    CHECK(krsdet_result_json(r) == nullptr);
    CHECK(krsdet_result_error(r) != nullptr);
    krsdet_result_free(r);

    auto domain = eval({{"command", "krs"},
                        {"m", 2},
                        {"n", 2},
                        {"left", "2;1"},
                        {"right", "1;2"}});
    CHECK(domain.code == KRSDET_ERR_USAGE);

    CHECK(krsdet_result_code(nullptr) == KRSDET_ERR_INTERNAL);
    krsdet_result_free(nullptr);
}

TEST_CASE("byte-identical output for identical requests") {
    json req{{"command", "hilbert"}, {"m", 3}, {"n", 4}, {"t", 2}};
    krsdet_result* a = krsdet_eval(req.dump().c_str());
    krsdet_result* b = krsdet_eval(req.dump().c_str());
    REQUIRE(krsdet_result_json(a) != nullptr);
    REQUIRE(krsdet_result_json(b) != nullptr);
    CHECK(std::string(krsdet_result_json(a)) == krsdet_result_json(b));
    krsdet_result_free(a);
    krsdet_result_free(b);
}

TEST_CASE("verify through the C API") {
    auto r = eval({{"command", "verify"},
                   {"suite", "groebner"},
                   {"max_degree", 3}});
    REQUIRE(r.code == KRSDET_OK);
    CHECK(r.output["passed"] == true);
    REQUIRE(r.output["reports"].size() == 1);
    CHECK(r.output["reports"][0]["suite"] == "groebner");
    CHECK(r.output["reports"][0]["failures"].empty());
}
