#include "krsdet/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace krsdet {

json shape_to_json(const Shape& s) {
    return json(s.parts());
}

Shape shape_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("shape must be a JSON array");
    return Shape(j.get<std::vector<int>>());
}

json tableau_to_json(const Tableau& t) {
    return json{{"rows", t.rows()}};
}

Tableau tableau_from_json(const json& j, int bound) {
    if (!j.contains("rows")) throw std::invalid_argument("tableau needs a \"rows\" field");
    return Tableau(j.at("rows").get<std::vector<std::vector<int>>>(), bound);
}

json bitableau_to_json(const Bitableau& b) {
    return json{{"left", tableau_to_json(b.left())}, {"right", tableau_to_json(b.right())}};
}

Bitableau bitableau_from_json(const json& j, int m, int n) {
    if (!j.contains("left") || !j.contains("right"))
        throw std::invalid_argument("bitableau needs \"left\" and \"right\" fields");
    return Bitableau(tableau_from_json(j.at("left"), m), tableau_from_json(j.at("right"), n));
}

json monomial_to_json(const PositionMonomial& mon) {
    json terms = json::array();
    for (const auto& [pos, e] : mon.exponents())
        terms.push_back(json::array({pos.first, pos.second, e}));
    return json{{"m", mon.m()}, {"n", mon.n()}, {"terms", terms}};
}

PositionMonomial monomial_from_json(const json& j) {
    PositionMonomial mon(j.at("m").get<int>(), j.at("n").get<int>());
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("monomial terms must be [i, j, exponent] triples");
        mon.multiply_position(term[0].get<int>(), term[1].get<int>(), term[2].get<int>());
    }
    return mon;
}

json array_to_json(const TwoLineArray& arr) {
    return json{{"top", arr.top}, {"bottom", arr.bottom}};
}

TwoLineArray array_from_json(const json& j) {
    return TwoLineArray(j.at("top").get<std::vector<int>>(),
                        j.at("bottom").get<std::vector<int>>());
}

json path_family_to_json(const PathFamily& f) {
    json paths = json::array();
    for (const auto& p : f.paths) {
        json pts = json::array();
        for (const auto& [i, jj] : p) pts.push_back(json::array({i, jj}));
        paths.push_back(pts);
    }
    return json{{"paths", paths}};
}

json representation_to_json(const StraightRepresentation& rep) {
    json out = json::array();
    for (const auto& term : rep)
        out.push_back(json{{"coeff", term.coeff.get_str()},
                           {"bitableau", bitableau_to_json(term.bitableau)}});
    return out;
}

json witness_to_json(const DecompositionWitness& w) {
    json blocks = json::array();
    for (const auto& b : w.blocks) blocks.push_back(b);
    return json{{"blocks", blocks},
                {"kind", w.kind == DecompKind::increasing ? "increasing" : "non-increasing"},
                {"shape", w.shape().parts()}};
}

std::vector<std::vector<int>> parse_rows(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<int> entries;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ','))
            if (!tok.empty()) entries.push_back(std::stoi(tok));
        if (!entries.empty()) rows.push_back(std::move(entries));
    }
    return rows;
}

PositionMonomial parse_monomial(const std::string& text, int m, int n) {
    PositionMonomial mon(m, n);
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        std::vector<int> nums;
        std::stringstream ts(tok);
        std::string part;
        while (std::getline(ts, part, ','))
            if (!part.empty()) nums.push_back(std::stoi(part));
        if (nums.size() == 2)
            mon.multiply_position(nums[0], nums[1]);
        else if (nums.size() == 3)
            mon.multiply_position(nums[0], nums[1], nums[2]);
        else
            throw std::invalid_argument("monomial positions must be i,j or i,j,e");
    }
    return mon;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace krsdet
