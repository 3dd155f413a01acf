#pragma once

#include <json.hpp>

#include "krsdet/greene.hpp"
#include "krsdet/monomial.hpp"
#include "krsdet/paths.hpp"
#include "krsdet/shape.hpp"
#include "krsdet/straighten.hpp"
#include "krsdet/tableau.hpp"

namespace krsdet {

using nlohmann::json;

json shape_to_json(const Shape& s);
Shape shape_from_json(const json& j);

json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const json& j, int bound);

json bitableau_to_json(const Bitableau& b);
Bitableau bitableau_from_json(const json& j, int m, int n);

json monomial_to_json(const PositionMonomial& mon);
PositionMonomial monomial_from_json(const json& j);

json array_to_json(const TwoLineArray& arr);
TwoLineArray array_from_json(const json& j);

json path_family_to_json(const PathFamily& f);

json representation_to_json(const StraightRepresentation& rep);

json witness_to_json(const DecompositionWitness& w);

/// Inline CLI forms: rows separated by ';', entries by ','. Example:
/// "1,3,4,5;2,6".
std::vector<std::vector<int>> parse_rows(const std::string& text);

/// Inline monomial: whitespace-separated positions "i,j" (repeat for higher
/// exponents) or "i,j,e" triples.
PositionMonomial parse_monomial(const std::string& text, int m, int n);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace krsdet
