#ifndef FPL_JSON_IO_HPP
#define FPL_JSON_IO_HPP

#include "fpl/derivation.hpp"
#include "fpl/model.hpp"
#include "json.hpp"

namespace fpl {

// Formulas travel as printed strings; everything below throws
// std::invalid_argument on malformed input (including parse errors).

nlohmann::json to_json(const Model& m);
Model model_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IFormula& f);
IFormula iformula_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IDerivation& d);
IDerivation ideriv_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Derivation& d);
Derivation derivation_from_json(const nlohmann::json& j);

// A premise file for the i-prover: a JSON array of i-formulas.
nlohmann::json to_json(const IFormulaSet& premises);
IFormulaSet iformula_set_from_json(const nlohmann::json& j);

}  // namespace fpl

#endif
