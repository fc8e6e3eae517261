#pragma once

/**
 * @file serialize.hpp
 * @brief JSON forms of the computed objects. Coefficients are canonical
 *        fraction strings in q, so equal values always print identically.
 */

#include "hf/hc_qchar.hpp"
#include "hf/tensor_operator.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hf {

using json = nlohmann::ordered_json;

/// [[row, col, "coefficient"], ...] in row-major order
json to_json(const TensorOperatorQ& op);
/// [{"monomial": [[i, c, multiplicity], ...], "coefficient": k}, ...]
json to_json(const FormalQCharacter& chi);
/// {"n", "truncation", "coefficients": [{"power", "terms": [{"monomial": [["Lp(i,r)", e], ...], "coefficient"}]}]}
json to_json(const PiSeries& s);
/// {"truncation", "coefficients": [{"power", "coefficient"}]}
json to_json(const LaurentSeries& s);
json to_json(const Tableau& t);
json to_json(const StandardTableau& t);

TensorOperatorQ operator_from_json(const json& j, int n, int m);

/// the kappa input file
struct KappaInput {
    std::vector<std::vector<RatFuncQ>> plus;
    std::vector<RatFuncQ> minus;
};
/// entries may be strings in q ("q^2 + 1", "1/2") or integers; throws std::invalid_argument
KappaInput kappa_from_json(const json& j);

}  // namespace hf
