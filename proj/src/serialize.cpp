#include "hf/serialize.hpp"

#include <stdexcept>

namespace hf {

json to_json(const TensorOperatorQ& op) {
    json out = json::array();
    for (const auto& [r, c, v] : op.triples()) out.push_back(json::array({r, c, v.str()}));
    return out;
}

TensorOperatorQ operator_from_json(const json& j, int n, int m) {
    TensorOperatorQ op(n, m);
    if (!j.is_array()) throw std::invalid_argument("operator: expected a triple list");
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw std::invalid_argument("operator: bad triple");
        const int r = t[0].get<int>();
        const int c = t[1].get<int>();
        if (r < 0 || c < 0 || r >= op.dim() || c >= op.dim()) throw std::invalid_argument("operator: index out of range");
        op.add(r, c, RatFuncQ::parse(t[2].get<std::string>()));
    }
    return op;
}

json to_json(const FormalQCharacter& chi) {
    json out = json::array();
    for (const auto& [m, c] : chi.terms()) {
        json mono = json::array();
        for (const auto& [i, cc, mult] : m) mono.push_back(json::array({i, cc, mult}));
        out.push_back({{"monomial", mono}, {"coefficient", c}});
    }
    return out;
}

json to_json(const PiSeries& s) {
    json coeffs = json::array();
    for (const auto& [p, poly] : s.coefficients()) {
        json terms = json::array();
        for (const auto& [m, c] : poly) {
            json mono = json::array();
            for (const auto& [g, e] : m.factors()) mono.push_back(json::array({g.name(), e}));
            terms.push_back({{"monomial", mono}, {"coefficient", c.str()}});
        }
        coeffs.push_back({{"power", p}, {"terms", terms}});
    }
    return {{"n", s.n()}, {"truncation", s.truncation()}, {"coefficients", coeffs}};
}

json to_json(const LaurentSeries& s) {
    json coeffs = json::array();
    for (const auto& [p, c] : s.coefficients) coeffs.push_back({{"power", p}, {"coefficient", c.str()}});
    return {{"truncation", s.truncation}, {"coefficients", coeffs}};
}

json to_json(const Tableau& t) { return t.rows(); }

json to_json(const StandardTableau& t) { return t.rows(); }

namespace {

RatFuncQ coefficient_from_json(const json& v) {
    if (v.is_number_integer()) return RatFuncQ(v.get<long>());
    if (v.is_string()) {
        try {
            return RatFuncQ::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw std::invalid_argument("kappa: cannot parse coefficient '" + v.get<std::string>() + "': " + e.what());
        }
    }
    throw std::invalid_argument("kappa: coefficients must be strings or integers");
}

std::vector<RatFuncQ> series_from_json(const json& v, const char* what) {
    if (!v.is_array()) throw std::invalid_argument(std::string("kappa: ") + what + " must be an array");
    std::vector<RatFuncQ> out;
    for (const auto& c : v) out.push_back(coefficient_from_json(c));
    return out;
}

}  // namespace

KappaInput kappa_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kappa_plus") || !j.contains("kappa_minus"))
        throw std::invalid_argument("kappa: need \"kappa_plus\" and \"kappa_minus\"");
    KappaInput k;
    const json& plus = j.at("kappa_plus");
    if (!plus.is_array() || plus.empty()) throw std::invalid_argument("kappa: kappa_plus must be a non-empty array");
    for (const auto& s : plus) k.plus.push_back(series_from_json(s, "each kappa_plus entry"));
    k.minus = series_from_json(j.at("kappa_minus"), "kappa_minus");
    return k;
}

}  // namespace hf
