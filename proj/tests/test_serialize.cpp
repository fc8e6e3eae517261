#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hf/rmatrix.hpp"
#include "hf/serialize.hpp"

using namespace hf;

TEST_CASE("operator triples round-trip") {
    const TensorOperatorQ r = rcheck(2);
    const json j = to_json(r);
    REQUIRE(j.is_array());
    CHECK(j[0] == json::array({0, 0, "q"}));
    CHECK(operator_from_json(j, 2, 2) == r);
    CHECK(to_json(TensorOperatorQ(2, 2)).empty());
    CHECK_THROWS_AS(operator_from_json(json::array({json::array({0, 9, "1"})}), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(operator_from_json(json::array({json::array({0, 1})}), 2, 1), std::invalid_argument);
}

TEST_CASE("formal q-character") {
    const json j = to_json(formal_qcharacter(Partition({1, 1}), 2));
    CHECK(j.dump() == R"([{"monomial":[[1,0,1],[2,-1,1]],"coefficient":1}])");
}

TEST_CASE("series use the generator names") {
    const json j = to_json(PiSeries::l_minus(1, 2, 1));
    CHECK(j.at("truncation") == 1);
    const json& c = j.at("coefficients");
    REQUIRE(c.size() == 2);
    CHECK(c[0].at("power") == -1);
    CHECK(c[0].at("terms")[0].at("monomial") == json::array({json::array({"Lm(1,1)", 1})}));
    CHECK(c[1].at("terms")[0].at("monomial") == json::array({json::array({"Lp(1,0)", -1})}));
    const LaurentSeries w{2, {{0, RatFuncQ(3)}, {-1, RatFuncQ::q()}}};
    CHECK(to_json(w).dump() == R"({"truncation":2,"coefficients":[{"power":-1,"coefficient":"q"},{"power":0,"coefficient":"3"}]})");
}

TEST_CASE("tableaux are arrays of rows") {
    CHECK(to_json(StandardTableau({{1, 3}, {2}})).dump() == "[[1,3],[2]]");
    CHECK(to_json(Tableau({{1, 1}, {2}})).dump() == "[[1,1],[2]]");
}

TEST_CASE("kappa input") {
    const KappaInput k = kappa_from_json(json::parse(R"({"kappa_plus": [["q^2", 1], [2]], "kappa_minus": ["q^-2", "1/2"]})"));
    REQUIRE(k.plus.size() == 2);
    CHECK(k.plus[0][0] == RatFuncQ::q_pow(2));
    CHECK(k.plus[1][0] == RatFuncQ(2));
    CHECK(k.minus[1] == RatFuncQ(mpq_class(1, 2)));
    CHECK_THROWS_AS(kappa_from_json(json::parse(R"({"kappa_plus": []})")), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_json(json::parse(R"({"kappa_plus": [], "kappa_minus": [1]})")), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_json(json::parse(R"({"kappa_plus": [[1.5]], "kappa_minus": [1]})")), std::invalid_argument);
    CHECK_THROWS_AS(kappa_from_json(json::parse(R"({"kappa_plus": [["q^"]], "kappa_minus": [1]})")), std::invalid_argument);
}
