#pragma once

// shared helpers for the unit tests

#include "hf/exact_arith.hpp"
#include "hf/hecke.hpp"

#include <map>
#include <random>

namespace hf::testing {

// small random Laurent polynomial, exponents in [-3, 3]
inline LaurentPolyQ random_laurent(std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::map<int, mpq_class> t;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        mpq_class c(num(rng), den(rng));
        c.canonicalize();
        t[exp(rng)] += c;
    }
    return LaurentPolyQ(t);
}

inline RatFuncQ random_ratfunc(std::mt19937_64& rng) {
    LaurentPolyQ d;
    while (d.is_zero()) d = random_laurent(rng);
    return RatFuncQ(random_laurent(rng), d);
}

inline RatFuncQ random_nonzero(std::mt19937_64& rng) {
    RatFuncQ r;
    while (r.is_zero()) r = random_ratfunc(rng);
    return r;
}

// random element of H_m with a handful of terms
inline HeckeElement random_hecke(std::mt19937_64& rng, int m, int terms = 4) {
    const auto& g = symmetric_group(m);
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    HeckeElement e(m);
    for (int i = 0; i < terms; ++i) e += HeckeElement::basis(g.elements[pick(rng)], random_ratfunc(rng));
    return e;
}

}  // namespace hf::testing
