#pragma once

// Dense univariate polynomials with arbitrary-precision integer coefficients.
// Internal building block of RatFuncQ; not part of the public surface.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hf::detail {

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static ZPoly constant(const mpz_class& v) { return ZPoly(std::vector<mpz_class>{v}); }
    static ZPoly one() { return constant(1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly scaled(const mpz_class& s) const;
    ZPoly negated() const;

    // gcd of all coefficients (nonnegative); 0 for the zero polynomial
    mpz_class content() const;
    // number of vanishing low-order coefficients
    int low_zeros() const;
    // drops `k` low-order coefficients, which must all vanish
    ZPoly shifted_down(int k) const;
    ZPoly shifted_up(int k) const;

    // exact division; `d` must divide *this over Z
    ZPoly divexact(const ZPoly& d) const;
    ZPoly divexact(const mpz_class& d) const;

    // primitive part with positive leading coefficient
    ZPoly primitive() const;

    mpq_class evaluate(const mpq_class& x) const;

private:
    void trim();
    std::vector<mpz_class> c_;  // c_[i] is the coefficient of x^i
};

// pseudo-remainder of a by b
ZPoly prem(const ZPoly& a, const ZPoly& b);

// gcd over Z[x], primitive with positive leading coefficient; gcd(0,0) = 0
ZPoly gcd(const ZPoly& a, const ZPoly& b);

}  // namespace hf::detail
