#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact coefficient field for the whole library.
 *
 * LaurentPolyQ  - Laurent polynomials in q with rational coefficients.
 * RatFuncQ      - the field Q(q), kept in a unique reduced form.
 * ExtRatFunc    - univariate rational functions in an auxiliary variable t
 *                 over Q(q); used for spectral parameters and for the
 *                 removable-singularity evaluations of the fusion procedure.
 *
 * Nothing here ever rounds. All values are immutable once built.
 */

#include "hf/detail/zpoly.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hf {

class SingularLimit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// LaurentPolyQ
// ---------------------------------------------------------------------------

class LaurentPolyQ {
public:
    LaurentPolyQ() = default;
    LaurentPolyQ(long v) : LaurentPolyQ(mpq_class(v)) {}  // NOLINT(implicit)
    LaurentPolyQ(const mpq_class& v);                      // NOLINT(implicit)
    explicit LaurentPolyQ(const std::map<int, mpq_class>& terms);

    static LaurentPolyQ monomial(int exponent, const mpq_class& coeff = 1);
    static LaurentPolyQ q() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }
    // lowest / highest exponent carrying a nonzero coefficient
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    mpq_class coeff(int exponent) const;
    // nonzero terms only, increasing exponent
    std::map<int, mpq_class> terms() const;

    LaurentPolyQ operator-() const;
    friend LaurentPolyQ operator+(const LaurentPolyQ& a, const LaurentPolyQ& b);
    friend LaurentPolyQ operator-(const LaurentPolyQ& a, const LaurentPolyQ& b);
    friend LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b);
    LaurentPolyQ& operator+=(const LaurentPolyQ& b) { return *this = *this + b; }
    LaurentPolyQ& operator*=(const LaurentPolyQ& b) { return *this = *this * b; }
    friend bool operator==(const LaurentPolyQ& a, const LaurentPolyQ& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    // q -> q^{-1}
    LaurentPolyQ bar() const;

    std::string str() const;

private:
    void trim();
    int low_ = 0;
    std::vector<mpq_class> coeffs_;  // coeffs_[i] multiplies q^(low_+i); both ends nonzero

    friend class RatFuncQ;
};

// symmetric q-integer [n]_q = q^{n-1} + q^{n-3} + ... + q^{1-n}
LaurentPolyQ qint(int n);
// [n]_q! = [1]_q ... [n]_q
LaurentPolyQ qfact(int n);

// ---------------------------------------------------------------------------
// RatFuncQ
// ---------------------------------------------------------------------------

/// Element of Q(q) stored as  scale * q^shift * num(q) / den(q)  where num and
/// den are primitive integer polynomials with positive leading coefficient,
/// nonzero constant term and no common factor. The form is unique, so
/// equality is structural.
class RatFuncQ {
public:
    RatFuncQ();
    RatFuncQ(long v);                  // NOLINT(implicit)
    RatFuncQ(const mpq_class& v);      // NOLINT(implicit)
    RatFuncQ(const LaurentPolyQ& p);   // NOLINT(implicit)
    RatFuncQ(const LaurentPolyQ& num, const LaurentPolyQ& den);

    static RatFuncQ q() { return RatFuncQ(LaurentPolyQ::q()); }
    static RatFuncQ q_pow(int e) { return RatFuncQ(LaurentPolyQ::monomial(e)); }

    bool is_zero() const { return scale_ == 0; }
    bool is_one() const;
    // numerator carries the rational scale and the power of q
    LaurentPolyQ numerator() const;
    LaurentPolyQ denominator() const;
    bool is_laurent() const { return den_.is_one(); }

    RatFuncQ operator-() const;
    RatFuncQ inverse() const;
    RatFuncQ pow(int e) const;
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) { return a * b.inverse(); }
    RatFuncQ& operator+=(const RatFuncQ& b) { return *this = *this + b; }
    RatFuncQ& operator-=(const RatFuncQ& b) { return *this = *this - b; }
    RatFuncQ& operator*=(const RatFuncQ& b) { return *this = *this * b; }
    RatFuncQ& operator/=(const RatFuncQ& b) { return *this = *this / b; }

    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) {
        return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    // q -> q^{-1}
    RatFuncQ bar() const;
    // value at a rational q; throws SingularLimit at a pole
    mpq_class evaluate(const mpq_class& q) const;

    // canonical rendering, e.g. "q^2+1", "(q^2-1)/(q^4+1)", "-1/2*q^-1"
    std::string str() const;
    static RatFuncQ parse(const std::string& text);

private:
    static RatFuncQ make(mpq_class scale, int shift, detail::ZPoly num, detail::ZPoly den);

    mpq_class scale_;
    int shift_ = 0;
    detail::ZPoly num_;
    detail::ZPoly den_;
};

RatFuncQ qint_r(int n);  // [n]_q as RatFuncQ, any integer n ([-n] = -[n])

std::ostream& operator<<(std::ostream& os, const RatFuncQ& r);
std::ostream& operator<<(std::ostream& os, const LaurentPolyQ& p);

inline bool is_zero(const RatFuncQ& r) { return r.is_zero(); }

// ---------------------------------------------------------------------------
// ExtRatFunc
// ---------------------------------------------------------------------------

/// Dense polynomial in t over Q(q): coefficient i multiplies t^i; no trailing zeros.
using PolyT = std::vector<RatFuncQ>;

/// Rational function num(t)/den(t) over Q(q), reduced, with monic denominator.
class ExtRatFunc {
public:
    ExtRatFunc();
    ExtRatFunc(long v);              // NOLINT(implicit)
    ExtRatFunc(const RatFuncQ& c);   // NOLINT(implicit)
    ExtRatFunc(PolyT num, PolyT den);

    static ExtRatFunc t();

    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return num_.size() <= 1 && den_.size() == 1; }
    const PolyT& numerator() const { return num_; }
    const PolyT& denominator() const { return den_; }
    // constant value; throws std::logic_error when t occurs
    RatFuncQ constant_value() const;

    ExtRatFunc operator-() const;
    ExtRatFunc inverse() const;
    friend ExtRatFunc operator+(const ExtRatFunc& a, const ExtRatFunc& b);
    friend ExtRatFunc operator-(const ExtRatFunc& a, const ExtRatFunc& b) { return a + (-b); }
    friend ExtRatFunc operator*(const ExtRatFunc& a, const ExtRatFunc& b);
    friend ExtRatFunc operator/(const ExtRatFunc& a, const ExtRatFunc& b) { return a * b.inverse(); }
    ExtRatFunc& operator+=(const ExtRatFunc& b) { return *this = *this + b; }
    ExtRatFunc& operator-=(const ExtRatFunc& b) { return *this = *this - b; }
    ExtRatFunc& operator*=(const ExtRatFunc& b) { return *this = *this * b; }
    friend bool operator==(const ExtRatFunc& a, const ExtRatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // plain substitution; throws SingularLimit if the denominator vanishes
    RatFuncQ evaluate(const RatFuncQ& point) const;
    // t -> c*t
    ExtRatFunc scale_variable(const RatFuncQ& c) const;
    // t -> 1/t
    ExtRatFunc invert_variable() const;

    std::string str() const;

private:
    static ExtRatFunc make_reduced(PolyT num, PolyT den);
    PolyT num_;
    PolyT den_;
};

inline bool is_zero(const ExtRatFunc& r) { return r.is_zero(); }
std::ostream& operator<<(std::ostream& os, const ExtRatFunc& r);

/// Value of f at t = point after cancelling every common factor (t - point).
/// Throws SingularLimit when a pole remains.
RatFuncQ rat_limit(const ExtRatFunc& f, const RatFuncQ& point);
/// Same for an unreduced quotient num/den; den must not vanish identically.
RatFuncQ rat_limit(PolyT num, PolyT den, const RatFuncQ& point);

namespace polyt {
PolyT add(const PolyT& a, const PolyT& b);
PolyT mul(const PolyT& a, const PolyT& b);
// Euclidean division over Q(q): a = q*b + r
void divmod(const PolyT& a, const PolyT& b, PolyT& quot, PolyT& rem);
PolyT gcd(const PolyT& a, const PolyT& b);  // monic
RatFuncQ eval(const PolyT& a, const RatFuncQ& x);
}  // namespace polyt

}  // namespace hf
