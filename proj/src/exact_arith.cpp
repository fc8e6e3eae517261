#include "hf/exact_arith.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace hf {

using detail::ZPoly;

// ---------------------------------------------------------------------------
// LaurentPolyQ

LaurentPolyQ::LaurentPolyQ(const mpq_class& v) {
    if (v != 0) coeffs_.push_back(v);
}

LaurentPolyQ::LaurentPolyQ(const std::map<int, mpq_class>& terms) {
    if (terms.empty()) return;
    low_ = terms.begin()->first;
    coeffs_.resize(static_cast<std::size_t>(terms.rbegin()->first - low_ + 1));
    for (const auto& [e, c] : terms) coeffs_[static_cast<std::size_t>(e - low_)] = c;
    trim();
}

LaurentPolyQ LaurentPolyQ::monomial(int exponent, const mpq_class& coeff) {
    LaurentPolyQ p(coeff);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

void LaurentPolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
    if (k > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
        low_ += static_cast<int>(k);
    }
    if (coeffs_.empty()) low_ = 0;
}

mpq_class LaurentPolyQ::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, mpq_class> LaurentPolyQ::terms() const {
    std::map<int, mpq_class> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
    }
    return out;
}

LaurentPolyQ LaurentPolyQ::operator-() const {
    LaurentPolyQ r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPolyQ operator+(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPolyQ r;
    r.low_ = std::min(a.low_, b.low_);
    const int hi = std::max(a.high(), b.high());
    r.coeffs_.resize(static_cast<std::size_t>(hi - r.low_ + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[a.low_ - r.low_ + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[b.low_ - r.low_ + i] += b.coeffs_[i];
    r.trim();
    return r;
}

LaurentPolyQ operator-(const LaurentPolyQ& a, const LaurentPolyQ& b) { return a + (-b); }

LaurentPolyQ operator*(const LaurentPolyQ& a, const LaurentPolyQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPolyQ r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.resize(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

LaurentPolyQ LaurentPolyQ::bar() const {
    std::map<int, mpq_class> t;
    for (const auto& [e, c] : terms()) t.emplace(-e, c);
    return LaurentPolyQ(t);
}

namespace {

void append_term(std::string& out, const mpq_class& c, int e, const char* var) {
    std::string body;
    const mpq_class a = abs(c);
    if (e == 0) {
        body = a.get_str();
    } else {
        std::string v = var;
        if (e != 1) v += "^" + std::to_string(e);
        body = (a == 1) ? v : a.get_str() + "*" + v;
    }
    if (c < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    out += body;
}

}  // namespace

std::string LaurentPolyQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        if (coeffs_[i] != 0) append_term(out, coeffs_[i], low_ + i, "q");
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolyQ& p) { return os << p.str(); }

LaurentPolyQ qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    std::map<int, mpq_class> t;
    for (int k = 0; k < n; ++k) t.emplace(n - 1 - 2 * k, 1);
    return LaurentPolyQ(t);
}

LaurentPolyQ qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPolyQ r(1);
    for (int k = 2; k <= n; ++k) r *= qint(k);
    return r;
}

// ---------------------------------------------------------------------------
// RatFuncQ

namespace {

// p = scale * q^shift * prim(q), prim primitive with positive lc and prim(0) != 0
void split_laurent(const std::vector<mpq_class>& coeffs, int low, mpq_class& scale, int& shift, ZPoly& prim) {
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(coeffs.size());
    for (const auto& c : coeffs) ints.emplace_back(c.get_num() * (den / c.get_den()));
    ZPoly z(std::move(ints));
    mpz_class cont = z.content();
    if (z.lc() < 0) cont = -cont;
    prim = z.divexact(cont);
    scale = mpq_class(cont, den);
    scale.canonicalize();
    shift = low;
}

}  // namespace

RatFuncQ::RatFuncQ() : scale_(0), num_(ZPoly::one()), den_(ZPoly::one()) {}
RatFuncQ::RatFuncQ(long v) : RatFuncQ(mpq_class(v)) {}
RatFuncQ::RatFuncQ(const mpq_class& v) : scale_(v), num_(ZPoly::one()), den_(ZPoly::one()) {}

RatFuncQ::RatFuncQ(const LaurentPolyQ& p) : RatFuncQ() {
    if (p.is_zero()) return;
    split_laurent(p.coeffs_, p.low_, scale_, shift_, num_);
}

RatFuncQ::RatFuncQ(const LaurentPolyQ& num, const LaurentPolyQ& den) {
    if (den.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    *this = RatFuncQ(num) * RatFuncQ(den).inverse();
}

RatFuncQ RatFuncQ::make(mpq_class scale, int shift, ZPoly num, ZPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    RatFuncQ r;
    if (scale == 0 || num.is_zero()) return r;
    int k = num.low_zeros();
    shift += k;
    num = num.shifted_down(k);
    k = den.low_zeros();
    shift -= k;
    den = den.shifted_down(k);
    mpz_class c = num.content();
    if (num.lc() < 0) c = -c;
    num = num.divexact(c);
    scale *= c;
    c = den.content();
    if (den.lc() < 0) c = -c;
    den = den.divexact(c);
    scale /= c;
    ZPoly g = detail::gcd(num, den);
    if (!g.is_one()) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
    r.scale_ = std::move(scale);
    r.shift_ = shift;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

bool RatFuncQ::is_one() const { return scale_ == 1 && shift_ == 0 && num_.is_one() && den_.is_one(); }

LaurentPolyQ RatFuncQ::numerator() const {
    LaurentPolyQ p;
    if (is_zero()) return p;
    p.low_ = shift_;
    for (const auto& c : num_.coeffs()) p.coeffs_.emplace_back(scale_ * mpq_class(c));
    p.trim();
    return p;
}

LaurentPolyQ RatFuncQ::denominator() const {
    LaurentPolyQ p;
    for (const auto& c : den_.coeffs()) p.coeffs_.emplace_back(c);
    p.trim();
    return p;
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r(*this);
    r.scale_ = -r.scale_;
    return r;
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
    RatFuncQ r;
    r.scale_ = 1 / scale_;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    return r;
}

RatFuncQ RatFuncQ::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFuncQ result(1);
    RatFuncQ base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int e = std::min(a.shift_, b.shift_);
    const ZPoly p1 = a.num_.shifted_up(a.shift_ - e);
    const ZPoly p2 = b.num_.shifted_up(b.shift_ - e);
    ZPoly g, a_rest, b_rest;
    const bool same_den = a.den_ == b.den_;
    if (same_den) {
        g = a.den_;
    } else {
        g = detail::gcd(a.den_, b.den_);
        a_rest = a.den_.divexact(g);
        b_rest = b.den_.divexact(g);
    }
    const mpz_class c1 = a.scale_.get_num() * b.scale_.get_den();
    const mpz_class c2 = b.scale_.get_num() * a.scale_.get_den();
    ZPoly n = same_den ? p1.scaled(c1) + p2.scaled(c2) : (p1 * b_rest).scaled(c1) + (p2 * a_rest).scaled(c2);
    if (n.is_zero()) return {};
    RatFuncQ r;
    r.scale_ = mpq_class(1, a.scale_.get_den() * b.scale_.get_den());
    r.shift_ = e;
    const int k = n.low_zeros();
    r.shift_ += k;
    n = n.shifted_down(k);
    mpz_class cont = n.content();
    if (n.lc() < 0) cont = -cont;
    n = n.divexact(cont);
    r.scale_ *= cont;
    r.scale_.canonicalize();
    // gcd(n, a_rest * b_rest) = 1 already; only the shared part can cancel
    const ZPoly h = detail::gcd(n, g);
    if (!h.is_one()) {
        n = n.divexact(h);
        g = g.divexact(h);
    }
    r.num_ = std::move(n);
    r.den_ = same_den ? std::move(g) : g * a_rest * b_rest;
    return r;
}

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatFuncQ r;
    r.scale_ = a.scale_ * b.scale_;
    r.shift_ = a.shift_ + b.shift_;
    ZPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!an.is_one() && !bd.is_one()) {
        const ZPoly g = detail::gcd(an, bd);
        if (!g.is_one()) {
            an = an.divexact(g);
            bd = bd.divexact(g);
        }
    }
    if (!bn.is_one() && !ad.is_one()) {
        const ZPoly g = detail::gcd(bn, ad);
        if (!g.is_one()) {
            bn = bn.divexact(g);
            ad = ad.divexact(g);
        }
    }
    r.num_ = an.is_one() ? std::move(bn) : (bn.is_one() ? std::move(an) : an * bn);
    r.den_ = ad.is_one() ? std::move(bd) : (bd.is_one() ? std::move(ad) : ad * bd);
    return r;
}

RatFuncQ RatFuncQ::bar() const {
    if (is_zero()) return *this;
    std::vector<mpz_class> rn(num_.coeffs().rbegin(), num_.coeffs().rend());
    std::vector<mpz_class> rd(den_.coeffs().rbegin(), den_.coeffs().rend());
    return make(scale_, -shift_ - num_.degree() + den_.degree(), ZPoly(std::move(rn)), ZPoly(std::move(rd)));
}

mpq_class RatFuncQ::evaluate(const mpq_class& x) const {
    if (is_zero()) return 0;
    const mpq_class d = den_.evaluate(x);
    if (d == 0 || (x == 0 && shift_ < 0)) throw SingularLimit("RatFuncQ: evaluation at a pole");
    mpq_class xp = 1;
    mpq_class base = shift_ >= 0 ? x : 1 / x;
    for (int i = 0; i < std::abs(shift_); ++i) xp *= base;
    return scale_ * xp * num_.evaluate(x) / d;
}

std::string RatFuncQ::str() const {
    if (den_.is_one()) return numerator().str();
    return "(" + numerator().str() + ")/(" + denominator().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFuncQ& r) { return os << r.str(); }

RatFuncQ qint_r(int n) {
    if (n >= 0) return RatFuncQ(qint(n));
    return -RatFuncQ(qint(-n));
}

namespace {

// recursive-descent reader for the rendering produced by str()
class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}

    RatFuncQ parse() {
        RatFuncQ v = expr();
        skip();
        if (pos_ != s_.size()) fail();
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const {
        throw std::invalid_argument("cannot parse coefficient '" + s_ + "' near position " + std::to_string(pos_));
    }
    RatFuncQ expr() {
        RatFuncQ v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }
    RatFuncQ term() {
        RatFuncQ v = factor();
        for (;;) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                RatFuncQ d = factor();
                if (d.is_zero()) throw std::invalid_argument("division by zero in '" + s_ + "'");
                v /= d;
            } else {
                return v;
            }
        }
    }
    RatFuncQ factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('(')) {
            RatFuncQ v = expr();
            if (!eat(')')) fail();
            return v;
        }
        if (pos_ < s_.size() && s_[pos_] == 'q') {
            ++pos_;
            int e = 1;
            if (eat('^')) {
                skip();
                bool neg = false;
                if (pos_ < s_.size() && s_[pos_] == '-') {
                    neg = true;
                    ++pos_;
                }
                const std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                if (start == pos_) fail();
                e = std::stoi(s_.substr(start, pos_ - start));
                if (neg) e = -e;
            }
            return RatFuncQ::q_pow(e);
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail();
        return RatFuncQ(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFuncQ RatFuncQ::parse(const std::string& text) { return Reader(text).parse(); }

// ---------------------------------------------------------------------------
// Polynomials in t over Q(q)

namespace polyt {

namespace {
void trim(PolyT& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace

PolyT add(const PolyT& a, const PolyT& b) {
    PolyT r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

PolyT mul(const PolyT& a, const PolyT& b) {
    if (a.empty() || b.empty()) return {};
    PolyT r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void divmod(const PolyT& a, const PolyT& b, PolyT& quot, PolyT& rem) {
    if (b.empty()) throw std::domain_error("polyt::divmod: zero divisor");
    rem = a;
    quot.clear();
    if (a.size() < b.size()) return;
    quot.assign(a.size() - b.size() + 1, RatFuncQ());
    const RatFuncQ inv_lc = b.back().inverse();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (rem[i].is_zero()) continue;
        const RatFuncQ f = rem[i] * inv_lc;
        const std::size_t off = i - (b.size() - 1);
        quot[off] = f;
        for (std::size_t j = 0; j < b.size(); ++j) rem[off + j] -= f * b[j];
    }
    trim(quot);
    trim(rem);
}

PolyT gcd(const PolyT& a, const PolyT& b) {
    PolyT x = a, y = b;
    while (!y.empty()) {
        if (y.size() == 1) return {RatFuncQ(1)};
        PolyT qt, r;
        divmod(x, y, qt, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    const RatFuncQ inv = x.back().inverse();
    for (auto& c : x) c *= inv;
    return x;
}

RatFuncQ eval(const PolyT& a, const RatFuncQ& x) {
    RatFuncQ acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace polyt

// ---------------------------------------------------------------------------
// ExtRatFunc

ExtRatFunc::ExtRatFunc() : den_{RatFuncQ(1)} {}
ExtRatFunc::ExtRatFunc(long v) : ExtRatFunc(RatFuncQ(v)) {}
ExtRatFunc::ExtRatFunc(const RatFuncQ& c) : den_{RatFuncQ(1)} {
    if (!c.is_zero()) num_.push_back(c);
}
ExtRatFunc::ExtRatFunc(PolyT num, PolyT den) { *this = make_reduced(std::move(num), std::move(den)); }

ExtRatFunc ExtRatFunc::t() {
    ExtRatFunc r;
    r.num_ = {RatFuncQ(), RatFuncQ(1)};
    return r;
}

namespace {
void trim_t(PolyT& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace

ExtRatFunc ExtRatFunc::make_reduced(PolyT num, PolyT den) {
    trim_t(num);
    trim_t(den);
    if (den.empty()) throw std::domain_error("ExtRatFunc: zero denominator");
    ExtRatFunc r;
    if (num.empty()) return r;
    if (den.size() > 1 && num.size() > 1) {
        PolyT g = polyt::gcd(num, den);
        if (g.size() > 1) {
            PolyT qn, qd, rn, rd;
            polyt::divmod(num, g, qn, rn);
            polyt::divmod(den, g, qd, rd);
            num = std::move(qn);
            den = std::move(qd);
        }
    }
    if (!den.back().is_one()) {
        const RatFuncQ inv = den.back().inverse();
        for (auto& c : num) c *= inv;
        for (auto& c : den) c *= inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFuncQ ExtRatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("ExtRatFunc: value depends on t");
    return num_.empty() ? RatFuncQ() : num_[0];
}

ExtRatFunc ExtRatFunc::operator-() const {
    ExtRatFunc r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
}

ExtRatFunc ExtRatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("ExtRatFunc: inverse of zero");
    return make_reduced(den_, num_);
}

ExtRatFunc operator+(const ExtRatFunc& a, const ExtRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.size() == 1) {
            ExtRatFunc r;
            r.num_ = polyt::add(a.num_, b.num_);
            return r;
        }
        return ExtRatFunc::make_reduced(polyt::add(a.num_, b.num_), a.den_);
    }
    const PolyT g = polyt::gcd(a.den_, b.den_);
    if (g.size() == 1) {
        // coprime denominators; the sum is already reduced
        ExtRatFunc r;
        r.num_ = polyt::add(polyt::mul(a.num_, b.den_), polyt::mul(b.num_, a.den_));
        if (r.num_.empty()) return {};
        r.den_ = polyt::mul(a.den_, b.den_);
        return r;
    }
    PolyT ar, br, rem;
    polyt::divmod(a.den_, g, ar, rem);
    polyt::divmod(b.den_, g, br, rem);
    return ExtRatFunc::make_reduced(polyt::add(polyt::mul(a.num_, br), polyt::mul(b.num_, ar)),
                                    polyt::mul(polyt::mul(ar, br), g));
}

ExtRatFunc operator*(const ExtRatFunc& a, const ExtRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.size() == 1 && b.den_.size() == 1) {
        ExtRatFunc r;
        r.num_ = polyt::mul(a.num_, b.num_);
        return r;
    }
    PolyT an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    auto cancel = [](PolyT& x, PolyT& y) {
        if (x.size() <= 1 || y.size() <= 1) return;
        PolyT g = polyt::gcd(x, y);
        if (g.size() <= 1) return;
        PolyT qx, qy, r;
        polyt::divmod(x, g, qx, r);
        polyt::divmod(y, g, qy, r);
        x = std::move(qx);
        y = std::move(qy);
    };
    cancel(an, bd);
    cancel(bn, ad);
    PolyT num = polyt::mul(an, bn);
    PolyT den = polyt::mul(ad, bd);
    if (!den.back().is_one()) {
        const RatFuncQ inv = den.back().inverse();
        for (auto& c : num) c *= inv;
        for (auto& c : den) c *= inv;
    }
    ExtRatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RatFuncQ ExtRatFunc::evaluate(const RatFuncQ& point) const {
    const RatFuncQ d = polyt::eval(den_, point);
    if (d.is_zero()) throw SingularLimit("ExtRatFunc: evaluation at a pole");
    return polyt::eval(num_, point) / d;
}

ExtRatFunc ExtRatFunc::scale_variable(const RatFuncQ& c) const {
    if (c.is_zero()) return ExtRatFunc(evaluate(RatFuncQ()));
    PolyT n = num_, d = den_;
    RatFuncQ p(1);
    for (std::size_t i = 0; i < std::max(n.size(), d.size()); ++i) {
        if (i < n.size()) n[i] *= p;
        if (i < d.size()) d[i] *= p;
        p *= c;
    }
    return make_reduced(std::move(n), std::move(d));
}

ExtRatFunc ExtRatFunc::invert_variable() const {
    if (is_zero()) return *this;
    PolyT n(num_.rbegin(), num_.rend());
    PolyT d(den_.rbegin(), den_.rend());
    const int dn = static_cast<int>(num_.size()) - 1;
    const int dd = static_cast<int>(den_.size()) - 1;
    if (dd > dn) n.insert(n.begin(), static_cast<std::size_t>(dd - dn), RatFuncQ());
    if (dn > dd) d.insert(d.begin(), static_cast<std::size_t>(dn - dd), RatFuncQ());
    return make_reduced(std::move(n), std::move(d));
}

namespace {
std::string poly_str(const PolyT& p) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        if (!out.empty()) out += "+";
        out += "(" + p[i].str() + ")";
        if (i > 0) out += i == 1 ? "*t" : "*t^" + std::to_string(i);
    }
    return out;
}
}  // namespace

std::string ExtRatFunc::str() const {
    if (den_.size() == 1) return poly_str(num_);
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const ExtRatFunc& r) { return os << r.str(); }

RatFuncQ rat_limit(const ExtRatFunc& f, const RatFuncQ& point) {
    if (f.is_zero()) return {};
    return rat_limit(f.numerator(), f.denominator(), point);
}

RatFuncQ rat_limit(PolyT num, PolyT den, const RatFuncQ& point) {
    auto trim = [](PolyT& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(num);
    trim(den);
    if (den.empty()) throw std::domain_error("rat_limit: zero denominator");
    if (num.empty()) return {};
    // synthetic division by (t - point)
    auto deflate = [&point](PolyT& p) {
        PolyT out(p.size() - 1);
        RatFuncQ carry;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * point;
            out[i - 1] = carry;
        }
        p = std::move(out);
    };
    for (;;) {
        const RatFuncQ dv = polyt::eval(den, point);
        if (!dv.is_zero()) return polyt::eval(num, point) / dv;
        if (!polyt::eval(num, point).is_zero()) throw SingularLimit("rat_limit: pole at " + point.str());
        deflate(num);
        deflate(den);
    }
}

}  // namespace hf
