#include "hf/detail/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace hf::detail {

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    std::vector<mpz_class> r(big);
    for (std::size_t i = 0; i < small.size(); ++i) r[i] += small[i];
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + b.negated(); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::scaled(const mpz_class& s) const {
    if (s == 0) return {};
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v *= s;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::negated() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return ZPoly(std::move(r));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

int ZPoly::low_zeros() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
}

ZPoly ZPoly::shifted_down(int k) const {
    if (k <= 0) return *this;
    return ZPoly(std::vector<mpz_class>(c_.begin() + k, c_.end()));
}

ZPoly ZPoly::shifted_up(int k) const {
    if (k <= 0 || is_zero()) return *this;
    std::vector<mpz_class> r(static_cast<std::size_t>(k));
    r.insert(r.end(), c_.begin(), c_.end());
    return ZPoly(std::move(r));
}

ZPoly ZPoly::divexact(const mpz_class& d) const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return ZPoly(std::move(r));
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ZPoly: division by zero polynomial");
    if (is_zero()) return {};
    if (d.degree() == 0) return divexact(d.c_[0]);
    if (degree() < d.degree()) throw std::logic_error("ZPoly: inexact division");
    std::vector<mpz_class> rem(c_);
    const int dd = d.degree();
    std::vector<mpz_class> q(static_cast<std::size_t>(degree() - dd + 1));
    mpz_class t;
    for (int i = degree() - dd; i >= 0; --i) {
        mpz_class& top = rem[static_cast<std::size_t>(i + dd)];
        if (top == 0) continue;
        mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), d.lc().get_mpz_t());
        for (int j = 0; j <= dd; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), q[i].get_mpz_t(), d.c_[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(q));
}

ZPoly ZPoly::primitive() const {
    if (is_zero()) return {};
    mpz_class g = content();
    if (lc() < 0) g = -g;
    if (g == 1) return *this;
    return divexact(g);
}

mpq_class ZPoly::evaluate(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
    return acc;
}

ZPoly prem(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("prem: zero divisor");
    std::vector<mpz_class> r(a.coeffs());
    const int db = b.degree();
    const auto& bc = b.coeffs();
    mpz_class top;
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const int dr = static_cast<int>(r.size()) - 1;
        top = r.back();
        // r <- lc(b) * r - top * x^(dr-db) * b
        for (auto& v : r) v *= b.lc();
        for (int j = 0; j <= db; ++j) {
            mpz_submul(r[dr - db + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        // keep coefficient growth in check; the gcd only needs the primitive part
        if (!r.empty()) {
            mpz_class g = 0;
            for (const auto& v : r) {
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
                if (g == 1) break;
            }
            if (g > 1) for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        }
    }
    return ZPoly(std::move(r));
}

namespace {

constexpr std::uint64_t kPrime = 2147483629ULL;  // below 2^31

std::vector<std::uint64_t> reduce_mod(const ZPoly& a) {
    std::vector<std::uint64_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), kPrime);
    return r;
}

std::uint64_t inverse_mod(std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = kPrime - 2;
    while (e) {
        if (e & 1) result = result * base % kPrime;
        base = base * base % kPrime;
        e >>= 1;
    }
    return result;
}

// degree of gcd(a mod p, b mod p); both leading coefficients must survive the reduction
int gcd_degree_mod_p(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        const std::uint64_t inv = inverse_mod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t f = a.back() * inv % kPrime;
            const std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[off + j] = (a[off + j] + kPrime - f * b[j] % kPrime) % kPrime;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    if (a.degree() == 0 || b.degree() == 0) return ZPoly::one();
    // coprime modulo a prime not dividing either leading coefficient implies coprime over Z
    if (mpz_fdiv_ui(a.lc().get_mpz_t(), kPrime) != 0 && mpz_fdiv_ui(b.lc().get_mpz_t(), kPrime) != 0 &&
        gcd_degree_mod_p(reduce_mod(a), reduce_mod(b)) == 0) {
        return ZPoly::one();
    }
    ZPoly x = a.primitive();
    ZPoly y = b.primitive();
    if (x == y) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return ZPoly::one();
        ZPoly r = prem(x, y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive();
}

}  // namespace hf::detail
