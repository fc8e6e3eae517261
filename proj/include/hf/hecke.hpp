#pragma once

/**
 * @file hecke.hpp
 * @brief The Hecke algebra H_m in the basis {T_sigma}.
 *
 * Generators satisfy the braid relations and (T_i - q)(T_i + q^{-1}) = 0.
 * Permutations compose as functions: (a*b)(i) = a(b(i)), and sigma_i*sigma
 * swaps the values i, i+1 in the one-line notation of sigma.
 *
 * BasicHeckeElement is templated on the coefficient type so the same code
 * runs over Q(q) and over spectral-parameter extensions (ExtRatFunc).
 */

#include "hf/exact_arith.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hf {

class Permutation {
public:
    Permutation() = default;
    /// one-line notation with values 1..m; throws std::invalid_argument otherwise
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int m);
    /// simple transposition sigma_i = (i, i+1)
    static Permutation simple(int i, int m);
    static Permutation transposition(int a, int b, int m);
    static Permutation longest(int m);

    int rank() const { return static_cast<int>(w_.size()); }
    /// number of inversions
    int length() const { return length_; }
    int operator()(int i) const { return w_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& one_line() const { return w_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    /// sigma = sigma_{w_1} ... sigma_{w_l}, with l = length()
    std::vector<int> reduced_word() const;

    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.w_ == b.w_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.w_ <=> b.w_; }

private:
    std::vector<int> w_;
    int length_ = 0;
};

/// Cached tables for Sym_m, elements in lexicographic order of one-line notation.
struct SymmetricGroup {
    int m = 0;
    std::vector<Permutation> elements;
    std::vector<int> length;
    std::vector<int> inverse;
    // left[i-1][s] = index of sigma_i * s, right[i-1][s] = index of s * sigma_i
    std::vector<std::vector<int>> left;
    std::vector<std::vector<int>> right;
    std::vector<std::vector<int>> words;

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const Permutation& p) const;
};

/// shared, lazily built, thread-safe; m <= 8
const SymmetricGroup& symmetric_group(int m);

/// q - q^{-1}
inline const RatFuncQ& hecke_gap() {
    static const RatFuncQ g = RatFuncQ::q() - RatFuncQ::q().inverse();
    return g;
}

template <class S>
class BasicHeckeElement {
public:
    using Scalar = S;

    explicit BasicHeckeElement(int m = 0) : m_(m) {}

    static BasicHeckeElement scalar(int m, const S& c) {
        BasicHeckeElement e(m);
        if (!hf::is_zero(c)) e.terms_.emplace(0, c);
        return e;
    }
    static BasicHeckeElement unit(int m) { return scalar(m, S(1)); }
    static BasicHeckeElement basis(const Permutation& p, const S& c = S(1)) {
        BasicHeckeElement e(p.rank());
        if (!hf::is_zero(c)) e.terms_.emplace(symmetric_group(p.rank()).index_of(p), c);
        return e;
    }
    static BasicHeckeElement generator(int i, int m) {
        if (i < 1 || i >= m) throw std::out_of_range("generator index out of range");
        return basis(Permutation::simple(i, m));
    }

    int rank() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    S coeff(const Permutation& p) const {
        check_rank(p.rank());
        auto it = terms_.find(symmetric_group(m_).index_of(p));
        return it == terms_.end() ? S() : it->second;
    }
    /// nonzero terms in lexicographic order of the permutation
    std::vector<std::pair<Permutation, S>> terms() const {
        std::vector<std::pair<Permutation, S>> out;
        const auto& g = symmetric_group(m_);
        for (const auto& [i, c] : terms_) out.emplace_back(g.elements[i], c);
        return out;
    }
    /// terms keyed by the index in symmetric_group(rank())
    const std::map<int, S>& indexed_terms() const { return terms_; }

    BasicHeckeElement operator-() const {
        BasicHeckeElement r(*this);
        for (auto& [i, c] : r.terms_) c = -c;
        return r;
    }
    BasicHeckeElement& operator+=(const BasicHeckeElement& b) {
        check_rank(b.m_);
        for (const auto& [i, c] : b.terms_) accumulate(terms_, i, c);
        return *this;
    }
    BasicHeckeElement& operator-=(const BasicHeckeElement& b) { return *this += -b; }
    BasicHeckeElement& operator*=(const S& c) {
        if (hf::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, v] : terms_) v *= c;
        return *this;
    }
    friend BasicHeckeElement operator+(BasicHeckeElement a, const BasicHeckeElement& b) { return a += b; }
    friend BasicHeckeElement operator-(BasicHeckeElement a, const BasicHeckeElement& b) { return a -= b; }
    friend BasicHeckeElement operator*(BasicHeckeElement a, const S& c) { return a *= c; }
    friend BasicHeckeElement operator*(const S& c, BasicHeckeElement a) { return a *= c; }
    friend BasicHeckeElement operator+(BasicHeckeElement a, const S& c) { return a += scalar(a.m_, c); }
    friend BasicHeckeElement operator+(const S& c, BasicHeckeElement a) { return a += scalar(a.m_, c); }
    friend BasicHeckeElement operator-(BasicHeckeElement a, const S& c) { return a -= scalar(a.m_, c); }
    friend BasicHeckeElement operator-(const S& c, const BasicHeckeElement& a) { return scalar(a.m_, c) - a; }

    friend BasicHeckeElement operator*(const BasicHeckeElement& a, const BasicHeckeElement& b) {
        a.check_rank(b.m_);
        BasicHeckeElement r(a.m_);
        if (a.is_zero() || b.is_zero()) return r;
        const auto& g = symmetric_group(a.m_);
        // a * b = sum_s a_s T_s b. T_s b = T_i (T_{s_i s} b) for the first letter i of
        // a reduced word, so shorter prefixes are shared through the memo.
        std::map<int, std::map<int, S>> memo;
        memo.emplace(0, b.terms_);
        auto image = [&](auto&& self, int s) -> const std::map<int, S>& {
            auto it = memo.find(s);
            if (it != memo.end()) return it->second;
            const int i = g.words[s].front();
            std::map<int, S> v = left_generator(g, i, self(self, g.left[i - 1][s]));
            return memo.emplace(s, std::move(v)).first->second;
        };
        std::vector<S> acc(static_cast<std::size_t>(g.size()));
        for (const auto& [s, c] : a.terms_) {
            for (const auto& [i, v] : image(image, s)) acc[i] += c * v;
        }
        for (int i = 0; i < g.size(); ++i) {
            if (!hf::is_zero(acc[i])) r.terms_.emplace(i, std::move(acc[i]));
        }
        return r;
    }
    BasicHeckeElement& operator*=(const BasicHeckeElement& b) { return *this = *this * b; }

    friend bool operator==(const BasicHeckeElement& a, const BasicHeckeElement& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

    /// T_i * this
    BasicHeckeElement left_mul_generator(int i) const {
        check_generator(i);
        BasicHeckeElement r(m_);
        r.terms_ = left_generator(symmetric_group(m_), i, terms_);
        return r;
    }
    /// this * T_i
    BasicHeckeElement right_mul_generator(int i) const {
        check_generator(i);
        const auto& g = symmetric_group(m_);
        const S gap(hecke_gap());
        BasicHeckeElement r(m_);
        for (const auto& [s, c] : terms_) {
            const int t = g.right[i - 1][s];
            accumulate(r.terms_, t, c);
            if (g.length[t] < g.length[s]) accumulate(r.terms_, s, c * gap);
        }
        return r;
    }

    /// T_sigma -> T_{sigma^{-1}}, extended linearly
    BasicHeckeElement star() const {
        BasicHeckeElement r(m_);
        const auto& g = symmetric_group(m_);
        for (const auto& [s, c] : terms_) r.terms_.emplace(g.inverse[s], c);
        return r;
    }
    /// coefficient of the identity
    S tau() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? S() : it->second;
    }

    template <class F>
    auto map_coefficients(F f) const {
        using R = decltype(f(std::declval<S>()));
        BasicHeckeElement<R> r(m_);
        for (const auto& [s, c] : terms_) {
            R v = f(c);
            if (!hf::is_zero(v)) r.insert_indexed(s, std::move(v));
        }
        return r;
    }
    // internal: used by map_coefficients across scalar types
    void insert_indexed(int idx, S v) { accumulate(terms_, idx, v); }

    /// "(c)*T[2,1,3] + ...", terms in lexicographic order; "0" when empty
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        const auto& g = symmetric_group(m_);
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*T" + g.elements[s].str();
        }
        return out;
    }

private:
    void check_rank(int m) const {
        if (m != m_) throw std::invalid_argument("Hecke elements of different rank");
    }
    void check_generator(int i) const {
        if (i < 1 || i >= m_) throw std::out_of_range("generator index out of range");
    }
    static void accumulate(std::map<int, S>& t, int idx, const S& c) {
        if (hf::is_zero(c)) return;
        auto [it, fresh] = t.emplace(idx, c);
        if (!fresh) {
            it->second += c;
            if (hf::is_zero(it->second)) t.erase(it);
        }
    }
    // T_i T_s = T_{s_i s} if the length goes up, else T_{s_i s} + (q - q^{-1}) T_s
    static std::map<int, S> left_generator(const SymmetricGroup& g, int i, const std::map<int, S>& in) {
        std::map<int, S> out;
        const S gap(hecke_gap());
        for (const auto& [s, c] : in) {
            const int t = g.left[i - 1][s];
            accumulate(out, t, c);
            if (g.length[t] < g.length[s]) accumulate(out, s, c * gap);
        }
        return out;
    }

    int m_;
    std::map<int, S> terms_;
};

using HeckeElement = BasicHeckeElement<RatFuncQ>;

/// H_k -> H_m on the first k strands
template <class S>
BasicHeckeElement<S> embed(const BasicHeckeElement<S>& a, int m) {
    if (m < a.rank()) throw std::invalid_argument("embed: target rank too small");
    if (m == a.rank()) return a;
    const auto& small = symmetric_group(a.rank());
    const auto& big = symmetric_group(m);
    BasicHeckeElement<S> r(m);
    for (const auto& [s, c] : a.indexed_terms()) {
        std::vector<int> w = small.elements[s].one_line();
        for (int v = a.rank() + 1; v <= m; ++v) w.push_back(v);
        r.insert_indexed(big.index_of(Permutation(std::move(w))), c);
    }
    return r;
}

inline HeckeElement t_sigma(const Permutation& p) { return HeckeElement::basis(p); }
inline HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) { return a * b; }
inline HeckeElement star(const HeckeElement& a) { return a.star(); }
inline RatFuncQ tau(const HeckeElement& a) { return a.tau(); }

/// y_1 = 1, y_k = 1 + (q - q^{-1}) (T_{(1,k)} + ... + T_{(k-1,k)})
HeckeElement jucys_murphy(int k, int m);

/// T_k(x, y) = T_k + (q - q^{-1}) / (x^{-1} y - 1), written through u = x / y
BasicHeckeElement<ExtRatFunc> baxterized(int k, int m, const ExtRatFunc& u);

}  // namespace hf
