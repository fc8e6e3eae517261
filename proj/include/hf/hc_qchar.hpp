#pragma once

/**
 * @file hc_qchar.hpp
 * @brief The commutative algebra Π_q(n) with truncated series, Harish-Chandra
 *        images of S_λ(z), formal q-characters and Wakimoto eigenvalues, plus
 *        the finite Hecke algebra identities behind the image formula.
 *
 * Truncation. Generators l+_i[-r] and l-_i[r] have weight r, and a series of
 * order K lives modulo all monomials of weight > K. That span is an ideal, so
 * every operation is exact modulo it, and only z-powers in [-K, K] occur.
 * The relation l+_i[0] l-_i[0] = 1 is used to eliminate l-_i[0], which makes
 * weight-zero monomials Laurent monomials in the l+_i[0].
 */

#include "hf/check.hpp"
#include "hf/hecke.hpp"
#include "hf/young.hpp"

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hf {

/// l+_i[-r] (plus = true) or l-_i[r]; r = 0 only occurs with plus
struct PiGenerator {
    bool plus = true;
    int i = 1;
    int r = 0;

    /// "Lp(i,r)" or "Lm(i,r)"
    std::string name() const;
    // plus generators first, then by index and mode
    friend auto operator<=>(const PiGenerator& a, const PiGenerator& b) {
        return std::make_tuple(!a.plus, a.i, a.r) <=> std::make_tuple(!b.plus, b.i, b.r);
    }
    friend bool operator==(const PiGenerator&, const PiGenerator&) = default;
};

class PiMonomial {
public:
    PiMonomial() = default;
    /// g^e; e may be negative only for l+_i[0]
    PiMonomial(const PiGenerator& g, int e);

    int weight() const { return weight_; }
    const std::vector<std::pair<PiGenerator, int>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    /// only weight-zero monomials are invertible
    PiMonomial inverse() const;
    friend PiMonomial operator*(const PiMonomial& a, const PiMonomial& b);

    std::string str() const;
    friend bool operator<(const PiMonomial& a, const PiMonomial& b) { return a.f_ < b.f_; }
    friend bool operator==(const PiMonomial& a, const PiMonomial& b) { return a.f_ == b.f_; }

private:
    std::vector<std::pair<PiGenerator, int>> f_;
    int weight_ = 0;
};

using PiPolynomial = std::map<PiMonomial, RatFuncQ>;

class PiSeries {
public:
    PiSeries() = default;
    PiSeries(int n, int k) : n_(n), k_(k) {}

    static PiSeries constant(int n, int k, const RatFuncQ& c);
    /// l+_i(z) = sum_r l+_i[-r] z^r
    static PiSeries l_plus(int i, int n, int k);
    /// l-_i(z) = sum_r l-_i[r] z^{-r}, with l-_i[0] written as l+_i[0]^{-1}
    static PiSeries l_minus(int i, int n, int k);

    int n() const { return n_; }
    int truncation() const { return k_; }
    /// z-power -> polynomial, no empty entries
    const std::map<int, PiPolynomial>& coefficients() const { return c_; }
    PiPolynomial coefficient(int power) const;
    bool is_zero() const { return c_.empty(); }
    std::size_t term_count() const;

    /// adds c * z^power * mono, dropping it if its weight exceeds the truncation
    void add_term(int power, const PiMonomial& mono, const RatFuncQ& c);

    friend PiSeries operator+(const PiSeries& a, const PiSeries& b);
    friend PiSeries operator-(const PiSeries& a, const PiSeries& b);
    friend PiSeries operator*(const PiSeries& a, const PiSeries& b);
    friend PiSeries operator*(const PiSeries& a, const RatFuncQ& c);
    PiSeries& operator+=(const PiSeries& b) { return *this = *this + b; }
    friend bool operator==(const PiSeries& a, const PiSeries& b) { return a.c_ == b.c_ && a.k_ == b.k_; }

    /// z -> c z
    PiSeries rescaled(const RatFuncQ& c) const;
    /// needs a single invertible weight-zero term; throws std::domain_error otherwise
    PiSeries inverse() const;

    /// substitution l+_i[-r] -> kappa_plus[i-1][r], l-_i[r] -> kappa_minus[r]
    std::map<int, RatFuncQ> specialize(const std::vector<std::vector<RatFuncQ>>& kappa_plus,
                                       const std::vector<RatFuncQ>& kappa_minus) const;

private:
    void check_compatible(const PiSeries& b) const;
    int n_ = 1;
    int k_ = 0;
    std::map<int, PiPolynomial> c_;
};

/// x_i(z q^{-2 shift}) through truncation order k
PiSeries x_series(int i, int shift, int n, int k);

/// sum over semistandard T of prod_α x_{T(α)}(z q^{-2c(α)}); zero when λ has more than n rows
PiSeries hc_image(const Partition& lambda, int n, int k);

/// polynomial in x_{i,c} with integer coefficients
class FormalQCharacter {
public:
    /// sorted (i, c, multiplicity) triples
    using Monomial = std::vector<std::tuple<int, int, int>>;

    void add(const Monomial& m, long c);
    const std::map<Monomial, long>& terms() const { return terms_; }
    /// sum of coefficients
    long total() const;
    std::string str() const;
    friend bool operator==(const FormalQCharacter&, const FormalQCharacter&) = default;

private:
    std::map<Monomial, long> terms_;
};

FormalQCharacter formal_qcharacter(const Partition& lambda, int n);
/// x_{i,c} -> value_by_i[i-1], whatever c is
RatFuncQ evaluate(const FormalQCharacter& chi, const std::vector<RatFuncQ>& value_by_i);

/// truncated Laurent series in z
struct LaurentSeries {
    int truncation = 0;
    std::map<int, RatFuncQ> coefficients;
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;
};

/// eigenvalue of S_λ(z) on the Wakimoto module with parameters kappa; each
/// kappa_plus[i] and kappa_minus lists coefficients of z^r resp. z^{-r}
LaurentSeries wakimoto_eigenvalue(const Partition& lambda, const std::vector<std::vector<RatFuncQ>>& kappa_plus,
                                  const std::vector<RatFuncQ>& kappa_minus, int k);

// ---------------------------------------------------------------------------
// the finite identities behind the image formula

/// multiplicities (alpha_1..alpha_n) of a weakly increasing tuple with entries in 1..n
std::vector<int> tuple_composition(const std::vector<int>& i_tuple, int n);

struct CosetDecomposition {
    /// ω with ω t^μ row-standard, i.e. ω increasing on each block of equal entries
    std::vector<Permutation> representatives;
    /// permutations preserving each block
    std::vector<Permutation> young_subgroup;
};
CosetDecomposition coset_decomposition(const std::vector<int>& i_tuple);

/// s_(i) = sum_{π in the Young subgroup} q^{l(π)} T_π
HeckeElement young_symmetrizer(const std::vector<int>& i_tuple);
/// c with s_(i)^2 = c s_(i); throws std::logic_error when not proportional
RatFuncQ central_idempotent_norm(const std::vector<int>& i_tuple);
/// prod_r [alpha_r]_q! q^{alpha_r(alpha_r - 1)/2}
RatFuncQ young_norm_formula(const std::vector<int>& composition);

/// sorted entries of T, the tuple (i) with i(Λ) = T
std::vector<int> entry_tuple(const Tableau& t);
/// standard Λ of the same shape with i(Λ) = T
std::vector<StandardTableau> tableaux_over(const Tableau& t);

/// sum over Λ with i(Λ) = T, ω, π of q^{l(π)} χ_λ(e_Λ T_{ω^{-1}} T_ω T_π)
RatFuncQ verify_idenchi(const Partition& lambda, const Tableau& t, int n);
/// f_λ c_λ for semistandard T, 0 otherwise
RatFuncQ idenchi_expected(const Partition& lambda, const Tableau& t);

/// boxes of T holding r, as outer/inner shapes
SkewShape value_shape(const Tableau& t, int r);
/// sum_{σ} q^{l(σ)} χ_θ(T_σ)
RatFuncQ skew_trivial_pairing(const SkewShape& theta);

/// sum_ω φ_λ(T_ω s_(i) e_T T_{ω^{-1}}) == prod 1/([α]! q^{..}) c_λ χ_λ(s_(i) e_T) id
CheckResult verify_coset_average(const Partition& lambda, const Tableau& t);

}  // namespace hf
