#pragma once

/**
 * @file seminormal.hpp
 * @brief Seminormal representations of H_m, characters, matrix units and
 *        primitive idempotents.
 *
 * Basis convention. The orthonormal Young basis {v_L} needs square roots of
 * 1 - 1/[d]^2. We work in the rational basis w_L = sqrt(g_L) v_L instead,
 * where T_k acts by
 *
 *   T_k w_L = q^d/[d] w_L + beta w_{s_k L},   d = d_k(L),
 *   beta = 1 if d > 0,  beta = 1 - 1/[d]^2 if d < 0,
 *
 * and the Gram weights g_L = <w_L, w_L> have the closed form
 *
 *   g_L = prod (1 - 1/[c(A) - c(B)]^2)
 *
 * over pairs of boxes with A strictly north-east of B and L(A) < L(B).
 * Swapping k, k+1 with d_k(L) > 0 multiplies g by 1 - 1/[d]^2, matching beta.
 */

#include "hf/eigen_support.hpp"
#include "hf/hecke.hpp"
#include "hf/young.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace hf {

class SeminormalRep {
public:
    explicit SeminormalRep(const Partition& lambda) : SeminormalRep(SkewShape(lambda)) {}
    explicit SeminormalRep(SkewShape theta);

    const SkewShape& shape() const { return shape_; }
    int rank() const { return shape_.size(); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<StandardTableau>& basis() const { return basis_; }
    /// position of L in basis(); throws std::invalid_argument when absent
    int index_of(const StandardTableau& t) const;

    /// matrix of T_k in the rational basis, 1 <= k < m
    const MatrixQ& generator(int k) const;
    /// Gram weights g_L, aligned with basis()
    const std::vector<RatFuncQ>& gram() const { return gram_; }

    /// image of T_sigma, indexed as in symmetric_group(rank())
    const MatrixQ& basis_image(int sigma_index) const;
    MatrixQ operator()(const HeckeElement& a) const;

    RatFuncQ character(const HeckeElement& a) const;
    /// chi(T_sigma) for every sigma, cached
    const std::vector<RatFuncQ>& basis_characters() const;

private:
    void build_images() const;

    SkewShape shape_;
    std::vector<StandardTableau> basis_;
    std::vector<MatrixQ> gens_;
    std::vector<RatFuncQ> gram_;

    mutable std::once_flag images_once_;
    mutable std::vector<MatrixQ> images_;
    mutable std::vector<RatFuncQ> chars_;
};

/// shared immutable representations, built on first use
std::shared_ptr<const SeminormalRep> seminormal_rep(const Partition& lambda);
std::shared_ptr<const SeminormalRep> seminormal_rep(const SkewShape& theta);

/// q^d / [d]_q
RatFuncQ seminormal_diagonal(int d);
/// Gram weight of a (possibly skew) standard tableau, closed form above
RatFuncQ gram_weight(const StandardTableau& t);

MatrixQ rep_matrix(const Partition& lambda, int k);
MatrixQ rep_matrix(const SkewShape& theta, int k);
RatFuncQ character(const Partition& lambda, const HeckeElement& a);
RatFuncQ skew_character(const SkewShape& theta, const HeckeElement& a);

/// e_L through the product form of the Jucys-Murphy recurrence
const HeckeElement& matrix_unit_diag(const StandardTableau& t);
/// e_L through the limit form e_G (u - q^{2c}) / (u - y_m) at u = q^{2c}
HeckeElement matrix_unit_diag_limit(const StandardTableau& t);

/// sqrt(radicand) * element, enough to hold the off-diagonal matrix units
struct SurdHeckeElement {
    RatFuncQ radicand;
    HeckeElement element;

    friend SurdHeckeElement operator*(const SurdHeckeElement& a, const SurdHeckeElement& b) {
        return {a.radicand * b.radicand, a.element * b.element};
    }
    friend bool operator==(const SurdHeckeElement& a, const SurdHeckeElement& b) {
        if (a.element.is_zero() || b.element.is_zero()) return a.element.is_zero() && b.element.is_zero();
        return a.radicand == b.radicand && a.element == b.element;
    }
    bool is_zero() const { return element.is_zero(); }
};

/// e_{L,G} = sqrt(g_G / g_L) * (1/c) sum_sigma M(T_{sigma^{-1}})_{G,L} T_sigma
SurdHeckeElement matrix_unit(const StandardTableau& l, const StandardTableau& g);

/// sum_sigma phi(T_sigma) u phi(T_{sigma^{-1}})
MatrixQ schur_average(const Partition& lambda, const MatrixQ& u);

/// e_L (T_k - q^d/[d]) == (T_k + q^{-d}/[d]) e_{s_k L}, or e_L (T_k - q^d/[d]) == 0
/// when s_k L is not standard
bool lemma_et_check(const StandardTableau& t, int k);

}  // namespace hf
