#pragma once

/**
 * @file rmatrix.hpp
 * @brief R-matrices on C^n ⊗ C^n, the Hecke action on (C^n)^{⊗m}, fused
 *        idempotents and the finite identities behind the Sugawara operators.
 *
 * Spectral operators carry one variable t. For rbar it is x, for rcheck_z it
 * is z. The normalizing series f(x) never enters: every identity is checked
 * with Rbar plus the exact rational scalar that f would contribute.
 */

#include "hf/check.hpp"
#include "hf/hecke.hpp"
#include "hf/tensor_operator.hpp"
#include "hf/young.hpp"

#include <vector>

namespace hf {

/// Rbar(x), the four-term operator, variable x
SpectralOperator rbar(int n);
/// R = q sum e_ii⊗e_ii + sum_{i!=j} e_ii⊗e_jj + (q - q^{-1}) sum_{i<j} e_ij⊗e_ji
TensorOperatorQ rfin(int n);
/// flip P
TensorOperatorQ flip(int n);
/// Ř = P R
TensorOperatorQ rcheck(int n);
/// Ř(z) = Ř + (q - q^{-1}) / (z^{-1} - 1), variable z
SpectralOperator rcheck_z(int n);
/// D = diag(q^{n-1}, q^{n-3}, ..., q^{1-n}) on one factor
TensorOperatorQ d_matrix(int n);

/// T_sigma -> Ř_sigma, extended linearly
TensorOperatorQ hecke_action(const HeckeElement& a, int n);
SpectralOperator hecke_action(const BasicHeckeElement<ExtRatFunc>& a, int n);
/// Ř_sigma for every sigma in symmetric_group(m), cached
const std::vector<TensorOperatorQ>& hecke_basis_images(int m, int n);

/// inverse image of the longest element, built factor by factor
TensorOperatorQ rcheck_longest_inverse(int m, int n);

/// (1/c_{λ'}) Ř_Λ(z_1..z_m) Ř_0^{-1} at z_1 = 1, ..., z_m = 1, one variable at a time
TensorOperatorQ fused_idempotent(const StandardTableau& t, int n);

/// f_0..f_K from f(x q^{2n}) (1-x)(1-x q^{2n}) = f(x) (1-x q^2)(1-x q^{2n-2})
std::vector<RatFuncQ> f_series(int n, int k);
/// coefficients of x^0..x^K of  f(xq^{2n})(1-x)(1-xq^{2n}) - f(x)(1-xq^2)(1-xq^{2n-2})
std::vector<RatFuncQ> f_series_residual(int n, const std::vector<RatFuncQ>& f);
/// f(x q^{2n}) / f(x) as a rational function of x
ExtRatFunc crossing_scalar(int n);

/// both crossing relations in Rbar form, identically in x
CheckResult verify_crossing(int n);
/// the same at a numeric point x
CheckResult verify_crossing(int n, const RatFuncQ& x);

/// both sandwich identities E R_{0m}...R_{01} E = R_{0m}...R_{01} E and the
/// inverse-product one, with z/w as the spectral variable
CheckResult verify_lemma_RE(const StandardTableau& t, int n);

/// Ř_k(q^{-2d}) E_{s_k Λ} = E_Λ Ř_k(q^{2d}), d = d_k(Λ); s_k Λ must be standard
CheckResult verify_exchange(const StandardTableau& t, int k, int n);

}  // namespace hf
