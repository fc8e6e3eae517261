#include "hf/rmatrix.hpp"

#include "hf/seminormal.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hf {

namespace {

int pair_index(int i, int j, int n) { return i * n + j; }

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("local dimension must be positive");
}

ExtRatFunc ext_q_pow(int e) { return ExtRatFunc(RatFuncQ::q_pow(e)); }

std::string entry_witness(const char* what, int r, int c, const std::string& lhs, const std::string& rhs) {
    return std::string(what) + ": entry (" + std::to_string(r) + "," + std::to_string(c) + ") " + lhs + " vs " + rhs;
}

template <class S>
CheckResult compare(const TensorOperator<S>& lhs, const TensorOperator<S>& rhs, const char* what) {
    if (lhs == rhs) return CheckResult::pass();
    for (int r = 0; r < lhs.dim(); ++r) {
        if (lhs.row(r) == rhs.row(r)) continue;
        for (int c = 0; c < lhs.dim(); ++c) {
            const S a = lhs.entry(r, c);
            const S b = rhs.entry(r, c);
            if (!(a == b)) return CheckResult::fail(entry_witness(what, r, c, a.str(), b.str()));
        }
    }
    return CheckResult::fail(what);
}

}  // namespace

SpectralOperator rbar(int n) {
    check_n(n);
    const ExtRatFunc x = ExtRatFunc::t();
    const ExtRatFunc g(hecke_gap());
    const ExtRatFunc den_inv = (ext_q_pow(1) - ext_q_pow(-1) * x).inverse();
    const ExtRatFunc diag = (ExtRatFunc(1) - x) * den_inv;
    const ExtRatFunc lower = g * x * den_inv;
    const ExtRatFunc upper = g * den_inv;
    SpectralOperator r(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int ij = pair_index(i, j, n);
            if (i == j) {
                r.add(ij, ij, ExtRatFunc(1));
                continue;
            }
            r.add(ij, ij, diag);
            // e_ij ⊗ e_ji sends e_j ⊗ e_i to e_i ⊗ e_j
            r.add(ij, pair_index(j, i, n), i > j ? lower : upper);
        }
    }
    return r;
}

TensorOperatorQ rfin(int n) {
    check_n(n);
    TensorOperatorQ r(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int ij = pair_index(i, j, n);
            r.add(ij, ij, i == j ? RatFuncQ::q() : RatFuncQ(1));
            if (i < j) r.add(ij, pair_index(j, i, n), hecke_gap());
        }
    }
    return r;
}

TensorOperatorQ flip(int n) {
    check_n(n);
    TensorOperatorQ r(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) r.add(pair_index(j, i, n), pair_index(i, j, n), RatFuncQ(1));
    }
    return r;
}

TensorOperatorQ rcheck(int n) { return flip(n) * rfin(n); }

SpectralOperator rcheck_z(int n) {
    const ExtRatFunc z = ExtRatFunc::t();
    // (q - q^{-1}) / (z^{-1} - 1) = (q - q^{-1}) z / (1 - z)
    const ExtRatFunc shift = ExtRatFunc(hecke_gap()) * z / (ExtRatFunc(1) - z);
    return lift(rcheck(n)) + SpectralOperator::scalar(n, 2, shift);
}

TensorOperatorQ d_matrix(int n) {
    check_n(n);
    std::vector<RatFuncQ> d;
    for (int i = 1; i <= n; ++i) d.push_back(RatFuncQ::q_pow(n - 2 * i + 1));
    return TensorOperatorQ::diagonal(d);
}

const std::vector<TensorOperatorQ>& hecke_basis_images(int m, int n) {
    check_n(n);
    if (m < 1) throw std::invalid_argument("hecke_basis_images: need m >= 1");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<TensorOperatorQ>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, n});
    if (it != cache.end()) return it->second;

    const auto& g = symmetric_group(m);
    std::vector<TensorOperatorQ> gens;
    const TensorOperatorQ rc = rcheck(n);
    for (int k = 1; k < m; ++k) gens.push_back(TensorOperatorQ::placed(rc, k, k + 1, m));
    std::vector<TensorOperatorQ> images(static_cast<std::size_t>(g.size()));
    std::vector<bool> done(static_cast<std::size_t>(g.size()), false);
    auto build = [&](auto&& self, int s) -> const TensorOperatorQ& {
        if (!done[s]) {
            if (g.length[s] == 0) {
                images[s] = TensorOperatorQ::identity(n, m);
            } else {
                const int i = g.words[s].front();
                images[s] = gens[i - 1] * self(self, g.left[i - 1][s]);
            }
            done[s] = true;
        }
        return images[s];
    };
    for (int s = 0; s < g.size(); ++s) build(build, s);
    return cache.emplace(std::make_pair(m, n), std::move(images)).first->second;
}

TensorOperatorQ hecke_action(const HeckeElement& a, int n) {
    const auto& images = hecke_basis_images(a.rank(), n);
    TensorOperatorQ r(n, a.rank());
    for (const auto& [s, c] : a.indexed_terms()) r += images[s] * c;
    return r;
}

SpectralOperator hecke_action(const BasicHeckeElement<ExtRatFunc>& a, int n) {
    const auto& images = hecke_basis_images(a.rank(), n);
    SpectralOperator r(n, a.rank());
    for (const auto& [s, c] : a.indexed_terms()) r += lift(images[s]) * c;
    return r;
}

TensorOperatorQ rcheck_longest_inverse(int m, int n) {
    // Ř^{-1} = Ř - (q - q^{-1}) by the quadratic relation
    const TensorOperatorQ inv_local = rcheck(n) - TensorOperatorQ::scalar(n, 2, hecke_gap());
    const std::vector<int> word = Permutation::longest(m).reduced_word();
    TensorOperatorQ r = TensorOperatorQ::identity(n, m);
    for (auto it = word.rbegin(); it != word.rend(); ++it) r *= TensorOperatorQ::placed(inv_local, *it, *it + 1, m);
    return r;
}

TensorOperatorQ fused_idempotent(const StandardTableau& t, int n) {
    if (t.is_skew()) throw std::invalid_argument("fused_idempotent: straight shapes only");
    const int m = t.size();
    check_n(n);
    if (m == 0) return TensorOperatorQ::identity(n, 0);
    const TensorOperatorQ rc = rcheck(n);
    const RatFuncQ& gap = hecke_gap();

    // After z_1 = ... = z_{j-1} = 1 only z_j = t is live. Clearing the
    // denominators of the factors (i, j) turns the running product into a
    // polynomial in t with operator coefficients.
    TensorOperatorQ f = TensorOperatorQ::identity(n, m);
    for (int j = 2; j <= m; ++j) {
        std::vector<TensorOperatorQ> poly{f};
        PolyT den{RatFuncQ(1)};
        for (int i = 1; i < j; ++i) {
            const RatFuncQ a = RatFuncQ::q_pow(2 * (t.content(j) - t.content(i)));
            const TensorOperatorQ r = TensorOperatorQ::placed(rc, j - i, j - i + 1, m);
            // (a t - 1) Ř_{j-i}(.) = (g - Ř) + t a Ř
            const TensorOperatorQ c0 = TensorOperatorQ::scalar(n, m, gap) - r;
            const TensorOperatorQ c1 = r * a;
            std::vector<TensorOperatorQ> next(poly.size() + 1, TensorOperatorQ(n, m));
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d] * c0;
                next[d + 1] += poly[d] * c1;
            }
            poly = std::move(next);
            den = polyt::mul(den, {RatFuncQ(-1), a});
        }
        std::map<std::pair<int, int>, PolyT> entries;
        for (std::size_t d = 0; d < poly.size(); ++d) {
            for (const auto& [r, c, v] : poly[d].triples()) {
                PolyT& p = entries[{r, c}];
                p.resize(poly.size());
                p[d] = v;
            }
        }
        f = TensorOperatorQ(n, m);
        for (auto& [rc_idx, p] : entries) f.add(rc_idx.first, rc_idx.second, rat_limit(std::move(p), den, RatFuncQ(1)));
    }
    return f * rcheck_longest_inverse(m, n) * schur_element(t.shape().conjugate()).inverse();
}

std::vector<RatFuncQ> f_series(int n, int k) {
    check_n(n);
    if (k < 0) throw std::invalid_argument("f_series: negative order");
    const RatFuncQ q2n = RatFuncQ::q_pow(2 * n);
    // left factor (1-x)(1-xq^{2n}), right factor (1-xq^2)(1-xq^{2n-2})
    const PolyT a{RatFuncQ(1), -(RatFuncQ(1) + q2n), q2n};
    const PolyT b{RatFuncQ(1), -(RatFuncQ::q_pow(2) + RatFuncQ::q_pow(2 * n - 2)), q2n};
    std::vector<RatFuncQ> f{RatFuncQ(1)};
    for (int i = 1; i <= k; ++i) {
        // x^i: sum_j f_j (q^{2nj} a_{i-j} - b_{i-j}) = 0, solved for f_i
        RatFuncQ rhs;
        for (int j = std::max(0, i - 2); j < i; ++j) rhs += f[j] * (b[i - j] - q2n.pow(j) * a[i - j]);
        f.push_back(rhs / (q2n.pow(i) - RatFuncQ(1)));
    }
    return f;
}

std::vector<RatFuncQ> f_series_residual(int n, const std::vector<RatFuncQ>& f) {
    check_n(n);
    // expand both sides as products of truncated series, then subtract
    const int k = static_cast<int>(f.size()) - 1;
    const RatFuncQ q2n = RatFuncQ::q_pow(2 * n);
    PolyT shifted;
    for (int j = 0; j <= k; ++j) shifted.push_back(f[j] * q2n.pow(j));
    const PolyT left = polyt::mul(polyt::mul(shifted, {RatFuncQ(1), RatFuncQ(-1)}), {RatFuncQ(1), -q2n});
    const PolyT right = polyt::mul(polyt::mul(f, {RatFuncQ(1), -RatFuncQ::q_pow(2)}),
                                   {RatFuncQ(1), -RatFuncQ::q_pow(2 * n - 2)});
    std::vector<RatFuncQ> res;
    for (int i = 0; i <= k; ++i) {
        const RatFuncQ l = i < static_cast<int>(left.size()) ? left[i] : RatFuncQ();
        const RatFuncQ r = i < static_cast<int>(right.size()) ? right[i] : RatFuncQ();
        res.push_back(l - r);
    }
    return res;
}

ExtRatFunc crossing_scalar(int n) {
    check_n(n);
    const ExtRatFunc x = ExtRatFunc::t();
    const ExtRatFunc one(1);
    return (one - x * ext_q_pow(2)) * (one - x * ext_q_pow(2 * n - 2)) / ((one - x) * (one - x * ext_q_pow(2 * n)));
}

namespace {

template <class S>
CheckResult crossing_sides(const TensorOperator<S>& r_inv, const TensorOperator<S>& r_shift, const S& s, int n) {
    const TensorOperatorQ d = d_matrix(n);
    const auto d1 = TensorOperatorQ::placed(d, 1, 2).map_coefficients([](const RatFuncQ& v) { return S(v); });
    const auto d2 = TensorOperatorQ::placed(d, 2, 2).map_coefficients([](const RatFuncQ& v) { return S(v); });
    const auto lhs2 = r_inv.partial_transpose(2) * d2 * r_shift.partial_transpose(2) * s;
    if (auto c = compare(lhs2, d2, "crossing relation in factor 2"); !c) return c;
    const auto lhs1 = r_shift.partial_transpose(1) * d1 * r_inv.partial_transpose(1) * s;
    return compare(lhs1, d1, "crossing relation in factor 1");
}

}  // namespace

CheckResult verify_crossing(int n) {
    const SpectralOperator r = rbar(n);
    return crossing_sides(r.inverse(), scale_variable(r, RatFuncQ::q_pow(2 * n)), crossing_scalar(n), n);
}

CheckResult verify_crossing(int n, const RatFuncQ& x) {
    const SpectralOperator r = rbar(n);
    const TensorOperatorQ rx = evaluate(r, x);
    const TensorOperatorQ rs = evaluate(r, x * RatFuncQ::q_pow(2 * n));
    return crossing_sides(rx.inverse(), rs, crossing_scalar(n).evaluate(x), n);
}

namespace {

// D(t) * op with D the lcm of the entry denominators, so every entry is a
// polynomial in t and later products never need a gcd
SpectralOperator clear_denominators(const SpectralOperator& op) {
    PolyT lcm{RatFuncQ(1)};
    for (const auto& [r, c, v] : op.triples()) {
        const PolyT& d = v.denominator();
        if (d.size() <= 1) continue;
        PolyT quot, rem;
        polyt::divmod(d, polyt::gcd(lcm, d), quot, rem);
        lcm = polyt::mul(lcm, quot);
    }
    return op * ExtRatFunc(lcm, PolyT{RatFuncQ(1)});
}

}  // namespace

CheckResult verify_lemma_RE(const StandardTableau& t, int n) {
    if (t.is_skew()) throw std::invalid_argument("verify_lemma_RE: straight shapes only");
    const int m = t.size();
    if (t.shape().rows() > n) throw std::invalid_argument("verify_lemma_RE: more than n rows");
    // copy 0 sits in front, copy i at position i + 1
    const int total = m + 1;
    // E = E'/d with Laurent entries in E'; E F E = F E becomes E' F E' = d F E'
    const TensorOperatorQ e_fin = hecke_action(matrix_unit_diag(t), n);
    RatFuncQ d(1);
    for (const auto& [r, c, v] : e_fin.triples()) d *= RatFuncQ((d / RatFuncQ(v.denominator())).denominator());
    const SpectralOperator e = lift(kron(TensorOperatorQ::identity(n, 1), e_fin * d));
    const ExtRatFunc dd(d);
    // both identities are linear in the R-product, so scalar rescaling of
    // each factor changes nothing
    const SpectralOperator r = clear_denominators(rbar(n));
    const SpectralOperator r_inv = clear_denominators(rbar(n).inverse());

    // apply the sparse factors to E one at a time from the left; the running
    // product of R's alone fills in and is far more expensive
    SpectralOperator fe = e;
    for (int i = 1; i <= m; ++i) {
        const RatFuncQ c = RatFuncQ::q_pow(2 * n + 2 * t.content(i));
        fe = SpectralOperator::placed(scale_variable(r, c), 1, i + 1, total) * fe;
    }
    if (auto c = compare(e * fe, fe * dd, "first sandwich identity"); !c) return c;

    SpectralOperator be = e;
    for (int i = m; i >= 1; --i) {
        const RatFuncQ c = RatFuncQ::q_pow(2 * t.content(i));
        be = SpectralOperator::placed(scale_variable(r_inv, c), 1, i + 1, total) * be;
    }
    return compare(e * be, be * dd, "second sandwich identity");
}

CheckResult verify_exchange(const StandardTableau& t, int k, int n) {
    const int m = t.size();
    if (k < 1 || k >= m) throw std::out_of_range("verify_exchange: index out of range");
    const auto s = t.swapped(k);
    if (!s) throw std::invalid_argument("verify_exchange: s_k applied to the tableau is not standard");
    const int d = t.axial_distance(k);
    const TensorOperatorQ rk = TensorOperatorQ::placed(rcheck(n), k, k + 1, m);
    auto baxter = [&](const RatFuncQ& z) {
        return rk + TensorOperatorQ::scalar(n, m, hecke_gap() / (z.inverse() - RatFuncQ(1)));
    };
    const TensorOperatorQ lhs = baxter(RatFuncQ::q_pow(-2 * d)) * hecke_action(matrix_unit_diag(*s), n);
    const TensorOperatorQ rhs = hecke_action(matrix_unit_diag(t), n) * baxter(RatFuncQ::q_pow(2 * d));
    return compare(lhs, rhs, "exchange relation");
}

}  // namespace hf
