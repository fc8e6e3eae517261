#include "hf/seminormal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hf {

RatFuncQ seminormal_diagonal(int d) {
    if (d == 0) throw std::domain_error("seminormal_diagonal: zero axial distance");
    return RatFuncQ::q_pow(d) / qint_r(d);
}

namespace {

// 1 - 1/[d]^2
RatFuncQ off_diagonal_square(int d) {
    const RatFuncQ qd = qint_r(d);
    return RatFuncQ(1) - (qd * qd).inverse();
}

}  // namespace

RatFuncQ gram_weight(const StandardTableau& t) {
    RatFuncQ g(1);
    for (int a = 1; a <= t.size(); ++a) {
        for (int b = a + 1; b <= t.size(); ++b) {
            const Box& A = t.box(a);
            const Box& B = t.box(b);
            if (A.row < B.row && A.col > B.col) g *= off_diagonal_square(content(A) - content(B));
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// SeminormalRep

SeminormalRep::SeminormalRep(SkewShape theta) : shape_(std::move(theta)), basis_(standard_tableaux(shape_)) {
    const int f = dim();
    for (const auto& t : basis_) gram_.push_back(gram_weight(t));
    for (int k = 1; k < rank(); ++k) {
        MatrixQ m = zero_matrix(f, f);
        for (int j = 0; j < f; ++j) {
            const int d = basis_[j].axial_distance(k);
            m(j, j) = seminormal_diagonal(d);
            if (auto s = basis_[j].swapped(k)) m(index_of(*s), j) = d > 0 ? RatFuncQ(1) : off_diagonal_square(d);
        }
        gens_.push_back(std::move(m));
    }
}

int SeminormalRep::index_of(const StandardTableau& t) const {
    // basis_ is sorted by reading word
    auto it = std::lower_bound(basis_.begin(), basis_.end(), t);
    if (it == basis_.end() || !(*it == t)) throw std::invalid_argument("tableau not in this representation");
    return static_cast<int>(it - basis_.begin());
}

const MatrixQ& SeminormalRep::generator(int k) const {
    if (k < 1 || k >= rank()) throw std::out_of_range("rep_matrix: generator index out of range");
    return gens_[k - 1];
}

void SeminormalRep::build_images() const {
    std::call_once(images_once_, [this] {
        const auto& g = symmetric_group(rank());
        std::vector<int> order(g.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.length[a] < g.length[b]; });
        images_.assign(g.size(), MatrixQ());
        chars_.assign(g.size(), RatFuncQ());
        for (int s : order) {
            if (g.length[s] == 0) {
                images_[s] = identity_matrix(dim());
            } else {
                // T_s = T_i T_{s_i s} with i the first letter of a reduced word
                const int i = g.words[s].front();
                images_[s] = gens_[i - 1] * images_[g.left[i - 1][s]];
            }
            chars_[s] = trace(images_[s]);
        }
    });
}

const MatrixQ& SeminormalRep::basis_image(int sigma_index) const {
    build_images();
    return images_.at(static_cast<std::size_t>(sigma_index));
}

MatrixQ SeminormalRep::operator()(const HeckeElement& a) const {
    if (a.rank() != rank()) throw std::invalid_argument("rank mismatch between element and representation");
    build_images();
    MatrixQ r = zero_matrix(dim(), dim());
    for (const auto& [s, c] : a.indexed_terms()) r += images_[s] * c;
    return r;
}

const std::vector<RatFuncQ>& SeminormalRep::basis_characters() const {
    build_images();
    return chars_;
}

RatFuncQ SeminormalRep::character(const HeckeElement& a) const {
    if (a.rank() != rank()) throw std::invalid_argument("rank mismatch between element and representation");
    const auto& ch = basis_characters();
    RatFuncQ r;
    for (const auto& [s, c] : a.indexed_terms()) r += c * ch[s];
    return r;
}

std::shared_ptr<const SeminormalRep> seminormal_rep(const SkewShape& theta) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const SeminormalRep>> cache;
    const std::string key = theta.str();
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto rep = std::make_shared<const SeminormalRep>(theta);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(rep)).first->second;
}

std::shared_ptr<const SeminormalRep> seminormal_rep(const Partition& lambda) {
    return seminormal_rep(SkewShape(lambda));
}

MatrixQ rep_matrix(const Partition& lambda, int k) { return seminormal_rep(lambda)->generator(k); }
MatrixQ rep_matrix(const SkewShape& theta, int k) { return seminormal_rep(theta)->generator(k); }

RatFuncQ character(const Partition& lambda, const HeckeElement& a) { return seminormal_rep(lambda)->character(a); }

RatFuncQ skew_character(const SkewShape& theta, const HeckeElement& a) {
    return seminormal_rep(theta)->character(a);
}

// ---------------------------------------------------------------------------
// idempotents

namespace {

std::string tableau_key(const StandardTableau& t) { return t.skew_shape().str() + ":" + t.str(); }

void require_straight(const StandardTableau& t) {
    if (t.is_skew()) throw std::invalid_argument("matrix units need a straight shape");
}

}  // namespace

const HeckeElement& matrix_unit_diag(const StandardTableau& t) {
    require_straight(t);
    static std::mutex mu;
    static std::map<std::string, HeckeElement> cache;
    const std::string key = tableau_key(t);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int m = t.size();
    HeckeElement e = HeckeElement::unit(m);
    if (m > 1) {
        const StandardTableau g = t.restricted();
        const int c = t.content(m);
        const RatFuncQ target = RatFuncQ::q_pow(2 * c);
        e = embed(matrix_unit_diag(g), m);
        const HeckeElement y = jucys_murphy(m, m);
        for (const Box& b : g.shape().addable_boxes()) {
            const int a = content(b);
            if (a == c) continue;
            const RatFuncQ qa = RatFuncQ::q_pow(2 * a);
            e = e * (y - qa) * (target - qa).inverse();
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(e)).first->second;
}

HeckeElement matrix_unit_diag_limit(const StandardTableau& t) {
    require_straight(t);
    const int m = t.size();
    if (m <= 1) return HeckeElement::unit(m);
    const StandardTableau g = t.restricted();
    const HeckeElement eg = embed(matrix_unit_diag(g), m);
    const HeckeElement y = jucys_murphy(m, m);
    const RatFuncQ target = RatFuncQ::q_pow(2 * t.content(m));

    // P(v) = prod over addable boxes of (v - q^{2a}); P(y_m) kills e_G
    PolyT p{RatFuncQ(1)};
    for (const Box& b : g.shape().addable_boxes()) p = polyt::mul(p, {-RatFuncQ::q_pow(2 * content(b)), RatFuncQ(1)});
    HeckeElement check(m);
    HeckeElement ypow = eg;
    for (const auto& coeff : p) {
        check += ypow * coeff;
        ypow = ypow * y;
    }
    if (!check.is_zero()) throw std::logic_error("Jucys-Murphy spectrum does not match the addable boxes");

    // (u - y)^{-1} e_G = sum_k y^k q_k(u) / P(u) e_G,   q_k(u) = sum_{j>k} p_j u^{j-1-k}
    const int deg = static_cast<int>(p.size()) - 1;
    const ExtRatFunc pu(p, {RatFuncQ(1)});
    const ExtRatFunc lin = ExtRatFunc::t() - ExtRatFunc(target);
    HeckeElement e(m);
    ypow = eg;
    for (int k = 0; k < deg; ++k) {
        PolyT qk(static_cast<std::size_t>(deg - k));
        for (int j = k + 1; j <= deg; ++j) qk[j - 1 - k] = p[j];
        const RatFuncQ coeff = rat_limit(ExtRatFunc(qk, {RatFuncQ(1)}) * lin / pu, target);
        e += ypow * coeff;
        ypow = ypow * y;
    }
    return e;
}

SurdHeckeElement matrix_unit(const StandardTableau& l, const StandardTableau& g) {
    require_straight(l);
    require_straight(g);
    if (!(l.shape() == g.shape())) throw std::invalid_argument("matrix_unit: shapes differ");
    const auto rep = seminormal_rep(l.shape());
    const int i = rep->index_of(l);
    const int j = rep->index_of(g);
    const auto& grp = symmetric_group(rep->rank());
    const RatFuncQ inv_c = schur_element(l.shape()).inverse();
    HeckeElement e(rep->rank());
    for (int s = 0; s < grp.size(); ++s) {
        const RatFuncQ& v = rep->basis_image(grp.inverse[s])(j, i);
        if (!v.is_zero()) e += HeckeElement::basis(grp.elements[s], v * inv_c);
    }
    return {rep->gram()[j] / rep->gram()[i], std::move(e)};
}

MatrixQ schur_average(const Partition& lambda, const MatrixQ& u) {
    const auto rep = seminormal_rep(lambda);
    if (u.rows() != rep->dim() || u.cols() != rep->dim()) throw std::invalid_argument("schur_average: dimension mismatch");
    const auto& g = symmetric_group(rep->rank());
    MatrixQ r = zero_matrix(rep->dim(), rep->dim());
    for (int s = 0; s < g.size(); ++s) r += rep->basis_image(s) * u * rep->basis_image(g.inverse[s]);
    return r;
}

bool lemma_et_check(const StandardTableau& t, int k) {
    const int m = t.size();
    if (k < 1 || k >= m) throw std::out_of_range("lemma_et_check: index out of range");
    const int d = t.axial_distance(k);
    const HeckeElement tk = HeckeElement::generator(k, m);
    const HeckeElement lhs = matrix_unit_diag(t) * (tk - seminormal_diagonal(d));
    const auto s = t.swapped(k);
    if (!s) return lhs.is_zero();
    const HeckeElement rhs = (tk + RatFuncQ::q_pow(-d) / qint_r(d)) * matrix_unit_diag(*s);
    if (!(lhs == rhs)) return false;
    // both equal sqrt(1 - 1/[d]^2) e_{L, s_k L}; the surds combine to a rational factor
    const SurdHeckeElement off = matrix_unit(t, *s);
    const RatFuncQ factor = d > 0 ? off_diagonal_square(d) : RatFuncQ(1);
    if (!(factor * factor == off_diagonal_square(d) * off.radicand)) return false;
    return lhs == off.element * factor;
}

}  // namespace hf
