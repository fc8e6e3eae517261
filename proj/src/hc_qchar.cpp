#include "hf/hc_qchar.hpp"

#include "hf/parallel.hpp"
#include "hf/seminormal.hpp"

#include <algorithm>
#include <stdexcept>

namespace hf {

// ---------------------------------------------------------------------------
// monomials

std::string PiGenerator::name() const {
    return std::string(plus ? "Lp(" : "Lm(") + std::to_string(i) + "," + std::to_string(r) + ")";
}

PiMonomial::PiMonomial(const PiGenerator& g, int e) {
    if (g.r < 0 || g.i < 1) throw std::invalid_argument("PiMonomial: bad generator");
    if (!g.plus && g.r == 0) throw std::invalid_argument("PiMonomial: l-_i[0] is eliminated, use Lp(i,0)^-1");
    if (e < 0 && g.r != 0) throw std::invalid_argument("PiMonomial: only l+_i[0] is invertible");
    if (e != 0) f_.emplace_back(g, e);
    weight_ = g.r * e;
}

PiMonomial PiMonomial::inverse() const {
    if (weight_ != 0) throw std::domain_error("PiMonomial: not invertible");
    PiMonomial r(*this);
    for (auto& [g, e] : r.f_) e = -e;
    return r;
}

PiMonomial operator*(const PiMonomial& a, const PiMonomial& b) {
    PiMonomial r;
    r.weight_ = a.weight_ + b.weight_;
    auto x = a.f_.begin();
    auto y = b.f_.begin();
    while (x != a.f_.end() || y != b.f_.end()) {
        if (y == b.f_.end() || (x != a.f_.end() && x->first < y->first)) {
            r.f_.push_back(*x++);
        } else if (x == a.f_.end() || y->first < x->first) {
            r.f_.push_back(*y++);
        } else {
            const int e = x->second + y->second;
            if (e != 0) r.f_.emplace_back(x->first, e);
            ++x;
            ++y;
        }
    }
    return r;
}

std::string PiMonomial::str() const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : f_) {
        if (!out.empty()) out += "*";
        out += g.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// series

namespace {

void accumulate(PiPolynomial& p, const PiMonomial& m, const RatFuncQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = p.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

}  // namespace

PiSeries PiSeries::constant(int n, int k, const RatFuncQ& c) {
    PiSeries s(n, k);
    s.add_term(0, PiMonomial(), c);
    return s;
}

PiSeries PiSeries::l_plus(int i, int n, int k) {
    if (i < 1 || i > n) throw std::out_of_range("l_plus: index out of range");
    PiSeries s(n, k);
    for (int r = 0; r <= k; ++r) s.add_term(r, PiMonomial({true, i, r}, 1), RatFuncQ(1));
    return s;
}

PiSeries PiSeries::l_minus(int i, int n, int k) {
    if (i < 1 || i > n) throw std::out_of_range("l_minus: index out of range");
    PiSeries s(n, k);
    s.add_term(0, PiMonomial({true, i, 0}, -1), RatFuncQ(1));
    for (int r = 1; r <= k; ++r) s.add_term(-r, PiMonomial({false, i, r}, 1), RatFuncQ(1));
    return s;
}

PiPolynomial PiSeries::coefficient(int power) const {
    auto it = c_.find(power);
    return it == c_.end() ? PiPolynomial() : it->second;
}

std::size_t PiSeries::term_count() const {
    std::size_t k = 0;
    for (const auto& [p, poly] : c_) k += poly.size();
    return k;
}

void PiSeries::add_term(int power, const PiMonomial& mono, const RatFuncQ& c) {
    if (c.is_zero() || mono.weight() > k_) return;
    PiPolynomial& p = c_[power];
    accumulate(p, mono, c);
    if (p.empty()) c_.erase(power);
}

void PiSeries::check_compatible(const PiSeries& b) const {
    if (n_ != b.n_ || k_ != b.k_) throw std::invalid_argument("PiSeries: rank or truncation mismatch");
}

PiSeries operator+(const PiSeries& a, const PiSeries& b) {
    a.check_compatible(b);
    PiSeries r(a);
    for (const auto& [p, poly] : b.c_) {
        for (const auto& [m, c] : poly) r.add_term(p, m, c);
    }
    return r;
}

PiSeries operator-(const PiSeries& a, const PiSeries& b) { return a + b * RatFuncQ(-1); }

PiSeries operator*(const PiSeries& a, const RatFuncQ& c) {
    PiSeries r(a.n_, a.k_);
    if (c.is_zero()) return r;
    r.c_ = a.c_;
    for (auto& [p, poly] : r.c_) {
        for (auto& [m, v] : poly) v *= c;
    }
    return r;
}

PiSeries operator*(const PiSeries& a, const PiSeries& b) {
    a.check_compatible(b);
    struct Term {
        int power;
        const PiMonomial* mono;
        const RatFuncQ* coeff;
    };
    auto flatten = [](const PiSeries& s) {
        std::vector<Term> t;
        for (const auto& [p, poly] : s.c_) {
            for (const auto& [m, c] : poly) t.push_back({p, &m, &c});
        }
        std::stable_sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.mono->weight() < y.mono->weight(); });
        return t;
    };
    const std::vector<Term> ta = flatten(a);
    const std::vector<Term> tb = flatten(b);
    PiSeries r(a.n_, a.k_);
    for (const Term& x : ta) {
        const int room = a.k_ - x.mono->weight();
        for (const Term& y : tb) {
            if (y.mono->weight() > room) break;
            r.add_term(x.power + y.power, *x.mono * *y.mono, *x.coeff * *y.coeff);
        }
    }
    return r;
}

PiSeries PiSeries::rescaled(const RatFuncQ& c) const {
    PiSeries r(n_, k_);
    for (const auto& [p, poly] : c_) {
        const RatFuncQ f = c.pow(p);
        for (const auto& [m, v] : poly) r.add_term(p, m, v * f);
    }
    return r;
}

PiSeries PiSeries::inverse() const {
    // weight-zero terms can only sit at z^0
    PiSeries lead(n_, k_);
    PiSeries rest(n_, k_);
    for (const auto& [p, poly] : c_) {
        for (const auto& [m, v] : poly) (m.weight() == 0 ? lead : rest).add_term(p, m, v);
    }
    if (lead.term_count() != 1) throw std::domain_error("PiSeries::inverse: leading part is not a unit");
    const auto& [m0, c0] = *lead.c_.at(0).begin();
    PiSeries lead_inv(n_, k_);
    lead_inv.add_term(0, m0.inverse(), c0.inverse());
    // (lead + rest)^{-1} = lead^{-1} sum_j (-rest lead^{-1})^j; rest has weight >= 1
    const PiSeries u = rest * lead_inv * RatFuncQ(-1);
    PiSeries sum = constant(n_, k_, RatFuncQ(1));
    PiSeries power = sum;
    for (int j = 1; j <= k_; ++j) {
        power = power * u;
        if (power.is_zero()) break;
        sum += power;
    }
    return sum * lead_inv;
}

std::map<int, RatFuncQ> PiSeries::specialize(const std::vector<std::vector<RatFuncQ>>& kappa_plus,
                                             const std::vector<RatFuncQ>& kappa_minus) const {
    if (static_cast<int>(kappa_plus.size()) != n_) throw std::invalid_argument("specialize: need n plus series");
    auto at = [](const std::vector<RatFuncQ>& v, int r) { return r < static_cast<int>(v.size()) ? v[r] : RatFuncQ(); };
    std::map<int, RatFuncQ> out;
    for (const auto& [p, poly] : c_) {
        RatFuncQ sum;
        for (const auto& [m, c] : poly) {
            RatFuncQ v = c;
            for (const auto& [g, e] : m.factors()) {
                const RatFuncQ base = g.plus ? at(kappa_plus[g.i - 1], g.r) : at(kappa_minus, g.r);
                if (e < 0 && base.is_zero()) throw std::domain_error("specialize: zero constant term");
                v *= base.pow(e);
            }
            sum += v;
        }
        if (!sum.is_zero()) out.emplace(p, sum);
    }
    return out;
}

PiSeries x_series(int i, int shift, int n, int k) {
    if (i < 1 || i > n) throw std::out_of_range("x_series: index out of range");
    if (k < 0) throw std::invalid_argument("x_series: negative truncation");
    const RatFuncQ c = RatFuncQ::q_pow(-2 * shift);
    PiSeries num = PiSeries::l_plus(i, n, k).rescaled(c);
    PiSeries den = PiSeries::constant(n, k, RatFuncQ(1));
    for (int j = 1; j < i; ++j) num = num * PiSeries::l_minus(j, n, k).rescaled(c * RatFuncQ::q_pow(2 * j - n));
    for (int j = 1; j <= i; ++j) den = den * PiSeries::l_minus(j, n, k).rescaled(c * RatFuncQ::q_pow(2 * j - 2 - n));
    return num * den.inverse() * RatFuncQ::q_pow(n - 2 * i + 1);
}

PiSeries hc_image(const Partition& lambda, int n, int k) {
    if (n < 1) throw std::invalid_argument("hc_image: n must be positive");
    PiSeries total(n, k);
    if (lambda.rows() > n) return total;
    const auto tableaux = semistandard_tableaux(lambda, n);
    const auto boxes = lambda.boxes();
    std::map<std::pair<int, int>, PiSeries> xs;
    for (const auto& t : tableaux) {
        for (const Box& b : boxes) {
            const auto key = std::make_pair(t.at(b), content(b));
            if (!xs.count(key)) xs.emplace(key, x_series(key.first, key.second, n, k));
        }
    }
    const auto terms = parallel_map(tableaux.size(), [&](std::size_t idx) {
        PiSeries prod = PiSeries::constant(n, k, RatFuncQ(1));
        for (const Box& b : boxes) prod = prod * xs.at({tableaux[idx].at(b), content(b)});
        return prod;
    });
    for (const auto& t : terms) total += t;
    return total;
}

// ---------------------------------------------------------------------------
// formal q-characters

void FormalQCharacter::add(const Monomial& m, long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long FormalQCharacter::total() const {
    long s = 0;
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

std::string FormalQCharacter::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "*";
        std::string mono;
        for (const auto& [i, cc, mult] : m) {
            if (!mono.empty()) mono += "*";
            mono += "x_{" + std::to_string(i) + "," + std::to_string(cc) + "}";
            if (mult != 1) mono += "^" + std::to_string(mult);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

FormalQCharacter formal_qcharacter(const Partition& lambda, int n) {
    FormalQCharacter chi;
    for (const auto& t : semistandard_tableaux(lambda, n)) {
        std::map<std::pair<int, int>, int> count;
        for (const Box& b : lambda.boxes()) ++count[{t.at(b), content(b)}];
        FormalQCharacter::Monomial m;
        for (const auto& [key, mult] : count) m.emplace_back(key.first, key.second, mult);
        chi.add(m, 1);
    }
    return chi;
}

RatFuncQ evaluate(const FormalQCharacter& chi, const std::vector<RatFuncQ>& value_by_i) {
    RatFuncQ sum;
    for (const auto& [m, c] : chi.terms()) {
        RatFuncQ v(c);
        for (const auto& [i, cc, mult] : m) v *= value_by_i.at(static_cast<std::size_t>(i - 1)).pow(mult);
        sum += v;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Wakimoto eigenvalues

namespace {

// (z-power, weight) -> coefficient, weights capped at k
class WeightedSeries {
public:
    explicit WeightedSeries(int k) : k_(k) {}
    void add(int power, int weight, const RatFuncQ& c) {
        if (c.is_zero() || weight > k_) return;
        auto [it, fresh] = c_.emplace(std::make_pair(power, weight), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    friend WeightedSeries operator*(const WeightedSeries& a, const WeightedSeries& b) {
        WeightedSeries r(a.k_);
        for (const auto& [x, u] : a.c_) {
            for (const auto& [y, v] : b.c_) r.add(x.first + y.first, x.second + y.second, u * v);
        }
        return r;
    }
    WeightedSeries rescaled(const RatFuncQ& c) const {
        WeightedSeries r(k_);
        for (const auto& [x, u] : c_) r.add(x.first, x.second, u * c.pow(x.first));
        return r;
    }
    WeightedSeries inverse() const {
        auto it = c_.find({0, 0});
        if (it == c_.end()) throw std::invalid_argument("wakimoto: kappa- needs an invertible constant term");
        const RatFuncQ c0 = it->second.inverse();
        WeightedSeries u(k_);
        for (const auto& [x, v] : c_) {
            if (x.second > 0) u.add(x.first, x.second, -(v * c0));
        }
        WeightedSeries sum(k_);
        sum.add(0, 0, RatFuncQ(1));
        WeightedSeries power = sum;
        for (int j = 1; j <= k_; ++j) {
            power = power * u;
            for (const auto& [x, v] : power.c_) sum.add(x.first, x.second, v);
        }
        WeightedSeries r(k_);
        for (const auto& [x, v] : sum.c_) r.add(x.first, x.second, v * c0);
        return r;
    }
    void add_all(const WeightedSeries& b) {
        for (const auto& [x, v] : b.c_) add(x.first, x.second, v);
    }
    std::map<int, RatFuncQ> collapsed() const {
        std::map<int, RatFuncQ> out;
        for (const auto& [x, v] : c_) out[x.first] += v;
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

private:
    int k_;
    std::map<std::pair<int, int>, RatFuncQ> c_;
};

}  // namespace

LaurentSeries wakimoto_eigenvalue(const Partition& lambda, const std::vector<std::vector<RatFuncQ>>& kappa_plus,
                                  const std::vector<RatFuncQ>& kappa_minus, int k) {
    const int n = static_cast<int>(kappa_plus.size());
    if (n < 1) throw std::invalid_argument("wakimoto: need at least one plus series");
    if (k < 0) throw std::invalid_argument("wakimoto: negative truncation");
    if (kappa_minus.empty() || kappa_minus[0].is_zero())
        throw std::invalid_argument("wakimoto: kappa- needs an invertible constant term");
    // kappa-(z q^{-n})^{-1}
    WeightedSeries minus(k);
    for (int r = 0; r < static_cast<int>(kappa_minus.size()); ++r) minus.add(-r, r, kappa_minus[r]);
    const WeightedSeries minus_inv = minus.rescaled(RatFuncQ::q_pow(-n)).inverse();
    std::vector<WeightedSeries> kappa;
    for (int i = 1; i <= n; ++i) {
        WeightedSeries plus(k);
        for (int r = 0; r < static_cast<int>(kappa_plus[i - 1].size()); ++r) plus.add(r, r, kappa_plus[i - 1][r]);
        WeightedSeries ki = plus * minus_inv;
        WeightedSeries pre(k);
        pre.add(0, 0, RatFuncQ::q_pow(n - 2 * i + 1));
        kappa.push_back(ki * pre);
    }
    WeightedSeries total(k);
    for (const auto& t : semistandard_tableaux(lambda, n)) {
        WeightedSeries prod(k);
        prod.add(0, 0, RatFuncQ(1));
        for (const Box& b : lambda.boxes()) prod = prod * kappa[t.at(b) - 1].rescaled(RatFuncQ::q_pow(-2 * content(b)));
        total.add_all(prod);
    }
    return {k, total.collapsed()};
}

// ---------------------------------------------------------------------------
// the finite identities

namespace {

void check_tuple(const std::vector<int>& i_tuple) {
    for (std::size_t k = 0; k < i_tuple.size(); ++k) {
        if (i_tuple[k] < 1) throw std::invalid_argument("tuple entries must be positive");
        if (k > 0 && i_tuple[k] < i_tuple[k - 1]) throw std::invalid_argument("tuple must be weakly increasing");
    }
}

}  // namespace

std::vector<int> tuple_composition(const std::vector<int>& i_tuple, int n) {
    check_tuple(i_tuple);
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    for (int v : i_tuple) {
        if (v > n) throw std::invalid_argument("tuple entry exceeds n");
        ++alpha[v - 1];
    }
    return alpha;
}

CosetDecomposition coset_decomposition(const std::vector<int>& i_tuple) {
    check_tuple(i_tuple);
    const int m = static_cast<int>(i_tuple.size());
    CosetDecomposition out;
    if (m == 0) return out;
    for (const auto& w : symmetric_group(m).elements) {
        bool rep = true;
        bool young = true;
        for (int k = 1; k <= m; ++k) {
            if (k < m && i_tuple[k - 1] == i_tuple[k] && w(k) > w(k + 1)) rep = false;
            if (i_tuple[w(k) - 1] != i_tuple[k - 1]) young = false;
        }
        if (rep) out.representatives.push_back(w);
        if (young) out.young_subgroup.push_back(w);
    }
    return out;
}

HeckeElement young_symmetrizer(const std::vector<int>& i_tuple) {
    const int m = static_cast<int>(i_tuple.size());
    HeckeElement s(m);
    for (const auto& p : coset_decomposition(i_tuple).young_subgroup) s += HeckeElement::basis(p, RatFuncQ::q_pow(p.length()));
    return s;
}

RatFuncQ central_idempotent_norm(const std::vector<int>& i_tuple) {
    const HeckeElement s = young_symmetrizer(i_tuple);
    const HeckeElement s2 = s * s;
    // s has identity coefficient 1
    const RatFuncQ c = s2.tau();
    if (!(s2 == s * c)) throw std::logic_error("s_(i)^2 is not proportional to s_(i)");
    return c;
}

RatFuncQ young_norm_formula(const std::vector<int>& composition) {
    RatFuncQ r(1);
    for (int a : composition) r *= RatFuncQ(qfact(a)) * RatFuncQ::q_pow(a * (a - 1) / 2);
    return r;
}

std::vector<int> entry_tuple(const Tableau& t) {
    std::vector<int> i = t.reading_word();
    std::sort(i.begin(), i.end());
    return i;
}

std::vector<StandardTableau> tableaux_over(const Tableau& t) {
    const std::vector<int> i = entry_tuple(t);
    std::vector<StandardTableau> out;
    for (const auto& s : standard_tableaux(t.shape())) {
        bool match = true;
        for (int k = 1; k <= s.size() && match; ++k) match = t.at(s.box(k)) == i[k - 1];
        if (match) out.push_back(s);
    }
    return out;
}

RatFuncQ verify_idenchi(const Partition& lambda, const Tableau& t, int n) {
    if (!(t.shape() == lambda)) throw std::invalid_argument("verify_idenchi: tableau shape differs");
    if (t.max_entry() > n) throw std::invalid_argument("verify_idenchi: entries exceed n");
    const std::vector<int> i = entry_tuple(t);
    const int m = lambda.size();
    const CosetDecomposition cd = coset_decomposition(i);
    // Y = sum_ω T_{ω^{-1}} T_ω s_(i)
    HeckeElement y(m);
    for (const auto& w : cd.representatives) y += t_sigma(w.inverse()) * t_sigma(w);
    y = y * young_symmetrizer(i);
    RatFuncQ sum;
    for (const auto& s : tableaux_over(t)) sum += character(lambda, matrix_unit_diag(s) * y);
    return sum;
}

RatFuncQ idenchi_expected(const Partition& lambda, const Tableau& t) {
    if (!t.is_semistandard()) return {};
    return RatFuncQ(static_cast<long>(hook_length_count(lambda))) * schur_element(lambda);
}

SkewShape value_shape(const Tableau& t, int r) {
    std::vector<int> outer;
    std::vector<int> inner;
    for (const auto& row : t.rows()) {
        outer.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [r](int v) { return v <= r; })));
        inner.push_back(static_cast<int>(std::count_if(row.begin(), row.end(), [r](int v) { return v < r; })));
    }
    return SkewShape(Partition(outer), Partition(inner));
}

RatFuncQ skew_trivial_pairing(const SkewShape& theta) {
    if (theta.size() == 0) return RatFuncQ(1);
    const auto rep = seminormal_rep(theta);
    const auto& g = symmetric_group(rep->rank());
    const auto& chars = rep->basis_characters();
    RatFuncQ sum;
    for (int s = 0; s < g.size(); ++s) sum += RatFuncQ::q_pow(g.length[s]) * chars[s];
    return sum;
}

CheckResult verify_coset_average(const Partition& lambda, const Tableau& t) {
    if (!(t.shape() == lambda)) throw std::invalid_argument("verify_coset_average: tableau shape differs");
    const std::vector<int> i = entry_tuple(t);
    const int m = lambda.size();
    const auto rep = seminormal_rep(lambda);
    const auto& g = symmetric_group(m);
    HeckeElement et(m);
    for (const auto& s : tableaux_over(t)) et += matrix_unit_diag(s);
    const HeckeElement se = young_symmetrizer(i) * et;
    const MatrixQ mid = (*rep)(se);
    MatrixQ lhs = zero_matrix(rep->dim(), rep->dim());
    for (const auto& w : coset_decomposition(i).representatives) {
        const int idx = g.index_of(w);
        lhs += rep->basis_image(idx) * mid * rep->basis_image(g.index_of(w.inverse()));
    }
    const RatFuncQ scalar =
        schur_element(lambda) * rep->character(se) / young_norm_formula(tuple_composition(i, i.empty() ? 1 : i.back()));
    if (lhs == identity_matrix(rep->dim()) * scalar) return CheckResult::pass();
    return CheckResult::fail("coset average is not " + scalar.str() + " times the identity for " + t.str());
}

}  // namespace hf
