#include "hf/hecke.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hf {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int m = rank();
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int v : w_) {
        if (v < 1 || v > m || seen[v]) throw std::invalid_argument("not a permutation in one-line notation");
        seen[v] = true;
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) length_ += w_[i] > w_[j] ? 1 : 0;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int i, int m) { return transposition(i, i + 1, m); }

Permutation Permutation::transposition(int a, int b, int m) {
    if (a < 1 || b < 1 || a > m || b > m || a == b) throw std::out_of_range("transposition out of range");
    std::vector<int> w = identity(m).w_;
    std::swap(w[a - 1], w[b - 1]);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int m) {
    std::vector<int> w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) w[i] = m - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (std::size_t i = 0; i < w_.size(); ++i) w[w_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("permutations of different rank");
    std::vector<int> w(a.w_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = a.w_[b.w_[i] - 1];
    return Permutation(std::move(w));
}

std::vector<int> Permutation::reduced_word() const {
    // peel off left descents: i+1 standing before i in one-line notation
    std::vector<int> word;
    std::vector<int> w = w_;
    std::vector<int> pos(w.size() + 1);
    for (std::size_t k = 0; k < w.size(); ++k) pos[w[k]] = static_cast<int>(k);
    for (;;) {
        int i = 1;
        while (i < rank() && pos[i] < pos[i + 1]) ++i;
        if (i >= rank()) break;
        word.push_back(i);
        std::swap(w[pos[i]], w[pos[i + 1]]);
        std::swap(pos[i], pos[i + 1]);
    }
    return word;
}

std::string Permutation::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w_[i]);
    }
    return s + "]";
}

int SymmetricGroup::index_of(const Permutation& p) const {
    if (p.rank() != m) throw std::invalid_argument("permutation of wrong rank");
    // Lehmer code read as a factorial-base number gives the lexicographic rank
    const auto& w = p.one_line();
    int idx = 0;
    for (int i = 0; i < m; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < m; ++j) smaller += w[j] < w[i] ? 1 : 0;
        idx = idx * (m - i) + smaller;
    }
    return idx;
}

namespace {

std::unique_ptr<SymmetricGroup> build_group(int m) {
    auto g = std::make_unique<SymmetricGroup>();
    g->m = m;
    std::vector<int> w(static_cast<std::size_t>(m));
    std::iota(w.begin(), w.end(), 1);
    do {
        g->elements.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    const int n = g->size();
    g->length.resize(n);
    g->inverse.resize(n);
    g->words.resize(n);
    g->left.assign(std::max(m - 1, 0), std::vector<int>(n));
    g->right.assign(std::max(m - 1, 0), std::vector<int>(n));
    for (int s = 0; s < n; ++s) {
        const Permutation& p = g->elements[s];
        g->length[s] = p.length();
        g->inverse[s] = g->index_of(p.inverse());
        g->words[s] = p.reduced_word();
        for (int i = 1; i < m; ++i) {
            const Permutation si = Permutation::simple(i, m);
            g->left[i - 1][s] = g->index_of(si * p);
            g->right[i - 1][s] = g->index_of(p * si);
        }
    }
    return g;
}

}  // namespace

const SymmetricGroup& symmetric_group(int m) {
    constexpr int kMax = 8;
    if (m < 0 || m > kMax) throw std::out_of_range("symmetric_group: rank out of range");
    static std::array<std::once_flag, kMax + 1> flags;
    static std::array<std::unique_ptr<SymmetricGroup>, kMax + 1> groups;
    std::call_once(flags[m], [m] { groups[m] = build_group(m); });
    return *groups[m];
}

HeckeElement jucys_murphy(int k, int m) {
    if (k < 1 || k > m) throw std::out_of_range("jucys_murphy: index out of range");
    HeckeElement y = HeckeElement::unit(m);
    for (int i = 1; i < k; ++i) y += HeckeElement::basis(Permutation::transposition(i, k, m), hecke_gap());
    return y;
}

BasicHeckeElement<ExtRatFunc> baxterized(int k, int m, const ExtRatFunc& u) {
    using E = BasicHeckeElement<ExtRatFunc>;
    return E::generator(k, m) + E::scalar(m, ExtRatFunc(hecke_gap()) / (u.inverse() - ExtRatFunc(1)));
}

}  // namespace hf
