#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hf/seminormal.hpp"
#include "support.hpp"

using namespace hf;

namespace {

const RatFuncQ q = RatFuncQ::q();
const RatFuncQ qi = RatFuncQ::q().inverse();

HeckeElement T(int i, int m) { return HeckeElement::generator(i, m); }

MatrixQ scalar_matrix(int n, const RatFuncQ& c) { return identity_matrix(n) * c; }

std::vector<StandardTableau> all_tableaux(int m) {
    std::vector<StandardTableau> out;
    for (const auto& lam : partitions_of(m)) {
        for (const auto& t : standard_tableaux(lam)) out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("generator matrices") {
    CHECK(rep_matrix(Partition({2}), 1) == scalar_matrix(1, q));
    CHECK(rep_matrix(Partition({1, 1}), 1) == scalar_matrix(1, -qi));
    const MatrixQ m = rep_matrix(Partition({2, 1}), 1);
    CHECK(m.rows() == 2);
    // spectrum {q, -q^{-1}} with both eigenvalues present
    CHECK((m - scalar_matrix(2, q)) * (m + scalar_matrix(2, qi)) == zero_matrix(2, 2));
    CHECK_FALSE(m == scalar_matrix(2, q));
    CHECK_FALSE(m == scalar_matrix(2, -qi));
    CHECK_THROWS_AS(rep_matrix(Partition({2, 1}), 3), std::out_of_range);
}

TEST_CASE("diagonal entries follow the axial distance") {
    const auto rep = seminormal_rep(Partition({3, 2}));
    for (int k = 1; k < 5; ++k) {
        for (int j = 0; j < rep->dim(); ++j) {
            CHECK(rep->generator(k)(j, j) == seminormal_diagonal(rep->basis()[j].axial_distance(k)));
        }
    }
}

TEST_CASE("braid and quadratic relations for every shape up to m = 5") {
    for (int m = 2; m <= 5; ++m) {
        for (const auto& lam : partitions_of(m)) {
            const auto rep = seminormal_rep(lam);
            const int f = rep->dim();
            for (int i = 1; i < m; ++i) {
                const MatrixQ& a = rep->generator(i);
                CHECK((a - scalar_matrix(f, q)) * (a + scalar_matrix(f, qi)) == zero_matrix(f, f));
                for (int j = i + 1; j < m; ++j) {
                    const MatrixQ& b = rep->generator(j);
                    if (j == i + 1) {
                        CHECK(a * b * a == b * a * b);
                    } else {
                        CHECK(a * b == b * a);
                    }
                }
            }
        }
    }
}

TEST_CASE("Gram weights make every generator self-adjoint") {
    // <T w, w'> = <w, T w'> because T_k* = T_k; independent of the closed form
    for (int m = 2; m <= 5; ++m) {
        for (const auto& lam : partitions_of(m)) {
            const auto rep = seminormal_rep(lam);
            MatrixQ g = zero_matrix(rep->dim(), rep->dim());
            for (int j = 0; j < rep->dim(); ++j) g(j, j) = rep->gram()[j];
            for (int k = 1; k < m; ++k) {
                const MatrixQ& a = rep->generator(k);
                CHECK(g * a == a.transpose() * g);
            }
        }
    }
}

TEST_CASE("Jucys-Murphy eigenvalues are q^{2c}") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& lam : partitions_of(m)) {
            const auto rep = seminormal_rep(lam);
            for (int k = 1; k <= m; ++k) {
                const MatrixQ y = (*rep)(jucys_murphy(k, m));
                MatrixQ expect = zero_matrix(rep->dim(), rep->dim());
                for (int j = 0; j < rep->dim(); ++j) expect(j, j) = RatFuncQ::q_pow(2 * rep->basis()[j].content(k));
                CHECK(y == expect);
            }
        }
    }
}

TEST_CASE("representation is a homomorphism on random elements") {
    std::mt19937_64 rng(5);
    for (const auto& lam : partitions_of(4)) {
        const auto rep = seminormal_rep(lam);
        for (int it = 0; it < 3; ++it) {
            const HeckeElement a = testing::random_hecke(rng, 4);
            const HeckeElement b = testing::random_hecke(rng, 4);
            CHECK((*rep)(a * b) == (*rep)(a) * (*rep)(b));
        }
    }
}

TEST_CASE("characters") {
    CHECK(character(Partition({2, 1}), HeckeElement::unit(3)) == RatFuncQ(2));
    CHECK(character(Partition({2}), T(1, 2)) == q);
    CHECK_THROWS_AS(character(Partition({2}), T(1, 3)), std::invalid_argument);
}

TEST_CASE("symmetrizing trace and orthogonality up to m = 4") {
    for (int m = 1; m <= 4; ++m) {
        const auto& g = symmetric_group(m);
        const auto parts = partitions_of(m);
        for (int s = 0; s < g.size(); ++s) {
            RatFuncQ sum;
            for (const auto& lam : parts) sum += seminormal_rep(lam)->basis_characters()[s] / schur_element(lam);
            CHECK(sum == RatFuncQ(s == 0 ? 1 : 0));
        }
        for (const auto& lam : parts) {
            for (const auto& mu : parts) {
                const auto& a = seminormal_rep(lam)->basis_characters();
                const auto& b = seminormal_rep(mu)->basis_characters();
                RatFuncQ sum;
                for (int s = 0; s < g.size(); ++s) sum += a[s] * b[g.inverse[s]];
                const RatFuncQ expect = lam == mu ? schur_element(lam) * static_cast<long>(standard_tableaux(lam).size())
                                                  : RatFuncQ();
                CHECK(sum == expect);
            }
        }
    }
}

TEST_CASE("skew characters") {
    CHECK(skew_character(SkewShape(Partition({1})), HeckeElement::unit(1)) == RatFuncQ(1));
    CHECK(skew_character(SkewShape(Partition({2})), T(1, 2)) == q);
    CHECK(skew_character(SkewShape(Partition({1, 1})), T(1, 2)) == -qi);
    // removing one box from the inner corner: chi_{lam/(1)} = sum over lam minus a removable box
    std::mt19937_64 rng(17);
    for (int m = 2; m <= 5; ++m) {
        for (const auto& lam : partitions_of(m)) {
            const SkewShape theta(lam, Partition({1}));
            const HeckeElement a = testing::random_hecke(rng, m - 1, 3);
            RatFuncQ expect;
            for (const Box& b : lam.removable_boxes()) expect += character(lam.without_box(b), a);
            CHECK(skew_character(theta, a) == expect);
        }
    }
    // braid relations also hold for a disconnected skew shape
    const auto rep = seminormal_rep(SkewShape(Partition({3, 1}), Partition({1})));
    CHECK(rep->generator(1) * rep->generator(2) * rep->generator(1) ==
          rep->generator(2) * rep->generator(1) * rep->generator(2));
}

TEST_CASE("primitive idempotents") {
    CHECK(matrix_unit_diag(StandardTableau(std::vector<std::vector<int>>{{1}})) == HeckeElement::unit(1));
    const RatFuncQ s = (q + qi).inverse();
    CHECK(matrix_unit_diag(StandardTableau({{1, 2}})) == (T(1, 2) + qi) * s);
    CHECK(matrix_unit_diag(StandardTableau({{1}, {2}})) == (q - T(1, 2)) * s);
    for (int m = 1; m <= 4; ++m) {
        const auto all = all_tableaux(m);
        HeckeElement sum(m);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const HeckeElement& e = matrix_unit_diag(all[i]);
            CHECK(e * e == e);
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK((e * matrix_unit_diag(all[j])).is_zero());
            sum += e;
        }
        CHECK(sum == HeckeElement::unit(m));
    }
}

TEST_CASE("limit form and matrix-unit formula agree with the product form") {
    for (int m = 1; m <= 4; ++m) {
        for (const auto& t : all_tableaux(m)) {
            CHECK(matrix_unit_diag_limit(t) == matrix_unit_diag(t));
            const SurdHeckeElement d = matrix_unit(t, t);
            CHECK(d.radicand == RatFuncQ(1));
            CHECK(d.element == matrix_unit_diag(t));
        }
    }
}

TEST_CASE("matrix unit calculus") {
    for (int m = 2; m <= 4; ++m) {
        for (const auto& lam : partitions_of(m)) {
            const auto tabs = standard_tableaux(lam);
            const std::size_t f = tabs.size();
            std::vector<std::vector<SurdHeckeElement>> e(f);
            for (std::size_t a = 0; a < f; ++a) {
                for (std::size_t b = 0; b < f; ++b) e[a].push_back(matrix_unit(tabs[a], tabs[b]));
            }
            for (std::size_t a = 0; a < f; ++a) {
                for (std::size_t b = 0; b < f; ++b) {
                    for (std::size_t c = 0; c < f; ++c) {
                        CHECK(e[a][b] * e[b][c] == e[a][c]);
                        for (std::size_t d = 0; d < f; ++d) {
                            if (d != b) CHECK((e[a][b] * e[d][c]).is_zero());
                        }
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(matrix_unit(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})), std::invalid_argument);
}

TEST_CASE("Schur averaging") {
    CHECK(schur_average(Partition({2}), identity_matrix(1)) == scalar_matrix(1, q * q + 1));
    CHECK(schur_average(Partition({2, 1}), zero_matrix(2, 2)) == zero_matrix(2, 2));
    std::mt19937_64 rng(3);
    for (const auto& lam : {Partition({2, 1}), Partition({2, 2}), Partition({3, 1})}) {
        const int f = static_cast<int>(standard_tableaux(lam).size());
        MatrixQ u = zero_matrix(f, f);
        for (int i = 0; i < f; ++i) {
            for (int j = 0; j < f; ++j) u(i, j) = testing::random_ratfunc(rng);
        }
        CHECK(schur_average(lam, u) == scalar_matrix(f, schur_element(lam) * trace(u)));
    }
    CHECK_THROWS_AS(schur_average(Partition({2, 1}), identity_matrix(3)), std::invalid_argument);
}

TEST_CASE("sandwich relations for idempotents and generators") {
    CHECK(lemma_et_check(StandardTableau({{1, 2}}), 1));
    CHECK(lemma_et_check(StandardTableau({{1, 2}, {3}}), 2));
    for (int m = 2; m <= 4; ++m) {
        for (const auto& t : all_tableaux(m)) {
            for (int k = 1; k < m; ++k) CHECK(lemma_et_check(t, k));
        }
    }
}
