#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hf/tensor_operator.hpp"
#include "support.hpp"

using namespace hf;

namespace {

// dense random operator with small Laurent entries
TensorOperatorQ random_op(std::mt19937_64& rng, int n, int m, int fill = 3) {
    TensorOperatorQ r(n, m);
    std::uniform_int_distribution<int> pick(0, r.dim() - 1);
    for (int k = 0; k < fill * r.dim(); ++k) r.add(pick(rng), pick(rng), RatFuncQ(testing::random_laurent(rng)));
    return r;
}

TensorOperatorQ elementary(int n, int i, int j) {
    TensorOperatorQ e(n, 1);
    e.add(i, j, RatFuncQ(1));
    return e;
}

}  // namespace

TEST_CASE("index layout, factor 1 most significant") {
    const TensorOperatorQ id = TensorOperatorQ::identity(3, 2);
    CHECK(id.dim() == 9);
    CHECK(id.digit(5, 1) == 1);
    CHECK(id.digit(5, 2) == 2);
    // (e_01)_1 sends e_1 ⊗ e_2 (index 5) to e_0 ⊗ e_2 (index 2)
    const TensorOperatorQ a = TensorOperatorQ::placed(elementary(3, 0, 1), 1, 2);
    CHECK(a.entry(2, 5) == RatFuncQ(1));
    CHECK(a.nonzeros() == 3);
}

TEST_CASE("placement agrees with Kronecker products") {
    std::mt19937_64 rng(11);
    const TensorOperatorQ x = random_op(rng, 2, 1);
    const TensorOperatorQ y = random_op(rng, 2, 1);
    const TensorOperatorQ id = TensorOperatorQ::identity(2, 1);
    const TensorOperatorQ xy = kron(x, y);
    CHECK(TensorOperatorQ::placed(x, 1, 3) == kron(kron(x, id), id));
    CHECK(TensorOperatorQ::placed(y, 3, 3) == kron(kron(id, id), y));
    CHECK(TensorOperatorQ::placed(xy, 1, 3, 3) == kron(kron(x, id), y));
    // C_{ba} puts the first tensor leg of C on factor b
    CHECK(TensorOperatorQ::placed(xy, 3, 1, 3) == kron(kron(y, id), x));
    CHECK(TensorOperatorQ::placed(xy, 1, 2, 2) == xy);
}

TEST_CASE("composition is associative and matches Kronecker factors") {
    std::mt19937_64 rng(12);
    const TensorOperatorQ a = random_op(rng, 2, 2);
    const TensorOperatorQ b = random_op(rng, 2, 2);
    const TensorOperatorQ c = random_op(rng, 2, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(TensorOperatorQ::identity(2, 2) * a == a);
    const TensorOperatorQ x = random_op(rng, 3, 1);
    const TensorOperatorQ y = random_op(rng, 3, 1);
    const TensorOperatorQ u = random_op(rng, 3, 1);
    const TensorOperatorQ v = random_op(rng, 3, 1);
    CHECK(kron(x, y) * kron(u, v) == kron(x * u, y * v));
}

TEST_CASE("partial transposes") {
    std::mt19937_64 rng(13);
    const TensorOperatorQ a = random_op(rng, 2, 3);
    for (int f = 1; f <= 3; ++f) CHECK(a.partial_transpose(f).partial_transpose(f) == a);
    CHECK(a.partial_transpose(1).partial_transpose(2).partial_transpose(3) == a.transpose());
    CHECK(a.partial_transpose(2).trace() == a.trace());
    const TensorOperatorQ x = random_op(rng, 2, 1);
    const TensorOperatorQ y = random_op(rng, 2, 1);
    CHECK(kron(x, y).partial_transpose(2) == kron(x, y.transpose()));
    // (AB)^t = B^t A^t
    const TensorOperatorQ b = random_op(rng, 2, 3);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
}

TEST_CASE("trace and scalars") {
    std::mt19937_64 rng(14);
    const TensorOperatorQ x = random_op(rng, 3, 1);
    const TensorOperatorQ y = random_op(rng, 3, 1);
    CHECK(kron(x, y).trace() == x.trace() * y.trace());
    CHECK(TensorOperatorQ::identity(3, 2).trace() == RatFuncQ(9));
    CHECK((x * RatFuncQ(0)).is_zero());
    CHECK((x - x).is_zero());
    CHECK((x - x).nonzeros() == 0);
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(15);
    for (int rep = 0; rep < 4; ++rep) {
        TensorOperatorQ a = random_op(rng, 2, 2) + TensorOperatorQ::scalar(2, 2, RatFuncQ::q_pow(5));
        const TensorOperatorQ ai = a.inverse();
        CHECK(a * ai == TensorOperatorQ::identity(2, 2));
        CHECK(ai * a == TensorOperatorQ::identity(2, 2));
    }
    // pivoting: an anti-diagonal operator
    TensorOperatorQ p(2, 1);
    p.add(0, 1, RatFuncQ::q());
    p.add(1, 0, RatFuncQ(3));
    CHECK(p * p.inverse() == TensorOperatorQ::identity(2, 1));
    CHECK_THROWS_AS(TensorOperatorQ(2, 2).inverse(), std::domain_error);
}

TEST_CASE("spectral operators") {
    SpectralOperator a(2, 1);
    const ExtRatFunc t = ExtRatFunc::t();
    a.add(0, 0, t);
    a.add(0, 1, ExtRatFunc(1) / (t - ExtRatFunc(1)));
    a.add(1, 1, ExtRatFunc(2));
    const TensorOperatorQ at3 = evaluate(a, RatFuncQ(3));
    CHECK(at3.entry(0, 0) == RatFuncQ(3));
    CHECK(at3.entry(0, 1) == RatFuncQ(mpq_class(1, 2)));
    CHECK(evaluate(scale_variable(a, RatFuncQ(3)), RatFuncQ(1)) == at3);
    CHECK(a * a.inverse() == SpectralOperator::identity(2, 1));
    CHECK(evaluate(lift(at3), RatFuncQ(7)) == at3);
}

TEST_CASE("triples are row-major and skip zeros") {
    TensorOperatorQ a(2, 1);
    a.add(1, 0, RatFuncQ(2));
    a.add(0, 1, RatFuncQ(1));
    a.add(0, 0, RatFuncQ(1));
    a.add(0, 0, RatFuncQ(-1));
    const auto tr = a.triples();
    REQUIRE(tr.size() == 2);
    CHECK(std::get<0>(tr[0]) == 0);
    CHECK(std::get<1>(tr[0]) == 1);
    CHECK(std::get<0>(tr[1]) == 1);
    CHECK(std::get<2>(tr[1]) == RatFuncQ(2));
}

TEST_CASE("bad shapes are rejected") {
    CHECK_THROWS_AS(TensorOperatorQ(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(TensorOperatorQ::identity(2, 1) + TensorOperatorQ::identity(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(TensorOperatorQ::placed(TensorOperatorQ::identity(2, 2), 1, 1, 3), std::out_of_range);
    CHECK_THROWS_AS(TensorOperatorQ::placed(TensorOperatorQ::identity(2, 1), 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(TensorOperatorQ::identity(2, 2).partial_transpose(3), std::out_of_range);
}
