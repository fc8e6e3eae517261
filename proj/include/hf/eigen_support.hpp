#pragma once

// Lets Eigen dense matrices hold exact coefficients. Only the arithmetic
// kernels are used; nothing that needs a norm or an epsilon.

#include "hf/exact_arith.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<hf::RatFuncQ> : GenericNumTraits<hf::RatFuncQ> {
    using Real = hf::RatFuncQ;
    using NonInteger = hf::RatFuncQ;
    using Literal = hf::RatFuncQ;
    using Nested = hf::RatFuncQ;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 50,
        MulCost = 100
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace hf {

using MatrixQ = Eigen::Matrix<RatFuncQ, Eigen::Dynamic, Eigen::Dynamic>;

inline MatrixQ identity_matrix(int n) {
    MatrixQ m = MatrixQ::Constant(n, n, RatFuncQ());
    for (int i = 0; i < n; ++i) m(i, i) = RatFuncQ(1);
    return m;
}

inline MatrixQ zero_matrix(int rows, int cols) { return MatrixQ::Constant(rows, cols, RatFuncQ()); }

inline RatFuncQ trace(const MatrixQ& m) {
    RatFuncQ t;
    for (int i = 0; i < std::min<int>(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

}  // namespace hf
