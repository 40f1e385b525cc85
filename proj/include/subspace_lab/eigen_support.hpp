#pragma once

#include "subspace_lab/number_field.hpp"

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<subspace_lab::Rat> {
    using Real = subspace_lab::Rat;
    using NonInteger = subspace_lab::Rat;
    using Literal = subspace_lab::Rat;
    using Nested = subspace_lab::Rat;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<subspace_lab::NFElem> {
    using Real = subspace_lab::NFElem;
    using NonInteger = subspace_lab::NFElem;
    using Literal = subspace_lab::NFElem;
    using Nested = subspace_lab::NFElem;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace subspace_lab {

template <typename S>
using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecT = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatR = MatT<Rat>;
using VecR = VecT<Rat>;
using MatF = MatT<NFElem>;
using VecF = VecT<NFElem>;

}  // namespace subspace_lab
