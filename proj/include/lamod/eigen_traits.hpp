#pragma once

#include <Eigen/Core>

#include "lamod/gaussian.hpp"
#include "lamod/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<lamod::Gaussian> : GenericNumTraits<lamod::Gaussian> {
  using Real = lamod::Gaussian;
  using NonInteger = lamod::Gaussian;
  using Nested = lamod::Gaussian;
  using Literal = lamod::Gaussian;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lamod::Scalar> : GenericNumTraits<lamod::Scalar> {
  using Real = lamod::Scalar;
  using NonInteger = lamod::Scalar;
  using Nested = lamod::Scalar;
  using Literal = lamod::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 32,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lamod {

using GaussianMatrix = Eigen::Matrix<Gaussian, Eigen::Dynamic, Eigen::Dynamic>;
using ScalarMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace lamod
