#pragma once

#include <cstdint>
#include <random>

#include "lamod/algebroid.hpp"

namespace lamod {

/// Seeded generator of test inputs: sparse coefficients with polynomial degree <= 2,
/// |frequency| <= 2 and small rational (occasionally imaginary) coefficients.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi);
  Gaussian coefficient();
  Scalar scalar(const ChartPtr& chart, int max_terms = 3);
  /// A polynomial-only scalar (no Fourier modes).
  Scalar polynomial(const ChartPtr& chart, int max_degree = 2, int max_terms = 3);
  Multivector multivector(FrameKind kind, int rank, int degree, const ChartPtr& chart);
  Multivector section(const AlgebroidSpec& spec) { return multivector(FrameKind::Algebroid, spec.rank(), 1, spec.chart()); }
  Multivector form(const AlgebroidSpec& spec, int degree) {
    return multivector(FrameKind::DualAlgebroid, spec.rank(), degree, spec.chart());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lamod
