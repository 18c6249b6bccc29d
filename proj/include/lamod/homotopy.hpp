#pragma once

#include "lamod/modular.hpp"

namespace lamod {

/// Section of the two-term complex E = TP (even) + A (odd), with boundary rho: A -> TP.
struct GradedSection {
  Multivector even;  ///< tangent vector field
  Multivector odd;   ///< degree-1 algebroid section

  bool is_zero() const { return even.is_zero() && odd.is_zero(); }
};

GradedSection graded_zero(const AlgebroidSpec& spec);
GradedSection operator+(const GradedSection& a, const GradedSection& b);
GradedSection operator-(const GradedSection& a, const GradedSection& b);
GradedSection operator*(const Scalar& f, const GradedSection& s);

/// The boundary: (u, b) -> (rho(b), 0).
GradedSection graded_boundary(const AlgebroidSpec& spec, const GradedSection& s);

/// D_a(u, b) = ([rho(a), u], [a, b]).
GradedSection adjoint_D(const AlgebroidSpec& spec, const Multivector& a, const GradedSection& s);

/// I(a, f)(u, b) = (0, -(u . f) a).
GradedSection homotopy_I(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f, const GradedSection& s);

/// D_{fa}s - f D_a s - I(a,f) d s - d I(a,f) s; identically zero.
GradedSection check_one_prime(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f, const GradedSection& s);

/// Cocycle of the induced representation on wedge^top E0* (x) wedge^top E1, from frame traces.
LineRep determinant_rep(const SpecPtr& spec);

struct TraceReport {
  Scalar odd_trace;   ///< Tr of I d on E1 = A
  Scalar even_trace;  ///< Tr of d I on E0 = TP
  Scalar difference;  ///< K(a, f); identically zero
};

TraceReport trace_K(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f);

}  // namespace lamod
