#include "lamod/homotopy.hpp"

#include "lamod/error.hpp"

namespace lamod {

namespace {

Multivector tangent_basis(const AlgebroidSpec& spec, int c) {
  return Multivector::basis(FrameKind::Tangent, spec.base_dimension(), {c}, Scalar(Gaussian(1), spec.chart()));
}

GradedSection even_part(const AlgebroidSpec& spec, const Multivector& u) {
  GradedSection s = graded_zero(spec);
  s.even = u;
  return s;
}

GradedSection odd_part(const AlgebroidSpec& spec, const Multivector& b) {
  GradedSection s = graded_zero(spec);
  s.odd = b;
  return s;
}

Scalar trace(const ScalarMatrix& m) {
  Scalar t;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

GradedSection graded_zero(const AlgebroidSpec& spec) {
  return GradedSection{spec.zero(FrameKind::Tangent, 1), spec.zero(FrameKind::Algebroid, 1)};
}

GradedSection operator+(const GradedSection& a, const GradedSection& b) { return {a.even + b.even, a.odd + b.odd}; }
GradedSection operator-(const GradedSection& a, const GradedSection& b) { return {a.even - b.even, a.odd - b.odd}; }
GradedSection operator*(const Scalar& f, const GradedSection& s) { return {f * s.even, f * s.odd}; }

GradedSection graded_boundary(const AlgebroidSpec& spec, const GradedSection& s) {
  return even_part(spec, spec.anchor_of(s.odd));
}

GradedSection adjoint_D(const AlgebroidSpec& spec, const Multivector& a, const GradedSection& s) {
  return GradedSection{vector_field_bracket(spec.anchor_of(a), s.even), bracket_sections(spec, a, s.odd)};
}

GradedSection homotopy_I(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f, const GradedSection& s) {
  return odd_part(spec, -vector_field_apply(s.even, f) * a);
}

GradedSection check_one_prime(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f, const GradedSection& s) {
  return adjoint_D(spec, f * a, s) - f * adjoint_D(spec, a, s) - homotopy_I(spec, a, f, graded_boundary(spec, s)) -
         graded_boundary(spec, homotopy_I(spec, a, f, s));
}

LineRep determinant_rep(const SpecPtr& spec) {
  const int r = spec->rank();
  const int n = spec->base_dimension();
  Multivector theta = spec->zero(FrameKind::DualAlgebroid, 1);
  for (int i = 0; i < r; ++i) {
    const Multivector a = spec->frame(i);
    ScalarMatrix odd(r, r);
    for (int j = 0; j < r; ++j) {
      const GradedSection moved = adjoint_D(*spec, a, odd_part(*spec, spec->frame(j)));
      for (int k = 0; k < r; ++k) odd(k, j) = moved.odd.coefficient(IndexSet{1} << k);
    }
    ScalarMatrix even(n, n);
    for (int c = 0; c < n; ++c) {
      const GradedSection moved = adjoint_D(*spec, a, even_part(*spec, tangent_basis(*spec, c)));
      for (int d = 0; d < n; ++d) even(d, c) = moved.even.coefficient(IndexSet{1} << d);
    }
    // The dual connection on E0* has matrix -even^T, so its trace is -Tr(even).
    theta.add(IndexSet{1} << i, trace(odd) - trace(even));
  }
  return make_line_rep(spec, std::move(theta), "determinant");
}

TraceReport trace_K(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f) {
  const int r = spec.rank();
  const int n = spec.base_dimension();
  ScalarMatrix odd(r, r);
  for (int j = 0; j < r; ++j) {
    const GradedSection s = odd_part(spec, spec.frame(j));
    const GradedSection image = homotopy_I(spec, a, f, graded_boundary(spec, s)) + graded_boundary(spec, homotopy_I(spec, a, f, s));
    for (int k = 0; k < r; ++k) odd(k, j) = image.odd.coefficient(IndexSet{1} << k);
  }
  ScalarMatrix even(n, n);
  for (int c = 0; c < n; ++c) {
    const GradedSection s = even_part(spec, tangent_basis(spec, c));
    const GradedSection image = graded_boundary(spec, homotopy_I(spec, a, f, s)) + homotopy_I(spec, a, f, graded_boundary(spec, s));
    for (int d = 0; d < n; ++d) even(d, c) = image.even.coefficient(IndexSet{1} << d);
  }
  TraceReport report{trace(odd), trace(even), Scalar()};
  report.difference = report.odd_trace - report.even_trace;
  return report;
}

}  // namespace lamod
