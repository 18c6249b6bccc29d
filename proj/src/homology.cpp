#include "lamod/homology.hpp"

#include "lamod/error.hpp"

namespace lamod {

namespace {

Multivector volume_form(int n, const ChartPtr& chart, const Scalar& density) {
  Multivector mu(FrameKind::Cotangent, n, n, common_chart(chart, density.chart()));
  mu.add(index_set::full(n), density);
  return mu;
}

const Multivector& poisson_of(const AlgebroidSpec& spec) {
  if (spec.origin() != AlgebroidOrigin::CotangentPoisson || !spec.poisson()) {
    throw SpecError("expected the cotangent algebroid of a Poisson structure");
  }
  return *spec.poisson();
}

}  // namespace

Multivector de_rham(const Multivector& form) {
  if (form.kind() != FrameKind::Cotangent) throw KindMismatch("de Rham d acts on cotangent forms");
  const int n = form.rank();
  Multivector out(FrameKind::Cotangent, n, form.degree() + 1, form.chart());
  if (form.degree() < 0 || form.degree() >= n) return out;
  for (const auto& [set, coef] : form.terms()) {
    for (int c = 0; c < n; ++c) {
      const IndexSet e = IndexSet{1} << c;
      if (set & e) continue;
      const Scalar partial = coef.derivative(static_cast<std::size_t>(c));
      if (partial.is_zero()) continue;
      out.add(set | e, index_set::wedge_sign(e, set) > 0 ? partial : -partial);
    }
  }
  return out;
}

Multivector koszul_boundary(const Multivector& pi, const Multivector& form) {
  return contract(pi, de_rham(form)) - de_rham(contract(pi, form));
}

Multivector delta_prime(const AlgebroidSpec& cotangent, const Multivector& v, const Scalar& density) {
  const Multivector& pi = poisson_of(cotangent);
  const int n = cotangent.rank();
  if (v.kind() != FrameKind::Tangent || v.rank() != n) throw KindMismatch("delta' acts on tangent multivectors");
  const SpecPtr tangent = build_tangent(cotangent.chart());
  const Multivector bracket =
      schouten_leibniz(*tangent, pi.relabeled(FrameKind::Algebroid), v.relabeled(FrameKind::Algebroid)).relabeled(FrameKind::Tangent);

  Multivector d_mu = cotangent.zero(FrameKind::Tangent, 1);
  for (int c = 0; c < n; ++c) d_mu.add(IndexSet{1} << c, canonical_rep_cotangent(cotangent, cotangent.frame(c), density));
  const Multivector twist = wedge(v, d_mu);
  return bracket * density + (v.degree() % 2 == 0 ? twist : -twist);
}

Multivector tau_map(const Multivector& v, const Scalar& density) {
  if (v.kind() != FrameKind::Tangent) throw KindMismatch("tau acts on tangent multivectors");
  return contract(v, volume_form(v.rank(), v.chart(), density));
}

Multivector theta_zero(const AlgebroidSpec& cotangent, const Scalar& density) {
  poisson_of(cotangent);
  if (density.is_zero()) throw DivisionByZero();
  Multivector out = cotangent.zero(FrameKind::Tangent, 1);
  for (int c = 0; c < cotangent.rank(); ++c) {
    const Scalar value = canonical_rep_cotangent(cotangent, cotangent.frame(c), density);
    auto q = exact_divide(value, density);
    if (!q) throw Indivisible("density does not divide D mu");
    out.add(IndexSet{1} << c, *q);
  }
  return out;
}

Multivector b_operator(const Scalar& volume_constant, const Multivector& v) {
  if (v.kind() != FrameKind::Tangent) throw KindMismatch("b acts on tangent multivectors");
  if (!volume_constant.is_constant() || volume_constant.is_zero()) {
    throw Indivisible("b needs a volume form with a nonzero constant coefficient");
  }
  const int n = v.rank();
  const int k = v.degree();
  const Gaussian c = volume_constant.constant_term();
  Multivector image = de_rham(contract(v, volume_form(n, v.chart(), volume_constant)));
  if (k % 2 != 0) image = -image;
  Multivector out(FrameKind::Tangent, n, k - 1, v.chart());
  if (k - 1 < 0) return out;
  for (const auto& [set, coef] : image.terms()) {
    const IndexSet inner = index_set::full(n) & ~set;
    const Scalar value = coef.divided_by(c);
    out.add(inner, index_set::wedge_sign(inner, set) > 0 ? value : -value);
  }
  return out;
}

}  // namespace lamod
