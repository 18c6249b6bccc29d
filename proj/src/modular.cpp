#include "lamod/modular.hpp"

#include "lamod/error.hpp"
#include "lamod/homology.hpp"

namespace lamod {

namespace {

Scalar divide_or_throw(const Scalar& num, const Scalar& den, const std::string& what) {
  auto q = exact_divide(num, den);
  if (!q) throw Indivisible(what + ": " + den.to_string() + " does not divide " + num.to_string());
  return *q;
}

const Multivector& poisson_of(const AlgebroidSpec& spec) {
  if (spec.origin() != AlgebroidOrigin::CotangentPoisson || !spec.poisson()) {
    throw SpecError("expected the cotangent algebroid of a Poisson structure");
  }
  return *spec.poisson();
}

void require_transformation(const AlgebroidSpec& spec) {
  if (spec.origin() != AlgebroidOrigin::Transformation) throw SpecError("expected a transformation algebroid");
}

}  // namespace

LineRep make_line_rep(const SpecPtr& spec, Multivector theta, std::string label) {
  if (theta.kind() != FrameKind::DualAlgebroid || theta.rank() != spec->rank() || theta.degree() != 1) {
    throw KindMismatch("a line representation cocycle is a degree-1 algebroid form");
  }
  const Multivector curvature = d_A(*spec, theta);
  if (!curvature.is_zero()) throw ValidationError("d_A theta = 0", curvature.to_string());
  return LineRep{spec, std::move(theta), std::move(label)};
}

LineRep trivial_rep(const SpecPtr& spec) {
  return LineRep{spec, spec->zero(FrameKind::DualAlgebroid, 1), "trivial"};
}

EValuedForm extend_D(const LineRep& rep, const EValuedForm& omega) {
  const int k = omega.form.degree();
  const Multivector twist = wedge(omega.form, rep.theta);
  return EValuedForm{d_A(*rep.spec, omega.form) + (k % 2 == 0 ? twist : -twist), omega.payload};
}

Scalar qa_rep_apply(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f) {
  const Multivector top = Multivector::from_set(FrameKind::Algebroid, spec.rank(), index_set::full(spec.rank()), f);
  return top_coefficient(lie_derivative_mv(spec, a, top)) + f * divergence(spec.anchor_of(a));
}

LineOperator qa_operator(const SpecPtr& spec) {
  return [spec](const Multivector& a, const Scalar& f) { return qa_rep_apply(*spec, a, f); };
}

LineRep theta_from_section(const SpecPtr& spec, const LineOperator& op, const std::optional<Scalar>& f,
                           const std::string& label) {
  const Scalar gauge = f.value_or(Scalar(1));
  if (gauge.is_zero()) throw DivisionByZero();
  Multivector theta = spec->zero(FrameKind::DualAlgebroid, 1);
  for (int i = 0; i < spec->rank(); ++i) {
    theta.add(IndexSet{1} << i, divide_or_throw(op(spec->frame(i), gauge), gauge, "gauge section"));
  }
  return make_line_rep(spec, std::move(theta), label);
}

LineRep gauge_shift(const LineRep& rep, const Scalar& f) {
  if (f.is_zero()) throw DivisionByZero();
  const Multivector df = d_A(*rep.spec, rep.spec->scalar(FrameKind::DualAlgebroid, f));
  Multivector theta = rep.theta;
  for (const auto& [set, c] : df.terms()) theta.add(set, divide_or_throw(c, f, "gauge shift"));
  return LineRep{rep.spec, std::move(theta), rep.label};
}

LineRep tensor_rep(const LineRep& a, const LineRep& b) {
  if (a.spec != b.spec && a.spec->rank() != b.spec->rank()) throw SpecError("tensor product of representations of different algebroids");
  return LineRep{a.spec, a.theta + b.theta, "tensor"};
}

LineRep sqrt_rep(const LineRep& rep) {
  Multivector theta = rep.spec->zero(FrameKind::DualAlgebroid, 1);
  for (const auto& [set, c] : rep.theta.terms()) theta.add(set, c.divided_by(Gaussian(2)));
  return LineRep{rep.spec, std::move(theta), "sqrt"};
}

LineRep modular_class(const SpecPtr& spec) { return theta_from_section(spec, qa_operator(spec), std::nullopt, "QA"); }

Multivector transformation_tangent_action(const AlgebroidSpec& spec, const Multivector& a, const Multivector& v) {
  require_transformation(spec);
  Multivector out = vector_field_bracket(spec.anchor_of(a), v);
  Multivector derivative = spec.zero(FrameKind::Algebroid, 1);
  for (const auto& [set, c] : a.terms()) derivative.add(set, vector_field_apply(v, c));
  return out + spec.anchor_of(derivative);
}

Multivector transformation_cotangent_action(const AlgebroidSpec& spec, const Multivector& a, const Multivector& alpha) {
  require_transformation(spec);
  const int n = spec.base_dimension();
  const Multivector field = spec.anchor_of(a);
  Multivector out = spec.zero(FrameKind::Cotangent, 1);
  for (int c = 0; c < n; ++c) {
    const Multivector v = Multivector::basis(FrameKind::Tangent, n, {c}, Scalar(Gaussian(1), spec.chart()));
    out.add(IndexSet{1} << c, vector_field_apply(field, pair(alpha, v)) - pair(alpha, transformation_tangent_action(spec, a, v)));
  }
  return out;
}

LineRep transformation_top_rep(const SpecPtr& spec, TransformationTarget target, const std::vector<GaussianMatrix>& module) {
  require_transformation(*spec);
  const int r = spec->rank();
  const int n = spec->base_dimension();
  Multivector theta = spec->zero(FrameKind::DualAlgebroid, 1);
  for (int i = 0; i < r; ++i) {
    Scalar trace;
    switch (target) {
      case TransformationTarget::Module:
        if (!module.empty()) {
          if (static_cast<int>(module.size()) != r) throw SpecError("module needs one matrix per frame element");
          for (Eigen::Index k = 0; k < module[i].rows(); ++k) trace += Scalar(module[i](k, k));
        }
        break;
      case TransformationTarget::Tangent:
        for (int c = 0; c < n; ++c) {
          const Multivector v = Multivector::basis(FrameKind::Tangent, n, {c}, Scalar(Gaussian(1), spec->chart()));
          trace += transformation_tangent_action(*spec, spec->frame(i), v).coefficient(IndexSet{1} << c);
        }
        break;
      case TransformationTarget::Cotangent:
        for (int c = 0; c < n; ++c) {
          const Multivector alpha = Multivector::basis(FrameKind::Cotangent, n, {c}, Scalar(Gaussian(1), spec->chart()));
          trace += transformation_cotangent_action(*spec, spec->frame(i), alpha).coefficient(IndexSet{1} << c);
        }
        break;
    }
    theta.add(IndexSet{1} << i, trace);
  }
  return make_line_rep(spec, std::move(theta), "tensor");
}

Multivector poisson_modular_vf(const Multivector& pi, const Scalar& density) {
  if (pi.kind() != FrameKind::Tangent || pi.degree() != 2 || !pi.chart()) throw KindMismatch("expected a Poisson bivector");
  if (density.is_zero()) throw DivisionByZero();
  const ChartPtr chart = pi.chart();
  const int n = pi.rank();
  Multivector w(FrameKind::Tangent, n, 1, chart);
  for (int c = 0; c < n; ++c) {
    const Scalar test = Scalar::coordinate(chart, static_cast<std::size_t>(c));
    const Multivector df = de_rham(Multivector::scalar(FrameKind::Cotangent, n, test));
    const Multivector hamiltonian = poisson_anchor(pi, df);
    const Scalar lie = vector_field_apply(hamiltonian, density) + density * divergence(hamiltonian);
    const Scalar value = divide_or_throw(lie, density, "modular vector field density");
    w.add(IndexSet{1} << c, divide_or_throw(value, test.derivative(static_cast<std::size_t>(c)), "test function"));
  }
  return w;
}

CanonicalValues canonical_rep_values(const AlgebroidSpec& cotangent, const Multivector& alpha, const Scalar& density) {
  const Multivector& pi = poisson_of(cotangent);
  const int n = cotangent.rank();
  if (alpha.kind() != FrameKind::Algebroid || alpha.degree() != 1 || alpha.rank() != n) {
    throw KindMismatch("alpha must be a degree-1 section of the cotangent algebroid");
  }
  const Multivector form = alpha.relabeled(FrameKind::Cotangent);
  const Multivector volume = Multivector::from_set(FrameKind::Cotangent, n, index_set::full(n), density);
  const Scalar pi_dalpha = pair(de_rham(form), pi);

  CanonicalValues values;
  const Multivector top = volume.relabeled(FrameKind::Algebroid);
  values.bracket_form = top_coefficient(schouten_leibniz(cotangent, alpha, top)) - pi_dalpha * density;

  const Multivector hamiltonian = poisson_anchor(pi, form);
  values.lie_form = vector_field_apply(hamiltonian, density) + density * divergence(hamiltonian) + pi_dalpha * density;

  values.wedge_form = top_coefficient(wedge(form, de_rham(contract(pi, volume))));
  return values;
}

Scalar canonical_rep_cotangent(const AlgebroidSpec& cotangent, const Multivector& alpha, const Scalar& density) {
  const CanonicalValues v = canonical_rep_values(cotangent, alpha, density);
  if (!(v.bracket_form == v.lie_form) || !(v.lie_form == v.wedge_form)) {
    throw InternalError("canonical representation formulas disagree: " + v.bracket_form.to_string() + " | " +
                        v.lie_form.to_string() + " | " + v.wedge_form.to_string());
  }
  return v.lie_form;
}

LineOperator canonical_operator(const SpecPtr& cotangent) {
  return [cotangent](const Multivector& a, const Scalar& f) { return canonical_rep_cotangent(*cotangent, a, f); };
}

LineRep poisson_modular_class(const SpecPtr& cotangent) {
  return theta_from_section(cotangent, canonical_operator(cotangent), std::nullopt, "canonical");
}

}  // namespace lamod
