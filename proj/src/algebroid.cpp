#include "lamod/algebroid.hpp"

#include "lamod/calculus.hpp"
#include "lamod/error.hpp"

namespace lamod {

std::string origin_name(AlgebroidOrigin origin) {
  switch (origin) {
    case AlgebroidOrigin::Explicit: return "explicit";
    case AlgebroidOrigin::LieAlgebra: return "lie_algebra";
    case AlgebroidOrigin::Tangent: return "tangent";
    case AlgebroidOrigin::CotangentPoisson: return "cotangent_poisson";
    case AlgebroidOrigin::Transformation: return "transformation";
    case AlgebroidOrigin::ZeroAnchor: return "zero_anchor";
  }
  return "?";
}

AlgebroidSpec::AlgebroidSpec(ChartPtr chart, int rank, ScalarMatrix anchor, const StructureConstants& structure,
                             AlgebroidOrigin origin)
    : chart_(chart ? std::move(chart) : make_chart({}, {})), rank_(rank), anchor_(std::move(anchor)), origin_(origin) {
  if (rank < 0 || rank > 16) throw SpecError("rank must lie in [0, 16]");
  const int n = base_dimension();
  if (anchor_.rows() != rank || anchor_.cols() != n) {
    throw SpecError("anchor must be a " + std::to_string(rank) + "x" + std::to_string(n) + " matrix");
  }
  for (int i = 0; i < rank; ++i) {
    for (int c = 0; c < n; ++c) common_chart(chart_, anchor_(i, c).chart());
  }
  structure_.assign(static_cast<std::size_t>(rank) * rank * rank, Scalar(Gaussian(), chart_));
  for (const auto& [key, values] : structure) {
    const auto [i, j] = key;
    if (i < 0 || j < 0 || i >= rank || j >= rank || i >= j) {
      throw SpecError("structure keys must be frame pairs i < j within the rank");
    }
    if (static_cast<int>(values.size()) != rank) throw SpecError("each structure entry needs " + std::to_string(rank) + " coefficients");
    for (int k = 0; k < rank; ++k) {
      common_chart(chart_, values[k].chart());
      structure_[(i * rank_ + j) * rank_ + k] = values[k];
      structure_[(j * rank_ + i) * rank_ + k] = -values[k];
    }
  }
}

StructureConstants AlgebroidSpec::structure_constants() const {
  StructureConstants out;
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j < rank_; ++j) {
      std::vector<Scalar> values;
      bool nonzero = false;
      for (int k = 0; k < rank_; ++k) {
        values.push_back(structure(i, j, k));
        nonzero = nonzero || !values.back().is_zero();
      }
      if (nonzero) out.emplace(std::make_pair(i, j), std::move(values));
    }
  }
  return out;
}

Multivector AlgebroidSpec::frame(int i, const Scalar& coefficient) const {
  return Multivector::basis(FrameKind::Algebroid, rank_, {i}, coefficient);
}

Multivector AlgebroidSpec::dual_frame(int i, const Scalar& coefficient) const {
  return Multivector::basis(FrameKind::DualAlgebroid, rank_, {i}, coefficient);
}

Multivector AlgebroidSpec::zero(FrameKind kind, int degree) const {
  const bool base_side = kind == FrameKind::Tangent || kind == FrameKind::Cotangent;
  return Multivector(kind, base_side ? base_dimension() : rank_, degree, chart_);
}

Multivector AlgebroidSpec::scalar(FrameKind kind, const Scalar& value) const {
  Multivector out = zero(kind, 0);
  out.add(0, value);
  return out;
}

Multivector AlgebroidSpec::anchor_of(const Multivector& section) const {
  if (section.kind() != FrameKind::Algebroid || section.rank() != rank_ || section.degree() != 1) {
    throw KindMismatch("anchor applies to degree-1 algebroid sections");
  }
  Multivector field = zero(FrameKind::Tangent, 1);
  for (const auto& [set, coef] : section.terms()) {
    const int i = __builtin_ctz(set);
    for (int c = 0; c < base_dimension(); ++c) {
      if (!anchor_(i, c).is_zero()) field.add(IndexSet{1} << c, coef * anchor_(i, c));
    }
  }
  return field;
}

Scalar AlgebroidSpec::anchor_apply(const Multivector& section, const Scalar& f) const {
  return vector_field_apply(anchor_of(section), f);
}

int AlgebroidSpec::coefficient_poly_degree() const {
  int best = 0;
  for (Eigen::Index i = 0; i < anchor_.size(); ++i) best = std::max(best, anchor_(i).poly_degree());
  for (const Scalar& s : structure_) best = std::max(best, s.poly_degree());
  return best;
}

int AlgebroidSpec::coefficient_frequency() const {
  int best = 0;
  for (Eigen::Index i = 0; i < anchor_.size(); ++i) best = std::max(best, anchor_(i).max_frequency());
  for (const Scalar& s : structure_) best = std::max(best, s.max_frequency());
  return best;
}

Scalar vector_field_apply(const Multivector& field, const Scalar& f) {
  if (field.kind() != FrameKind::Tangent || field.degree() != 1) throw KindMismatch("expected a tangent vector field");
  Scalar out(Gaussian(), common_chart(field.chart(), f.chart()));
  if (f.is_constant()) return out;
  for (const auto& [set, coef] : field.terms()) out += coef * f.derivative(static_cast<std::size_t>(__builtin_ctz(set)));
  return out;
}

Multivector vector_field_bracket(const Multivector& u, const Multivector& v) {
  if (u.kind() != FrameKind::Tangent || v.kind() != FrameKind::Tangent || u.degree() != 1 || v.degree() != 1) {
    throw KindMismatch("expected tangent vector fields");
  }
  Multivector out(FrameKind::Tangent, u.rank(), 1, common_chart(u.chart(), v.chart()));
  for (int c = 0; c < u.rank(); ++c) {
    const IndexSet e = IndexSet{1} << c;
    out.add(e, vector_field_apply(u, v.coefficient(e)) - vector_field_apply(v, u.coefficient(e)));
  }
  return out;
}

Scalar divergence(const Multivector& field) {
  if (field.kind() != FrameKind::Tangent || field.degree() != 1) throw KindMismatch("expected a tangent vector field");
  Scalar out(Gaussian(), field.chart());
  for (const auto& [set, coef] : field.terms()) out += coef.derivative(static_cast<std::size_t>(__builtin_ctz(set)));
  return out;
}

Multivector bracket_sections(const AlgebroidSpec& spec, const Multivector& a, const Multivector& b) {
  for (const Multivector* m : {&a, &b}) {
    if (m->kind() != FrameKind::Algebroid || m->rank() != spec.rank() || m->degree() != 1) {
      throw KindMismatch("bracket_sections expects degree-1 algebroid sections");
    }
  }
  const int r = spec.rank();
  Multivector out = spec.zero(FrameKind::Algebroid, 1);
  for (const auto& [sa, ca] : a.terms()) {
    const int i = __builtin_ctz(sa);
    for (const auto& [sb, cb] : b.terms()) {
      const int j = __builtin_ctz(sb);
      if (i == j) continue;
      const Scalar product = ca * cb;
      for (int k = 0; k < r; ++k) {
        const Scalar& c = spec.structure(i, j, k);
        if (!c.is_zero()) out.add(IndexSet{1} << k, product * c);
      }
    }
  }
  const Multivector rho_a = spec.anchor_of(a);
  const Multivector rho_b = spec.anchor_of(b);
  for (const auto& [sb, cb] : b.terms()) out.add(sb, vector_field_apply(rho_a, cb));
  for (const auto& [sa, ca] : a.terms()) out.add(sa, -vector_field_apply(rho_b, ca));
  return out;
}

SpecPtr build_lie_algebra(int rank, const StructureConstants& constants) {
  // Constants may arrive on some other chart; only their values matter over a point.
  StructureConstants pointwise;
  for (const auto& [key, values] : constants) {
    auto& out = pointwise[key];
    for (const Scalar& v : values) {
      if (!v.is_constant()) throw SpecError("Lie algebra structure constants must be constants");
      out.emplace_back(v.constant_term());
    }
  }
  return std::make_shared<const AlgebroidSpec>(make_chart({}, {}), rank, ScalarMatrix(rank, 0), pointwise,
                                               AlgebroidOrigin::LieAlgebra);
}

SpecPtr build_tangent(const ChartPtr& chart) {
  const int n = static_cast<int>(chart->dimension());
  ScalarMatrix anchor(n, n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < n; ++c) anchor(i, c) = Scalar(Gaussian(i == c ? 1 : 0), chart);
  }
  return std::make_shared<const AlgebroidSpec>(chart, n, std::move(anchor), StructureConstants{}, AlgebroidOrigin::Tangent);
}

Multivector poisson_anchor(const Multivector& pi, const Multivector& form) {
  if (pi.kind() != FrameKind::Tangent || form.kind() != FrameKind::Cotangent) {
    throw KindMismatch("pi~ contracts a cotangent form into a tangent bivector");
  }
  return contract(form, pi);
}

SpecPtr build_cotangent_poisson(const Multivector& pi) {
  if (pi.kind() != FrameKind::Tangent || pi.degree() != 2) throw KindMismatch("a Poisson structure is a tangent bivector");
  if (!pi.chart()) throw SpecError("the Poisson bivector needs a chart");
  const ChartPtr chart = pi.chart();
  const int n = static_cast<int>(chart->dimension());
  if (pi.rank() != n) throw SpecError("bivector rank differs from the chart dimension");

  const SpecPtr tangent = build_tangent(chart);
  const Multivector pi_a = pi.relabeled(FrameKind::Algebroid);
  const Multivector jacobiator = schouten_leibniz(*tangent, pi_a, pi_a);
  if (!jacobiator.is_zero()) {
    throw ValidationError("[pi,pi] = 0", jacobiator.relabeled(FrameKind::Tangent).to_string());
  }

  ScalarMatrix anchor(n, n);
  for (int i = 0; i < n; ++i) {
    const Multivector row = poisson_anchor(pi, Multivector::basis(FrameKind::Cotangent, n, {i}, Scalar(Gaussian(1), chart)));
    for (int c = 0; c < n; ++c) anchor(i, c) = row.coefficient(IndexSet{1} << c);
  }
  StructureConstants structure;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Scalar pij = pi.coefficient((IndexSet{1} << i) | (IndexSet{1} << j));
      std::vector<Scalar> values;
      for (int k = 0; k < n; ++k) values.push_back(pij.derivative(static_cast<std::size_t>(k)));
      structure.emplace(std::make_pair(i, j), std::move(values));
    }
  }
  auto spec = std::make_shared<AlgebroidSpec>(chart, n, std::move(anchor), structure, AlgebroidOrigin::CotangentPoisson);
  spec->set_poisson(pi);
  return spec;
}

SpecPtr build_transformation(const ChartPtr& chart, const std::vector<Multivector>& action, const StructureConstants& lie) {
  const int r = static_cast<int>(action.size());
  const int n = static_cast<int>(chart->dimension());
  for (const auto& [key, values] : lie) {
    for (const Scalar& v : values) {
      if (!v.is_constant()) throw SpecError("Lie algebra structure constants must be constants");
    }
  }
  ScalarMatrix anchor(r, n);
  for (int i = 0; i < r; ++i) {
    if (action[i].kind() != FrameKind::Tangent || action[i].degree() != 1 || action[i].rank() != n) {
      throw KindMismatch("action entries must be tangent vector fields on the chart");
    }
    for (int c = 0; c < n; ++c) anchor(i, c) = action[i].coefficient(IndexSet{1} << c);
  }
  auto spec = std::make_shared<AlgebroidSpec>(chart, r, std::move(anchor), lie, AlgebroidOrigin::Transformation);
  spec->set_action(action);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      Multivector image = spec->zero(FrameKind::Tangent, 1);
      for (int k = 0; k < r; ++k) image += action[k] * spec->structure(i, j, k);
      const Multivector residual = image - vector_field_bracket(action[i], action[j]);
      if (!residual.is_zero()) {
        throw ValidationError("action homomorphism on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")",
                              residual.to_string());
      }
    }
  }
  return spec;
}

SpecPtr build_zero_anchor(int rank, const ChartPtr& chart) {
  const int n = static_cast<int>(chart->dimension());
  ScalarMatrix anchor(rank, n);
  for (Eigen::Index i = 0; i < anchor.size(); ++i) anchor(i) = Scalar(Gaussian(), chart);
  return std::make_shared<const AlgebroidSpec>(chart, rank, std::move(anchor), StructureConstants{}, AlgebroidOrigin::ZeroAnchor);
}

ValidationReport validate(const AlgebroidSpec& spec) {
  const int r = spec.rank();
  ValidationReport report;
  for (int i = 0; i < r && report.ok; ++i) {
    for (int j = i + 1; j < r && report.ok; ++j) {
      const Multivector ei = spec.frame(i);
      const Multivector ej = spec.frame(j);
      const Multivector residual =
          spec.anchor_of(bracket_sections(spec, ei, ej)) - vector_field_bracket(spec.anchor_of(ei), spec.anchor_of(ej));
      if (!residual.is_zero()) {
        report = {false, "anchor homomorphism on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")",
                  residual.to_string()};
      }
    }
  }
  for (int i = 0; i < r && report.ok; ++i) {
    for (int j = i + 1; j < r && report.ok; ++j) {
      for (int k = j + 1; k < r && report.ok; ++k) {
        const Multivector ei = spec.frame(i), ej = spec.frame(j), ek = spec.frame(k);
        const Multivector jacobiator = bracket_sections(spec, ei, bracket_sections(spec, ej, ek)) +
                                       bracket_sections(spec, ej, bracket_sections(spec, ek, ei)) +
                                       bracket_sections(spec, ek, bracket_sections(spec, ei, ej));
        if (!jacobiator.is_zero()) {
          report = {false,
                    "Jacobi on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")",
                    jacobiator.to_string()};
        }
      }
    }
  }
  return report;
}

Multivector adjoint_character(const AlgebroidSpec& spec) {
  if (spec.base_dimension() != 0) throw SpecError("the adjoint character needs an algebroid over a point");
  Multivector out = spec.zero(FrameKind::DualAlgebroid, 1);
  for (int i = 0; i < spec.rank(); ++i) {
    Scalar trace;
    for (int j = 0; j < spec.rank(); ++j) trace += spec.structure(i, j, j);
    out.add(IndexSet{1} << i, trace);
  }
  return out;
}

}  // namespace lamod
