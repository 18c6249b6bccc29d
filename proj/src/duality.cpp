#include "lamod/duality.hpp"

#include <algorithm>
#include <map>

#include "lamod/error.hpp"
#include "lamod/homology.hpp"

namespace lamod {

namespace {

void enumerate(const Chart& chart, const Truncation& trunc, std::size_t slot, int degree_left, Monomial& current,
               std::vector<Monomial>& out) {
  if (slot == chart.dimension()) {
    out.push_back(current);
    return;
  }
  if (chart.is_torus(slot)) {
    for (int k = -trunc.max_frequency; k <= trunc.max_frequency; ++k) {
      current[slot] = static_cast<std::int16_t>(k);
      enumerate(chart, trunc, slot + 1, degree_left, current, out);
    }
  } else {
    for (int e = 0; e <= degree_left; ++e) {
      current[slot] = static_cast<std::int16_t>(e);
      enumerate(chart, trunc, slot + 1, degree_left - e, current, out);
    }
  }
  current[slot] = 0;
}

bool has_poly(const GradedOperator& op) { return op.chart && op.chart->poly_count() > 0; }
bool has_torus(const GradedOperator& op) { return op.chart && op.chart->torus_count() > 0; }

/// The truncation whose image provably stays inside `trunc`, or nullopt if it would be negative.
std::optional<Truncation> source_truncation(const GradedOperator& op, const Truncation& trunc) {
  Truncation reduced = trunc;
  if (has_poly(op)) {
    reduced.max_poly_degree -= op.poly_growth;
    if (reduced.max_poly_degree < 0) return std::nullopt;
  }
  if (has_torus(op)) {
    reduced.max_frequency -= op.frequency_growth;
    if (reduced.max_frequency < 0) return std::nullopt;
  }
  return reduced;
}

CohomologyDims raw_dims(const GradedOperator& op, const Truncation& trunc, int degree) {
  const auto reduced = source_truncation(op, trunc);
  if (!reduced) {
    throw TruncationTooSmall("truncation (" + std::to_string(trunc.max_poly_degree) + ", " +
                             std::to_string(trunc.max_frequency) + ") is below the growth bound (" +
                             std::to_string(op.poly_growth) + ", " + std::to_string(op.frequency_growth) + ")");
  }
  CohomologyDims dims;
  dims.degree = degree;
  const OperatorMatrix here = assemble_matrix(op, degree, trunc);
  dims.kernel = static_cast<Eigen::Index>(here.source.size()) - exact_rank(here.matrix);
  dims.image = exact_rank(assemble_matrix(op, degree - op.step, *reduced).matrix);
  dims.dim = dims.kernel - dims.image;
  return dims;
}

GaussianMatrix column_matrix(const std::vector<std::vector<Gaussian>>& columns, std::size_t rows) {
  GaussianMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = columns[c][r];
  }
  return m;
}

void require_compact(const ChartPtr& chart) {
  if (chart && !chart->is_compact()) throw NonCompactError("pairing needs a base made of torus coordinates only");
}

}  // namespace

std::vector<Monomial> truncated_monomials(const Chart& chart, const Truncation& trunc) {
  std::vector<Monomial> out;
  Monomial current{};
  enumerate(chart, trunc, 0, trunc.max_poly_degree, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BasisElement> truncated_basis(const GradedOperator& op, int degree, const Truncation& trunc) {
  std::vector<BasisElement> out;
  if (degree < 0 || degree > op.rank) return out;
  const Chart empty;
  const std::vector<Monomial> monomials = truncated_monomials(op.chart ? *op.chart : empty, trunc);
  for (IndexSet set : index_set::subsets(op.rank, degree)) {
    for (const Monomial& m : monomials) out.push_back({m, set});
  }
  return out;
}

OperatorMatrix assemble_matrix(const GradedOperator& op, int degree, const Truncation& trunc) {
  OperatorMatrix result;
  result.degree = degree;
  result.source = truncated_basis(op, degree, trunc);
  std::map<BasisElement, std::size_t> rows;
  std::vector<std::vector<std::pair<BasisElement, Gaussian>>> columns;
  for (const BasisElement& b : result.source) {
    const Multivector image = op.apply(Multivector::from_set(op.kind, op.rank, b.set, Scalar::monomial(op.chart, b.monomial)));
    auto& column = columns.emplace_back();
    for (const auto& [set, coef] : image.terms()) {
      for (const auto& [m, g] : coef.terms()) {
        const BasisElement key{m, set};
        rows.emplace(key, 0);
        column.emplace_back(key, g);
      }
    }
  }
  std::size_t index = 0;
  for (auto& [key, row] : rows) {
    row = index++;
    result.target.push_back(key);
  }
  result.matrix = GaussianMatrix::Constant(static_cast<Eigen::Index>(rows.size()),
                                           static_cast<Eigen::Index>(result.source.size()), Gaussian());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [key, g] : columns[c]) result.matrix(static_cast<Eigen::Index>(rows[key]), static_cast<Eigen::Index>(c)) += g;
  }
  return result;
}

std::vector<Gaussian> coordinates(const Multivector& m, const std::vector<BasisElement>& basis) {
  std::map<BasisElement, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Gaussian> out(basis.size());
  for (const auto& [set, coef] : m.terms()) {
    for (const auto& [mono, g] : coef.terms()) {
      auto it = index.find(BasisElement{mono, set});
      if (it == index.end()) throw InternalError("element leaves the truncated space; growth bound violated");
      out[it->second] = g;
    }
  }
  return out;
}

Multivector from_coordinates(const GradedOperator& op, int degree, const std::vector<BasisElement>& basis,
                             const std::vector<Gaussian>& coords) {
  Multivector out(op.kind, op.rank, degree, op.chart);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!coords[i].is_zero()) out.add(basis[i].set, Scalar::monomial(op.chart, basis[i].monomial, coords[i]));
  }
  return out;
}

std::pair<int, int> growth_bound(const AlgebroidSpec& spec) {
  return {spec.coefficient_poly_degree(), spec.coefficient_frequency()};
}

GradedOperator algebroid_operator(const SpecPtr& spec, Payload coefficients) {
  GradedOperator op;
  op.kind = FrameKind::DualAlgebroid;
  op.rank = spec->rank();
  op.chart = spec->chart();
  op.step = 1;
  std::tie(op.poly_growth, op.frequency_growth) = growth_bound(*spec);
  if (coefficients == Payload::Trivial) {
    op.apply = [spec](const Multivector& m) { return d_A(*spec, m); };
    return op;
  }
  if (coefficients != Payload::QA) throw SpecError("truncated complexes support trivial or Q_A coefficients");
  const LineRep rep = modular_class(spec);
  for (const auto& [set, c] : rep.theta.terms()) {
    op.poly_growth = std::max(op.poly_growth, c.poly_degree());
    op.frequency_growth = std::max(op.frequency_growth, c.max_frequency());
  }
  op.apply = [rep](const Multivector& m) { return extend_D(rep, EValuedForm{m, Payload::QA}).form; };
  return op;
}

TruncatedComplex assemble(const GradedOperator& op, const Truncation& trunc) {
  TruncatedComplex complex{op, trunc, {}};
  for (int k = 0; k <= op.rank; ++k) complex.differentials.push_back(assemble_matrix(op, k, trunc));
  return complex;
}

TruncatedComplex assemble(const SpecPtr& spec, Payload coefficients, const Truncation& trunc) {
  return assemble(algebroid_operator(spec, coefficients), trunc);
}

CohomologyDims cohomology_dims(const GradedOperator& op, const Truncation& trunc, int degree) {
  CohomologyDims dims = raw_dims(op, trunc, degree);
  Truncation smaller = trunc;
  bool shrinks = false;
  if (has_poly(op)) {
    --smaller.max_poly_degree;
    shrinks = true;
  }
  if (has_torus(op)) {
    --smaller.max_frequency;
    shrinks = true;
  }
  if (!shrinks) {
    dims.stabilized = true;
  } else if (source_truncation(op, smaller)) {
    dims.stabilized = raw_dims(op, smaller, degree).dim == dims.dim;
  }
  return dims;
}

CohomologyDims cohomology_dims(const TruncatedComplex& complex, int degree) {
  return cohomology_dims(complex.op, complex.trunc, degree);
}

std::vector<Multivector> exact_elements(const GradedOperator& op, const Truncation& trunc, int degree) {
  std::vector<Multivector> out;
  const auto reduced = source_truncation(op, trunc);
  if (!reduced) throw TruncationTooSmall("truncation is below the growth bound");
  const int from = degree - op.step;
  for (const BasisElement& b : truncated_basis(op, from, *reduced)) {
    Multivector image = op.apply(Multivector::from_set(op.kind, op.rank, b.set, Scalar::monomial(op.chart, b.monomial)));
    if (!image.is_zero()) out.push_back(std::move(image));
  }
  return out;
}

std::vector<Multivector> cohomology_representatives(const GradedOperator& op, const Truncation& trunc, int degree) {
  const OperatorMatrix here = assemble_matrix(op, degree, trunc);
  const GaussianMatrix kernel = nullspace(here.matrix);
  std::vector<std::vector<Gaussian>> columns;
  for (const Multivector& e : exact_elements(op, trunc, degree)) columns.push_back(coordinates(e, here.source));
  const std::size_t exact_count = columns.size();
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    std::vector<Gaussian> column(here.source.size());
    for (Eigen::Index r = 0; r < kernel.rows(); ++r) column[static_cast<std::size_t>(r)] = kernel(r, c);
    columns.push_back(std::move(column));
  }
  std::vector<Eigen::Index> pivots;
  rref(column_matrix(columns, here.source.size()), &pivots);
  std::vector<Multivector> out;
  for (Eigen::Index p : pivots) {
    if (static_cast<std::size_t>(p) < exact_count) continue;
    out.push_back(from_coordinates(op, degree, here.source, columns[static_cast<std::size_t>(p)]));
  }
  return out;
}

Scalar integrate_pairing(const Multivector& xi, const Multivector& eta) {
  require_compact(common_chart(xi.chart(), eta.chart()));
  return torus_integral(top_coefficient(wedge(xi, eta)));
}

PairingResult pairing_matrix(const SpecPtr& spec, int degree, const Truncation& trunc) {
  require_compact(spec->chart());
  const int r = spec->rank();
  const GradedOperator trivial = algebroid_operator(spec, Payload::Trivial);
  const GradedOperator twisted = algebroid_operator(spec, Payload::QA);
  const std::vector<Multivector> left = cohomology_representatives(trivial, trunc, degree);
  const std::vector<Multivector> right = cohomology_representatives(twisted, trunc, r - degree);

  PairingResult result;
  result.matrix = GaussianMatrix(static_cast<Eigen::Index>(left.size()), static_cast<Eigen::Index>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      result.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          integrate_pairing(left[i], right[j]).constant_term();
    }
  }
  result.rank = exact_rank(result.matrix);
  result.nonsingular = left.size() == right.size() && result.rank == static_cast<Eigen::Index>(left.size());
  for (const Multivector& xi : left) {
    for (const Multivector& e : exact_elements(twisted, trunc, r - degree)) {
      if (!integrate_pairing(xi, e).is_zero()) result.well_defined = false;
    }
  }
  for (const Multivector& eta : right) {
    for (const Multivector& e : exact_elements(trivial, trunc, degree)) {
      if (!integrate_pairing(e, eta).is_zero()) result.well_defined = false;
    }
  }
  return result;
}

StokesResult stokes_check(const SpecPtr& spec, const Multivector& c) {
  const int r = spec->rank();
  const int n = spec->base_dimension();
  if (c.kind() != FrameKind::DualAlgebroid || c.rank() != r || c.degree() != r - 1) {
    throw DegreeMismatch("Stokes needs a Q_A-valued form of degree rank - 1");
  }
  const LineRep rep = modular_class(spec);
  const Scalar lhs = top_coefficient(extend_D(rep, EValuedForm{c, Payload::QA}).form);

  const Multivector top = Multivector::from_set(FrameKind::Algebroid, r, index_set::full(r), Scalar(Gaussian(1), spec->chart()));
  const Multivector field = spec->anchor_of(contract(c, top));
  const Multivector volume = Multivector::from_set(FrameKind::Cotangent, n, index_set::full(n), Scalar(Gaussian(1), spec->chart()));
  const Scalar exact = top_coefficient(de_rham(contract(field, volume)));

  StokesResult result;
  result.residual = lhs - ((r - 1) % 2 == 0 ? exact : -exact);
  if (spec->chart()->is_compact()) result.integral = torus_integral(lhs);
  return result;
}

Scalar adjointness_check(const SpecPtr& spec, const Multivector& xi, const Multivector& w) {
  require_compact(spec->chart());
  const LineRep rep = modular_class(spec);
  const Scalar first = integrate_pairing(d_A(*spec, xi), w);
  const Scalar second = integrate_pairing(xi, extend_D(rep, EValuedForm{w, Payload::QA}).form);
  return first + (xi.degree() % 2 == 0 ? second : -second);
}

ProbeReport degeneracy_probe(const SpecPtr& spec, const Truncation& trunc) {
  ProbeReport report;
  report.h0 = cohomology_dims(algebroid_operator(spec, Payload::Trivial), trunc, 0);
  report.top = cohomology_dims(algebroid_operator(spec, Payload::QA), trunc, spec->rank());
  return report;
}

}  // namespace lamod
