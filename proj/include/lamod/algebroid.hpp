#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamod/eigen_traits.hpp"
#include "lamod/exterior.hpp"

namespace lamod {

/// Brackets of frame elements, {e_i, e_j} = sum_k c[(i,j)][k] e_k, stored for i < j (0-based).
using StructureConstants = std::map<std::pair<int, int>, std::vector<Scalar>>;

enum class AlgebroidOrigin { Explicit, LieAlgebra, Tangent, CotangentPoisson, Transformation, ZeroAnchor };

std::string origin_name(AlgebroidOrigin origin);

/// A Lie algebroid over one global chart, written in a global frame e_1..e_r.
class AlgebroidSpec {
 public:
  AlgebroidSpec(ChartPtr chart, int rank, ScalarMatrix anchor, const StructureConstants& structure,
                AlgebroidOrigin origin = AlgebroidOrigin::Explicit);

  const ChartPtr& chart() const { return chart_; }
  int rank() const { return rank_; }
  int base_dimension() const { return static_cast<int>(chart_->dimension()); }
  AlgebroidOrigin origin() const { return origin_; }

  /// Row i is the anchor image of e_i in coordinate vector fields.
  const ScalarMatrix& anchor() const { return anchor_; }
  /// c_{ij}^k for all i, j (antisymmetric in i, j).
  const Scalar& structure(int i, int j, int k) const { return structure_[(i * rank_ + j) * rank_ + k]; }
  StructureConstants structure_constants() const;

  /// Poisson bivector of a cotangent algebroid.
  const std::optional<Multivector>& poisson() const { return poisson_; }
  /// Action vector fields of a transformation algebroid (tangent, degree 1).
  const std::vector<Multivector>& action() const { return action_; }

  void set_poisson(Multivector pi) { poisson_ = std::move(pi); }
  void set_action(std::vector<Multivector> action) { action_ = std::move(action); }

  /// Frame element e_i as a degree-1 section.
  Multivector frame(int i, const Scalar& coefficient = 1) const;
  Multivector dual_frame(int i, const Scalar& coefficient = 1) const;
  Multivector zero(FrameKind kind, int degree) const;
  Multivector scalar(FrameKind kind, const Scalar& value) const;

  /// Anchor image of a degree-1 section as a tangent vector field.
  Multivector anchor_of(const Multivector& section) const;
  /// rho(a) . f
  Scalar anchor_apply(const Multivector& section, const Scalar& f) const;

  /// Largest polynomial degree among anchor entries and structure functions.
  int coefficient_poly_degree() const;
  /// Largest absolute Fourier frequency among anchor entries and structure functions.
  int coefficient_frequency() const;

 private:
  ChartPtr chart_;
  int rank_;
  ScalarMatrix anchor_;
  std::vector<Scalar> structure_;
  AlgebroidOrigin origin_;
  std::optional<Multivector> poisson_;
  std::vector<Multivector> action_;
};

using SpecPtr = std::shared_ptr<const AlgebroidSpec>;

/// Applies a tangent vector field to a function.
Scalar vector_field_apply(const Multivector& field, const Scalar& f);
/// Lie bracket of two tangent vector fields.
Multivector vector_field_bracket(const Multivector& u, const Multivector& v);
/// Coordinate divergence sum_c d(V^c)/dx_c, i.e. L_V of the coordinate volume form.
Scalar divergence(const Multivector& field);

/// The algebroid bracket of two degree-1 sections, expanded through the derivation law.
Multivector bracket_sections(const AlgebroidSpec& spec, const Multivector& a, const Multivector& b);

SpecPtr build_lie_algebra(int rank, const StructureConstants& constants);
SpecPtr build_tangent(const ChartPtr& chart);
/// Frame e_i = dx_i with {dx_i, dx_j} = d pi(dx_i, dx_j). Throws ValidationError if [pi, pi] != 0.
SpecPtr build_cotangent_poisson(const Multivector& pi);
/// Constant frame of g acting through `action`; throws ValidationError if the action is not a homomorphism.
SpecPtr build_transformation(const ChartPtr& chart, const std::vector<Multivector>& action, const StructureConstants& lie);
SpecPtr build_zero_anchor(int rank, const ChartPtr& chart);

struct ValidationReport {
  bool ok = true;
  std::string identity;
  std::string residual;
};

/// Checks the anchor homomorphism and the Jacobi identity on frame triples.
ValidationReport validate(const AlgebroidSpec& spec);

/// (xi0, x) = tr ad_x for an algebroid over a point.
Multivector adjoint_character(const AlgebroidSpec& spec);

/// Anchor rows of a Poisson bivector: row i is pi~(dx_i) = dx_i contracted into pi.
Multivector poisson_anchor(const Multivector& pi, const Multivector& form);

}  // namespace lamod
