#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lamod/calculus.hpp"

namespace lamod {

/// A representation of A on a trivialized line bundle, stored as its cocycle:
/// D_a s = theta(a) s for the standard section s.
struct LineRep {
  SpecPtr spec;
  Multivector theta;
  std::string label;
};

/// Builds a LineRep after checking d_A theta = 0; throws ValidationError otherwise.
LineRep make_line_rep(const SpecPtr& spec, Multivector theta, std::string label);
LineRep trivial_rep(const SpecPtr& spec);

/// D(omega (x) s) = d_A omega (x) s + (-1)^k omega ^ theta (x) s.
EValuedForm extend_D(const LineRep& rep, const EValuedForm& omega);

/// Action of a degree-1 section on sections f s of a trivialized line bundle,
/// returning the coefficient of D_a(f s) against s.
using LineOperator = std::function<Scalar(const Multivector& a, const Scalar& f)>;

/// D_a(f X0 (x) mu0) = L_a(f X0) (x) mu0 + f X0 (x) L_{rho(a)} mu0 for the
/// standard section X0 (x) mu0 = (e_1 ^ ... ^ e_r) (x) (dx_1 ^ ... ^ dx_n) of Q_A.
Scalar qa_rep_apply(const AlgebroidSpec& spec, const Multivector& a, const Scalar& f);
LineOperator qa_operator(const SpecPtr& spec);

/// Cocycle of `op` relative to the section f s (f = 1 when omitted):
/// theta(e_i) = D_{e_i}(f s) / f. Throws Indivisible if f does not divide.
LineRep theta_from_section(const SpecPtr& spec, const LineOperator& op, const std::optional<Scalar>& f = std::nullopt,
                           const std::string& label = "custom");

/// theta + d_A f / f. Throws Indivisible.
LineRep gauge_shift(const LineRep& rep, const Scalar& f);
LineRep tensor_rep(const LineRep& a, const LineRep& b);
/// The representation whose tensor square is `rep`: theta / 2.
LineRep sqrt_rep(const LineRep& rep);

/// The cocycle of Q_A at its standard section.
LineRep modular_class(const SpecPtr& spec);

/// Tensor targets of a transformation algebroid.
enum class TransformationTarget { Module, Tangent, Cotangent };

/// D_a V = [rho(a), V] + rho(V . a) on vector fields, for a transformation algebroid.
Multivector transformation_tangent_action(const AlgebroidSpec& spec, const Multivector& a, const Multivector& v);
/// The dual action on 1-forms: (D_a alpha)(V) = rho(a)(alpha(V)) - alpha(D_a V).
Multivector transformation_cotangent_action(const AlgebroidSpec& spec, const Multivector& a, const Multivector& alpha);
/// Top exterior power of a transformation-algebroid representation. For Module,
/// `module` holds the matrices of e_1..e_r acting on U (empty means trivial U of dimension 1).
LineRep transformation_top_rep(const SpecPtr& spec, TransformationTarget target,
                               const std::vector<GaussianMatrix>& module = {});

/// w_mu with L_{pi~(df)} mu = w_mu(f) mu, for mu = density * dx_1 ^ ... ^ dx_n.
Multivector poisson_modular_vf(const Multivector& pi, const Scalar& density = 1);

/// The three expressions for D_alpha mu on wedge^top T*P, which must agree.
struct CanonicalValues {
  Scalar bracket_form;  ///< {alpha, mu} - (pi, d alpha) mu
  Scalar lie_form;      ///< L_{pi~ alpha} mu + (pi, d alpha) mu
  Scalar wedge_form;    ///< alpha ^ d i_pi mu
};

/// alpha is a section of the cotangent algebroid (frame kind Algebroid, e_i = dx_i).
CanonicalValues canonical_rep_values(const AlgebroidSpec& cotangent, const Multivector& alpha, const Scalar& density);
/// Common value of the three expressions; throws InternalError if they differ.
Scalar canonical_rep_cotangent(const AlgebroidSpec& cotangent, const Multivector& alpha, const Scalar& density);
LineOperator canonical_operator(const SpecPtr& cotangent);

/// Cocycle of the canonical representation at the coordinate volume form.
LineRep poisson_modular_class(const SpecPtr& cotangent);

}  // namespace lamod
