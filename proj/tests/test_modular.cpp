#include "support.hpp"

#include "lamod/error.hpp"
#include "lamod/homology.hpp"
#include "lamod/random.hpp"

using namespace lamod;
using namespace lamod::test;

TEST_CASE("modular class table") {
  CHECK(modular_class(builtin_spec("tangent_t1")).theta.is_zero());
  CHECK(modular_class(builtin_spec("tangent_t2")).theta.is_zero());
  CHECK(modular_class(build_tangent(make_chart({"x", "y"}, {}))).theta.is_zero());
  CHECK(modular_class(builtin_spec("sl2")).theta.is_zero());
  CHECK(modular_class(builtin_spec("abelian")).theta.is_zero());
  const SpecPtr na = builtin_spec("nonabelian2");
  CHECK(modular_class(na).theta == form(na, {1}));
  CHECK(modular_class(na).theta == adjoint_character(*na));
}

TEST_CASE("Q_A representation values") {
  RandomSource rs(5);
  const SpecPtr plane = build_tangent(make_chart({"x", "y"}, {}));
  for (int trial = 0; trial < 10; ++trial) CHECK(qa_rep_apply(*plane, rs.section(*plane), Scalar(1)).is_zero());

  const SpecPtr na = builtin_spec("nonabelian2");
  CHECK(qa_rep_apply(*na, section(na, {1}), Scalar(1)) == Scalar(1));
  CHECK(qa_rep_apply(*na, section(na, {2}), Scalar(1)).is_zero());
}

TEST_CASE("cocycles from sections and gauge shifts") {
  const SpecPtr na = builtin_spec("nonabelian2");
  const LineRep base = modular_class(na);
  CHECK(theta_from_section(na, qa_operator(na), Scalar(3)).theta == base.theta);
  CHECK(gauge_shift(base, Scalar(2)).theta == base.theta);

  const SpecPtr circle = builtin_spec("tangent_t1");
  const LineRep shifted = gauge_shift(modular_class(circle), S("cis(1,t)", circle->chart()));
  CHECK(shifted.theta == form(circle, {1}, "I"));

  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  CHECK_THROWS_AS(gauge_shift(modular_class(symplectic), S("x", symplectic->chart())), Indivisible);
  CHECK_THROWS_AS(make_line_rep(na, form(na, {2}), "custom"), ValidationError);
}

TEST_CASE("tensor products and square roots") {
  const SpecPtr na = builtin_spec("nonabelian2");
  const LineRep qa = modular_class(na);
  CHECK(tensor_rep(qa, qa).theta == form(na, {1}, "2"));
  CHECK(sqrt_rep(trivial_rep(na)).theta.is_zero());
  CHECK(tensor_rep(sqrt_rep(qa), sqrt_rep(qa)).theta == qa.theta);

  for (const char* name : {"cotangent_symplectic", "cotangent_linear", "cotangent_sextic", "cotangent_torus", "cotangent_space"}) {
    const SpecPtr spec = builtin_spec(name);
    INFO(name);
    CHECK(sqrt_rep(modular_class(spec)).theta == poisson_modular_class(spec).theta);
  }
}

TEST_CASE("Poisson modular vector fields") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  CHECK(poisson_modular_vf(*symplectic->poisson()).is_zero());
  CHECK(poisson_modular_class(symplectic).theta.is_zero());

  const SpecPtr linear = builtin_spec("cotangent_linear");
  CHECK(poisson_modular_vf(*linear->poisson()) == field(linear, {2}, "-1"));
  CHECK(poisson_modular_class(linear).theta == form(linear, {2}, "-1"));
  CHECK(modular_class(linear).theta == form(linear, {2}, "-2"));

  // w_mu(y) mu = L_{pi~(dy)} mu for mu = 2x dx^dy.
  const Scalar density = S("2*x", linear->chart());
  const Multivector w = poisson_modular_vf(*linear->poisson(), density);
  const Multivector pi_dy = poisson_anchor(*linear->poisson(), dform(linear, {2}));
  CHECK(w == field(linear, {2}, "-2"));
  CHECK(pair(dform(linear, {2}), w) * density ==
        divergence(pi_dy) * density + vector_field_apply(pi_dy, density));
}

TEST_CASE("canonical representation formulas") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  const CanonicalValues v = canonical_rep_values(*symplectic, section(symplectic, {2}, "x"), Scalar(1));
  CHECK(v.bracket_form == v.lie_form);
  CHECK(v.lie_form == v.wedge_form);
  CHECK(v.lie_form.is_zero());

  const SpecPtr sextic = builtin_spec("cotangent_sextic");
  const Scalar f = S("x*y + y^2", sextic->chart());
  const Multivector df = de_rham(Multivector::scalar(FrameKind::Cotangent, 2, f));
  const Multivector hamiltonian = poisson_anchor(*sextic->poisson(), df);
  CHECK(canonical_rep_cotangent(*sextic, df.relabeled(FrameKind::Algebroid), Scalar(1)) == divergence(hamiltonian));
}

TEST_CASE("transformation algebroid representations") {
  const SpecPtr plane = builtin_spec("transformation_plane");
  const int r = plane->rank();

  // The Lie algebra [e1,e2] = e2 acting on itself.
  GaussianMatrix ad1 = GaussianMatrix::Zero(r, r), ad2 = GaussianMatrix::Zero(r, r);
  ad1(1, 1) = Gaussian(1);
  ad2(1, 0) = Gaussian(-1);
  const LineRep adjoint = transformation_top_rep(plane, TransformationTarget::Module, {ad1, ad2});
  CHECK(adjoint.theta == form(plane, {1}));
  CHECK(transformation_top_rep(plane, TransformationTarget::Module).theta.is_zero());

  const LineRep cotangent = transformation_top_rep(plane, TransformationTarget::Cotangent);
  const LineRep tangent = transformation_top_rep(plane, TransformationTarget::Tangent);
  for (int i = 0; i < r; ++i) {
    const Scalar div = divergence(plane->anchor_of(plane->frame(i)));
    CHECK(pair(cotangent.theta, plane->frame(i)) == div);
    CHECK(pair(tangent.theta, plane->frame(i)) == -div);
  }
  // Q_A is the tensor product of the two top powers.
  CHECK(modular_class(plane).theta == tensor_rep(adjoint, cotangent).theta);
  CHECK(modular_class(plane).theta == form(plane, {1}, "2*y"));
}
