#include "support.hpp"

#include "lamod/homology.hpp"
#include "lamod/random.hpp"

using namespace lamod;
using namespace lamod::test;

TEST_CASE("Koszul boundary") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  const Multivector& pi = *symplectic->poisson();
  CHECK(koszul_boundary(pi, dform(symplectic, {2}, "x")) == Multivector::scalar(FrameKind::Cotangent, 2, Scalar(1)));
  CHECK(koszul_boundary(pi, Multivector::scalar(FrameKind::Cotangent, 2, S("x*y", symplectic->chart()))).is_zero());

  const SpecPtr linear = builtin_spec("cotangent_linear");
  RandomSource rs(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector w = rs.multivector(FrameKind::Cotangent, 2, 2, linear->chart());
    CHECK(koszul_boundary(*linear->poisson(), koszul_boundary(*linear->poisson(), w)).is_zero());
  }
}

TEST_CASE("the twisted differential delta'") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  const SpecPtr plane = build_tangent(symplectic->chart());
  const Multivector& pi = *symplectic->poisson();
  RandomSource rs(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Multivector v = rs.multivector(FrameKind::Tangent, 2, rs.uniform(0, 2), symplectic->chart());
    const Multivector bracket = schouten(*plane, pi.relabeled(FrameKind::Algebroid), v.relabeled(FrameKind::Algebroid));
    CHECK(delta_prime(*symplectic, v, Scalar(3)) == (bracket * Scalar(3)).relabeled(FrameKind::Tangent));
  }
  for (const char* name : {"cotangent_linear", "cotangent_sextic"}) {
    const SpecPtr spec = builtin_spec(name);
    const Multivector one = Multivector::scalar(FrameKind::Tangent, 2, Scalar(1));
    CHECK(delta_prime(*spec, one) == theta_zero(*spec));
  }
}

TEST_CASE("tau contracts into the volume") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  CHECK(tau_map(field(symplectic, {1})) == dform(symplectic, {2}));
  CHECK(tau_map(field(symplectic, {2})) == -dform(symplectic, {1}));
  CHECK(tau_map(Multivector::scalar(FrameKind::Tangent, 2, Scalar(1)), S("1+x", symplectic->chart())) ==
        dform(symplectic, {1, 2}, "1+x"));
  CHECK(tau_map(field(symplectic, {1, 2}, "y")) == Multivector::scalar(FrameKind::Cotangent, 2, S("y", symplectic->chart())));
}

TEST_CASE("b operator and theta_0") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  CHECK(b_operator(Scalar(1), field(symplectic, {1, 2})).is_zero());
  CHECK(b_operator(Scalar(1), *symplectic->poisson()) == theta_zero(*symplectic));
  CHECK(theta_zero(*symplectic).is_zero());

  const SpecPtr linear = builtin_spec("cotangent_linear");
  CHECK(theta_zero(*linear) == poisson_modular_vf(*linear->poisson()));
  CHECK(b_operator(Scalar(1), *linear->poisson()) == theta_zero(*linear));
  const SpecPtr doubled = build_cotangent_poisson(*linear->poisson() * Scalar(2));
  CHECK(theta_zero(*doubled) == theta_zero(*linear) * Scalar(2));
}

TEST_CASE("tau intertwines delta' with the Koszul boundary on fixed inputs") {
  const SpecPtr space = builtin_spec("cotangent_space");
  const Scalar density = S("2 + x*y", space->chart());
  for (int k = 0; k <= 3; ++k) {
    Multivector v(FrameKind::Tangent, 3, k, space->chart());
    for (IndexSet set : index_set::subsets(3, k)) v += Multivector::from_set(FrameKind::Tangent, 3, set, S("x + z^2", space->chart()));
    const int sign = k % 2 == 1 ? 1 : -1;
    CHECK(tau_map(delta_prime(*space, v, density)) == koszul_boundary(*space->poisson(), tau_map(v, density)) * Scalar(sign));
  }
}
