#include "support.hpp"

#include "lamod/duality.hpp"
#include "lamod/error.hpp"
#include "lamod/random.hpp"

using namespace lamod;
using namespace lamod::test;

namespace {

std::vector<Eigen::Index> dims(const SpecPtr& spec, Payload p, Truncation trunc) {
  std::vector<Eigen::Index> out;
  const GradedOperator op = algebroid_operator(spec, p);
  for (int k = 0; k <= spec->rank(); ++k) out.push_back(cohomology_dims(op, trunc, k).dim);
  return out;
}

using Dims = std::vector<Eigen::Index>;

}  // namespace

TEST_CASE("Lie algebra cohomology") {
  CHECK(dims(builtin_spec("sl2"), Payload::Trivial, {}) == Dims{1, 0, 0, 1});
  CHECK(dims(builtin_spec("sl2"), Payload::QA, {}) == Dims{1, 0, 0, 1});
  CHECK(dims(builtin_spec("nonabelian2"), Payload::Trivial, {}) == Dims{1, 1, 0});
  CHECK(dims(builtin_spec("nonabelian2"), Payload::QA, {}) == Dims{0, 1, 1});
  CHECK(dims(builtin_spec("abelian"), Payload::Trivial, {}) == Dims{1, 2, 1});
}

TEST_CASE("de Rham cohomology of tori in Fourier modes") {
  for (int K = 1; K <= 3; ++K) {
    const SpecPtr t2 = builtin_spec("tangent_t2");
    CHECK(dims(t2, Payload::Trivial, {0, K}) == Dims{1, 2, 1});
    const GradedOperator op = algebroid_operator(t2, Payload::Trivial);
    for (int k = 0; k <= 2; ++k) CHECK(cohomology_dims(op, {0, K}, k).stabilized);
  }
  CHECK(dims(builtin_spec("tangent_t1"), Payload::Trivial, {0, 3}) == Dims{1, 1});
}

TEST_CASE("assembled differentials compose to zero") {
  for (const char* name : {"sl2", "tangent_t2", "cotangent_linear", "transformation_v0_n2", "transformation_plane"}) {
    INFO(name);
    const SpecPtr spec = builtin_spec(name);
    for (Payload p : {Payload::Trivial, Payload::QA}) {
      const GradedOperator op = algebroid_operator(spec, p);
      const Truncation small{2, 2};
      const Truncation large{2 + op.poly_growth, 2 + op.frequency_growth};
      for (int k = 0; k + 1 <= spec->rank(); ++k) {
        const OperatorMatrix first = assemble_matrix(op, k, small);
        const OperatorMatrix second = assemble_matrix(op, k + 1, large);
        // Re-express the image basis of the first matrix in the source basis of the second.
        GaussianMatrix embed = GaussianMatrix::Zero(static_cast<Eigen::Index>(second.source.size()),
                                                    static_cast<Eigen::Index>(first.target.size()));
        for (std::size_t j = 0; j < first.target.size(); ++j) {
          const auto it = std::find(second.source.begin(), second.source.end(), first.target[j]);
          REQUIRE(it != second.source.end());
          embed(it - second.source.begin(), static_cast<Eigen::Index>(j)) = Gaussian(1);
        }
        const GaussianMatrix product = second.matrix * embed * first.matrix;
        for (Eigen::Index i = 0; i < product.size(); ++i) CHECK(product(i).is_zero());
      }
    }
  }
}

TEST_CASE("growth bounds and truncation guards") {
  CHECK(growth_bound(*builtin_spec("cotangent_linear")).first == 1);
  CHECK(growth_bound(*builtin_spec("sl2")) == std::pair<int, int>{0, 0});
  CHECK(growth_bound(*builtin_spec("cotangent_sextic")).first == 6);
  const GradedOperator op = algebroid_operator(builtin_spec("cotangent_sextic"), Payload::Trivial);
  CHECK_THROWS_AS(cohomology_dims(op, {3, 0}, 1), TruncationTooSmall);
}

TEST_CASE("integration pairing") {
  const SpecPtr na = builtin_spec("nonabelian2");
  const PairingResult k0 = pairing_matrix(na, 0, {});
  CHECK(k0.matrix.rows() == 1);
  CHECK(k0.matrix.cols() == 1);
  CHECK(k0.nonsingular);
  const PairingResult k1 = pairing_matrix(na, 1, {});
  CHECK(k1.matrix.rows() == 1);
  CHECK(k1.nonsingular);
  CHECK(k1.well_defined);
  const PairingResult k2 = pairing_matrix(na, 2, {});
  CHECK(k2.matrix.size() == 0);

  const SpecPtr t2 = builtin_spec("tangent_t2");
  for (int K = 1; K <= 2; ++K) {
    for (int k = 0; k <= 2; ++k) {
      const PairingResult p = pairing_matrix(t2, k, {0, K});
      CHECK(p.nonsingular);
      CHECK(p.well_defined);
      CHECK(p.rank == (k == 1 ? 2 : 1));
    }
  }
  const PairingResult zero = pairing_matrix(builtin_spec("zero_anchor"), 1, {0, 1});
  CHECK(zero.matrix.rows() > 0);
  CHECK(zero.nonsingular);
  CHECK_THROWS_AS(pairing_matrix(builtin_spec("cotangent_linear"), 1, {2, 0}), NonCompactError);
}

TEST_CASE("Stokes and adjointness") {
  RandomSource rs(9);
  for (const char* name : {"tangent_t2", "zero_anchor", "cotangent_torus", "transformation_v0_n3"}) {
    INFO(name);
    const SpecPtr spec = builtin_spec(name);
    for (int trial = 0; trial < 5; ++trial) {
      const StokesResult s = stokes_check(spec, rs.form(*spec, spec->rank() - 1));
      CHECK(s.residual.is_zero());
      REQUIRE(s.integral.has_value());
      CHECK(s.integral->is_zero());
      const int k = rs.uniform(1, spec->rank());
      CHECK(adjointness_check(spec, rs.form(*spec, k - 1), rs.form(*spec, spec->rank() - k)).is_zero());
    }
  }
  const SpecPtr sextic = builtin_spec("cotangent_sextic");
  const StokesResult local = stokes_check(sextic, rs.form(*sextic, 1));
  CHECK(local.residual.is_zero());
  CHECK_FALSE(local.integral.has_value());
}

TEST_CASE("degeneracy probes") {
  const ProbeReport v0 = degeneracy_probe(builtin_spec("transformation_v0_n2"), {0, 6});
  CHECK(v0.h0.dim == 1);
  CHECK(v0.top.dim >= 2);
  const ProbeReport circle = degeneracy_probe(builtin_spec("tangent_t1"), {0, 3});
  CHECK(circle.h0.dim == 1);
  CHECK(circle.top.dim == 1);
  const ProbeReport sextic = degeneracy_probe(builtin_spec("cotangent_sextic"), {8, 0});
  CHECK(sextic.h0.dim == 1);
}
