#include "support.hpp"

#include <filesystem>
#include <fstream>

#include "lamod/calculus.hpp"
#include "lamod/error.hpp"

using namespace lamod;
using namespace lamod::test;

namespace {

/// Jacobiator of frame sections straight from structure constants (point base).
Multivector lie_jacobiator(int rank, const StructureConstants& c, int i, int j, int k) {
  auto bracket = [&](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(rank, Scalar(0));
    for (int a = 0; a < rank; ++a) {
      for (int b = 0; b < rank; ++b) {
        if (a == b) continue;
        const int lo = std::min(a, b), hi = std::max(a, b);
        const auto it = c.find({lo, hi});
        if (it == c.end()) continue;
        const Scalar sign = a < b ? Scalar(1) : Scalar(-1);
        for (int m = 0; m < rank; ++m) out[m] += sign * u[a] * v[b] * it->second[m];
      }
    }
    return out;
  };
  auto unit = [&](int a) {
    std::vector<Scalar> v(rank, Scalar(0));
    v[a] = Scalar(1);
    return v;
  };
  std::vector<Scalar> total(rank, Scalar(0));
  const std::vector<std::array<int, 3>> cyc = {{i, j, k}, {j, k, i}, {k, i, j}};
  for (const auto& [p, q, r] : cyc) {
    const auto inner = bracket(unit(q), unit(r));
    const auto outer = bracket(unit(p), inner);
    for (int m = 0; m < rank; ++m) total[m] += outer[m];
  }
  Multivector out(FrameKind::Algebroid, rank, 1, nullptr);
  for (int m = 0; m < rank; ++m) out += Multivector::basis(FrameKind::Algebroid, rank, {m}, total[m]);
  return out;
}

StructureConstants sl2_constants(bool corrupt) {
  StructureConstants c;
  c[{0, 1}] = {0, 2, 0};
  c[{0, 2}] = {0, 0, -2};
  c[{1, 2}] = {1, corrupt ? 1 : 0, 0};
  return c;
}

}  // namespace

TEST_CASE("Lie algebra constructors and validation") {
  CHECK(validate(*builtin_spec("sl2")).ok);
  CHECK(validate(*builtin_spec("nonabelian2")).ok);
  const SpecPtr abelian = builtin_spec("abelian");
  CHECK(bracket_sections(*abelian, section(abelian, {1}), section(abelian, {2})).is_zero());

  for (bool corrupt : {false, true}) {
    const StructureConstants c = sl2_constants(corrupt);
    const SpecPtr spec = build_lie_algebra(3, c);
    const Multivector oracle = lie_jacobiator(3, c, 0, 1, 2);
    const Multivector engine = bracket_sections(*spec, section(spec, {1}), bracket_sections(*spec, section(spec, {2}), section(spec, {3}))) +
                               bracket_sections(*spec, section(spec, {2}), bracket_sections(*spec, section(spec, {3}), section(spec, {1}))) +
                               bracket_sections(*spec, section(spec, {3}), bracket_sections(*spec, section(spec, {1}), section(spec, {2})));
    CHECK(engine == oracle);
    CHECK(oracle.is_zero() == !corrupt);
    const ValidationReport report = validate(*spec);
    CHECK(report.ok == !corrupt);
    if (corrupt) CHECK(report.identity.find("Jacobi") != std::string::npos);
  }
}

TEST_CASE("tangent algebroids") {
  for (const ChartPtr& chart : {make_chart({"x", "y"}, {}), make_chart({}, {"t1", "t2"})}) {
    const SpecPtr spec = build_tangent(chart);
    CHECK(spec->rank() == 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) CHECK(spec->anchor()(i, j) == Scalar(i == j ? 1 : 0));
    }
    CHECK(validate(*spec).ok);
  }
  const SpecPtr plane = build_tangent(make_chart({"x", "y"}, {}));
  CHECK(bracket_sections(*plane, section(plane, {1}), section(plane, {2}, "x")) == section(plane, {2}));
  const Multivector a = section(plane, {1}, "x*y") + section(plane, {2}, "y^2");
  CHECK(bracket_sections(*plane, a, a).is_zero());
}

TEST_CASE("cotangent algebroids of Poisson structures") {
  const SpecPtr symplectic = builtin_spec("cotangent_symplectic");
  CHECK(bracket_sections(*symplectic, section(symplectic, {1}), section(symplectic, {2})).is_zero());
  CHECK(symplectic->anchor()(0, 1) == Scalar(1));
  CHECK(symplectic->anchor()(1, 0) == Scalar(-1));
  CHECK(symplectic->anchor()(0, 0).is_zero());

  const SpecPtr linear = builtin_spec("cotangent_linear");
  CHECK(bracket_sections(*linear, section(linear, {1}), section(linear, {2})) == section(linear, {1}));
  CHECK(validate(*linear).ok);
  CHECK(validate(*builtin_spec("cotangent_sextic")).ok);

  const SpecPtr space = build_tangent(make_chart({"x", "y", "z"}, {}));
  const Multivector bad = field(space, {1, 2}) + field(space, {1, 3}, "x");
  CHECK_THROWS_AS(build_cotangent_poisson(bad), ValidationError);
}

TEST_CASE("transformation algebroids") {
  const SpecPtr v0 = builtin_spec("transformation_v0_n2");
  CHECK(v0->rank() == 1);
  CHECK(v0->anchor()(0, 0) == S("(1 - cis(1,t))^2", v0->chart()));

  const ChartPtr xy = make_chart({"x", "y"}, {});
  const SpecPtr plane = build_tangent(xy);
  const SpecPtr translations = build_transformation(xy, {field(plane, {1}), field(plane, {2})}, {});
  CHECK(validate(*translations).ok);
  CHECK(translations->anchor() == plane->anchor());

  StructureConstants lie;
  lie[{0, 1}] = {0, 1};
  CHECK_THROWS_AS(build_transformation(xy, {field(plane, {1}), field(plane, {2})}, lie), ValidationError);
  CHECK(validate(*builtin_spec("transformation_plane")).ok);
}

TEST_CASE("zero anchor") {
  const SpecPtr spec = builtin_spec("zero_anchor");
  CHECK(spec->anchor_of(section(spec, {1}, "cis(1,t)")).is_zero());
  CHECK(validate(*spec).ok);
}

TEST_CASE("derivation law on a fixed example") {
  const SpecPtr spec = builtin_spec("cotangent_linear");
  const Multivector a = section(spec, {1}, "y"), b = section(spec, {2}, "x");
  const Scalar f = S("x*y", spec->chart());
  CHECK(bracket_sections(*spec, a, f * b) - f * bracket_sections(*spec, a, b) == spec->anchor_apply(a, f) * b);
}

TEST_CASE("adjoint character") {
  CHECK(adjoint_character(*builtin_spec("sl2")).is_zero());
  const SpecPtr na = builtin_spec("nonabelian2");
  CHECK(adjoint_character(*na) == form(na, {1}));
  CHECK(adjoint_character(*builtin_spec("abelian")).is_zero());
}

TEST_CASE("spec files") {
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind": "lie_algebra", "rank": 2, "colour": 1})")), SpecError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind": "tangent", "rank": 2, "chart": {"poly": ["x"]}})")), SpecError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind": "mystery"})")), SpecError);
  CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), SpecError);

  const SpecPtr explicit_spec = spec_from_json(Json::parse(R"({"kind": "explicit", "rank": 2, "chart": {"poly": ["x"]},
      "anchor": [["1"], ["x"]], "structure": {"1,2": ["1", "0"]}})"));
  CHECK(validate(*explicit_spec).ok);

  for (const auto& b : builtin_documents()) {
    const std::string path = std::string(LAMOD_SPEC_DIR) + "/" + b.name + ".json";
    INFO(path);
    REQUIRE(std::filesystem::exists(path));
    std::ifstream in(path);
    CHECK(Json::parse(in) == b.document);
    CHECK(validate(*load_spec(path)).ok);
  }
}

TEST_CASE("multivector JSON round trip") {
  const SpecPtr spec = builtin_spec("cotangent_torus");
  const Multivector m = form(spec, {1, 2}, "2*cis(1,t1) - I");
  CHECK(multivector_from_json(multivector_to_json(m), FrameKind::DualAlgebroid, 2, spec->chart()) == m);
  CHECK_THROWS_AS(multivector_from_json(Json::parse(R"([{"indices": [3]}])"), FrameKind::DualAlgebroid, 2, spec->chart()),
                  SpecError);
}
