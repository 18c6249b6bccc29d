#include "lamod/builtin.hpp"

#include "lamod/error.hpp"

namespace lamod {

const std::vector<BuiltinSpec>& builtin_documents() {
  static const std::vector<BuiltinSpec> documents = [] {
    std::vector<BuiltinSpec> out;
    auto add = [&out](const std::string& name, const char* text) { out.push_back({name, Json::parse(text)}); };
    add("sl2", R"J({"name": "sl2", "description": "sl(2) with basis h, e, f",
      "kind": "lie_algebra", "rank": 3,
      "lie_constants": {"1,2": [0, 2, 0], "1,3": [0, 0, -2], "2,3": [1, 0, 0]}})J");
    add("nonabelian2", R"J({"name": "nonabelian2", "description": "two-dimensional Lie algebra [e1,e2] = e2",
      "kind": "lie_algebra", "rank": 2, "lie_constants": {"1,2": [0, 1]}})J");
    add("abelian", R"J({"name": "abelian", "description": "abelian Lie algebra R^2",
      "kind": "lie_algebra", "rank": 2})J");
    add("tangent_t1", R"J({"name": "tangent_t1", "description": "tangent bundle of the circle",
      "kind": "tangent", "chart": {"torus": ["t"]}})J");
    add("tangent_t2", R"J({"name": "tangent_t2", "description": "tangent bundle of the 2-torus",
      "kind": "tangent", "chart": {"torus": ["t1", "t2"]}})J");
    add("zero_anchor", R"J({"name": "zero_anchor", "description": "rank-2 bundle over the circle with zero bracket and anchor",
      "kind": "zero_anchor", "rank": 2, "chart": {"torus": ["t"]}})J");
    add("cotangent_symplectic", R"J({"name": "cotangent_symplectic", "description": "{x,y} = 1 on R^2",
      "kind": "cotangent_poisson", "chart": {"poly": ["x", "y"]},
      "poisson": [["0", "1"], ["-1", "0"]]})J");
    add("cotangent_linear", R"J({"name": "cotangent_linear", "description": "{x,y} = x on R^2",
      "kind": "cotangent_poisson", "chart": {"poly": ["x", "y"]},
      "poisson": [["0", "x"], ["-x", "0"]]})J");
    add("cotangent_sextic", R"J({"name": "cotangent_sextic", "description": "{x,y} = (x^2+y^2)^3 on R^2",
      "kind": "cotangent_poisson", "chart": {"poly": ["x", "y"]},
      "poisson": [["0", "(x^2+y^2)^3"], ["-(x^2+y^2)^3", "0"]]})J");
    add("cotangent_torus", R"J({"name": "cotangent_torus", "description": "{t1,t2} = 2 + cos(t1) on the 2-torus",
      "kind": "cotangent_poisson", "chart": {"torus": ["t1", "t2"]},
      "poisson": [["0", "2 + cis(1,t1) + cis(-1,t1)"], ["-2 - cis(1,t1) - cis(-1,t1)", "0"]]})J");
    add("cotangent_space", R"J({"name": "cotangent_space", "description": "{x,y} = x*z + y on R^3",
      "kind": "cotangent_poisson", "chart": {"poly": ["x", "y", "z"]},
      "poisson": [["0", "x*z + y", "0"], ["-x*z - y", "0", "0"], ["0", "0", "0"]]})J");
    add("transformation_v0_n2", R"J({"name": "transformation_v0_n2", "description": "R acting on the circle by (1 - e^{it})^2 d/dt",
      "kind": "transformation", "chart": {"torus": ["t"]}, "action": [["(1 - cis(1,t))^2"]]})J");
    add("transformation_v0_n3", R"J({"name": "transformation_v0_n3", "description": "R acting on the circle by (1 - e^{it})^3 d/dt",
      "kind": "transformation", "chart": {"torus": ["t"]}, "action": [["(1 - cis(1,t))^3"]]})J");
    add("transformation_plane", R"J({"name": "transformation_plane", "description": "[e1,e2] = e2 acting on R^2 by -x d/dx + y^2 d/dy and d/dx",
      "kind": "transformation", "chart": {"poly": ["x", "y"]},
      "action": [["-x", "y^2"], ["1", "0"]], "lie_constants": {"1,2": [0, 1]}})J");
    return out;
  }();
  return documents;
}

SpecPtr builtin_spec(const std::string& name) {
  for (const auto& b : builtin_documents()) {
    if (b.name == name) return spec_from_json(b.document);
  }
  throw SpecError("no built-in spec named '" + name + "'");
}

}  // namespace lamod
