#include "lamod/io.hpp"

#include <fstream>
#include <sstream>
#include <set>

#include "lamod/error.hpp"
#include "lamod/parser.hpp"

namespace lamod {

namespace {

const std::set<std::string> kKnownKeys = {"name", "description", "chart", "kind", "rank", "anchor",
                                          "structure", "poisson", "action", "lie_constants"};

std::vector<std::string> string_list(const Json& doc, const std::string& what) {
  if (!doc.is_array()) throw SpecError(what + " must be an array of names");
  std::vector<std::string> out;
  for (const auto& item : doc) {
    if (!item.is_string()) throw SpecError(what + " must be an array of names");
    out.push_back(item.get<std::string>());
  }
  return out;
}

ChartPtr chart_from_json(const Json& doc) {
  if (!doc.is_object()) throw SpecError("chart must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "poly" && key != "torus") throw SpecError("unknown chart key '" + key + "'");
  }
  return make_chart(doc.contains("poly") ? string_list(doc["poly"], "chart.poly") : std::vector<std::string>{},
                    doc.contains("torus") ? string_list(doc["torus"], "chart.torus") : std::vector<std::string>{});
}

Scalar expr(const Json& doc, const ChartPtr& chart, const std::string& where) {
  if (doc.is_number_integer()) return Scalar(Gaussian(doc.get<long>()), chart);
  if (!doc.is_string()) throw SpecError(where + " must be an expression string");
  try {
    return parse_scalar(doc.get<std::string>(), chart);
  } catch (const ParseError& e) {
    throw SpecError(where + ": " + e.what());
  } catch (const UnknownCoordinate& e) {
    throw SpecError(where + ": " + e.what());
  }
}

ScalarMatrix matrix(const Json& doc, Eigen::Index rows, Eigen::Index cols, const ChartPtr& chart, const std::string& what) {
  if (!doc.is_array() || static_cast<Eigen::Index>(doc.size()) != rows) {
    throw SpecError(what + " must have " + std::to_string(rows) + " rows");
  }
  ScalarMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw SpecError(what + " rows must have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = expr(row[static_cast<std::size_t>(j)], chart, what + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }
  }
  return m;
}

StructureConstants structure(const Json& doc, int rank, const ChartPtr& chart, const std::string& what) {
  if (!doc.is_object()) throw SpecError(what + " must be an object keyed by \"i,j\"");
  StructureConstants out;
  for (const auto& [key, value] : doc.items()) {
    int i = 0, j = 0;
    char comma = 0;
    std::istringstream in(key);
    if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) throw SpecError(what + " key '" + key + "' is not \"i,j\"");
    if (i < 1 || j < 1 || i > rank || j > rank || i >= j) throw SpecError(what + " key '" + key + "' needs 1 <= i < j <= rank");
    if (!value.is_array() || static_cast<int>(value.size()) != rank) {
      throw SpecError(what + " entry '" + key + "' needs " + std::to_string(rank) + " coefficients");
    }
    std::vector<Scalar> coefficients;
    for (std::size_t k = 0; k < value.size(); ++k) coefficients.push_back(expr(value[k], chart, what + "[" + key + "]"));
    out.emplace(std::make_pair(i - 1, j - 1), std::move(coefficients));
  }
  return out;
}

int rank_of(const Json& doc) {
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) throw SpecError("rank must be an integer");
  const int r = doc["rank"].get<int>();
  if (r < 0 || r > 16) throw SpecError("rank must lie in [0, 16]");
  return r;
}

void allow_only(const Json& doc, const std::string& kind, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (key == "name" || key == "description" || key == "chart" || key == "kind") continue;
    if (!allowed.count(key)) throw SpecError("key '" + key + "' does not apply to kind '" + kind + "'");
  }
}

}  // namespace

SpecPtr spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw SpecError("a spec must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKnownKeys.count(key)) throw SpecError("unknown key '" + key + "'");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw SpecError("kind must be a string");
  const std::string kind = doc["kind"].get<std::string>();
  const ChartPtr chart = doc.contains("chart") ? chart_from_json(doc["chart"]) : make_chart({}, {});
  const Eigen::Index n = static_cast<Eigen::Index>(chart->dimension());

  if (kind == "explicit") {
    allow_only(doc, kind, {"rank", "anchor", "structure"});
    const int r = rank_of(doc);
    ScalarMatrix anchor = doc.contains("anchor") ? matrix(doc["anchor"], r, n, chart, "anchor") : ScalarMatrix(r, n);
    const StructureConstants s = doc.contains("structure") ? structure(doc["structure"], r, chart, "structure") : StructureConstants{};
    return std::make_shared<const AlgebroidSpec>(chart, r, std::move(anchor), s, AlgebroidOrigin::Explicit);
  }
  if (kind == "lie_algebra") {
    allow_only(doc, kind, {"rank", "lie_constants"});
    if (n != 0) throw SpecError("a Lie algebra lives over a point; its chart must be empty");
    const int r = rank_of(doc);
    return build_lie_algebra(r, doc.contains("lie_constants") ? structure(doc["lie_constants"], r, chart, "lie_constants")
                                                              : StructureConstants{});
  }
  if (kind == "tangent") {
    allow_only(doc, kind, {});
    return build_tangent(chart);
  }
  if (kind == "cotangent_poisson") {
    allow_only(doc, kind, {"poisson"});
    if (!doc.contains("poisson")) throw SpecError("cotangent_poisson needs a poisson matrix");
    const ScalarMatrix p = matrix(doc["poisson"], n, n, chart, "poisson");
    Multivector pi(FrameKind::Tangent, static_cast<int>(n), 2, chart);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!p(i, i).is_zero()) throw SpecError("poisson matrix must have a zero diagonal");
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (!(p(i, j) == -p(j, i))) throw SpecError("poisson matrix must be antisymmetric");
        pi.add((IndexSet{1} << i) | (IndexSet{1} << j), p(i, j));
      }
    }
    return build_cotangent_poisson(pi);
  }
  if (kind == "transformation") {
    allow_only(doc, kind, {"action", "lie_constants"});
    if (!doc.contains("action") || !doc["action"].is_array()) throw SpecError("transformation needs an action array");
    const Eigen::Index r = static_cast<Eigen::Index>(doc["action"].size());
    const ScalarMatrix a = matrix(doc["action"], r, n, chart, "action");
    std::vector<Multivector> fields;
    for (Eigen::Index i = 0; i < r; ++i) {
      Multivector v(FrameKind::Tangent, static_cast<int>(n), 1, chart);
      for (Eigen::Index c = 0; c < n; ++c) v.add(IndexSet{1} << c, a(i, c));
      fields.push_back(std::move(v));
    }
    const StructureConstants lie = doc.contains("lie_constants")
                                       ? structure(doc["lie_constants"], static_cast<int>(r), chart, "lie_constants")
                                       : StructureConstants{};
    return build_transformation(chart, fields, lie);
  }
  if (kind == "zero_anchor") {
    allow_only(doc, kind, {"rank"});
    return build_zero_anchor(rank_of(doc), chart);
  }
  throw SpecError("unknown kind '" + kind + "'");
}

SpecPtr load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("'" + path + "' is not valid JSON: " + e.what());
  }
  return spec_from_json(doc);
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json chart_to_json(const Chart& chart) { return Json{{"poly", chart.poly()}, {"torus", chart.torus()}}; }

Json multivector_to_json(const Multivector& m) {
  Json out = Json::array();
  for (const auto& [set, coef] : m.terms()) {
    Json indices = Json::array();
    for (int i : index_set::to_list(set)) indices.push_back(i + 1);
    out.push_back(Json{{"indices", indices}, {"coeff", coef.to_string()}});
  }
  return out;
}

Multivector multivector_from_json(const Json& doc, FrameKind kind, int rank, const ChartPtr& chart, int degree) {
  if (!doc.is_array()) throw SpecError("a multivector is an array of {indices, coeff}");
  if (!doc.empty()) {
    if (!doc[0].is_object() || !doc[0].contains("indices") || !doc[0]["indices"].is_array()) {
      throw SpecError("multivector terms need an indices array");
    }
    degree = static_cast<int>(doc[0]["indices"].size());
  }
  Multivector out(kind, rank, degree, chart);
  for (const auto& term : doc) {
    if (!term.is_object()) throw SpecError("multivector terms must be objects");
    for (const auto& [key, value] : term.items()) {
      if (key != "indices" && key != "coeff") throw SpecError("unknown multivector key '" + key + "'");
    }
    if (!term.contains("indices") || !term["indices"].is_array()) throw SpecError("multivector terms need an indices array");
    std::vector<int> indices;
    for (const auto& i : term["indices"]) {
      if (!i.is_number_integer() || i.get<int>() < 1 || i.get<int>() > rank) throw SpecError("index out of range 1.." + std::to_string(rank));
      indices.push_back(i.get<int>() - 1);
    }
    if (static_cast<int>(indices.size()) != degree) throw SpecError("multivector terms must share one degree");
    const Scalar coefficient = term.contains("coeff") ? expr(term["coeff"], chart, "coeff") : Scalar(Gaussian(1), chart);
    out += Multivector::basis(kind, rank, indices, coefficient);
  }
  return out;
}

}  // namespace lamod
