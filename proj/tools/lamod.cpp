#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lamod/builtin.hpp"
#include "lamod/duality.hpp"
#include "lamod/error.hpp"
#include "lamod/homology.hpp"
#include "lamod/identities.hpp"
#include "lamod/io.hpp"
#include "lamod/parser.hpp"
#include "lamod/random.hpp"

namespace {

using namespace lamod;

constexpr const char* kSchema = "lamod-report/1";

/// Raised for bad invocations; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string spec;
  std::array<std::string, 2> operands;
  int max_poly_degree = 4;
  int max_frequency = 2;
  std::string degree = "all";
  std::string format = "json";
  std::string coefficients = "trivial";
  std::string on = "form";
  std::string density = "1";
  std::uint64_t seed = 1;
  int trials = 100;
  std::vector<std::string> specs;
};

struct Report {
  Json data = Json::object();
  std::string text;
  int exit_code = 0;
};

struct LoadedSpec {
  std::string name;
  SpecPtr spec;
};

Json read_json_operand(const std::string& operand) {
  std::string text = operand;
  if (std::filesystem::is_regular_file(operand)) {
    std::ifstream in(operand);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError("operand '" + operand + "' is neither a file nor valid JSON: " + e.what());
  }
}

/// A spec operand is a JSON file path or the name of a built-in spec.
LoadedSpec load(const std::string& operand) {
  if (std::filesystem::is_regular_file(operand)) {
    const Json doc = read_json_operand(operand);
    const std::string name = doc.contains("name") && doc["name"].is_string()
                                 ? doc["name"].get<std::string>()
                                 : std::filesystem::path(operand).stem().string();
    return {name, spec_from_json(doc)};
  }
  for (const auto& b : builtin_documents()) {
    if (b.name == operand) return {b.name, spec_from_json(b.document)};
  }
  throw UsageError("spec '" + operand + "' is not a file or a built-in spec name");
}

void require_valid(const AlgebroidSpec& spec) {
  const ValidationReport report = validate(spec);
  if (!report.ok) throw ValidationError(report.identity, report.residual);
}

Truncation truncation(const Options& o) { return Truncation{o.max_poly_degree, o.max_frequency}; }

std::vector<int> degrees(const Options& o, int top) {
  if (o.degree == "all") {
    std::vector<int> all;
    for (int k = 0; k <= top; ++k) all.push_back(k);
    return all;
  }
  try {
    std::size_t used = 0;
    const int k = std::stoi(o.degree, &used);
    if (used != o.degree.size() || k < 0 || k > top) throw std::invalid_argument("range");
    return {k};
  } catch (const std::exception&) {
    throw UsageError("--degree must be 'all' or an integer in 0.." + std::to_string(top));
  }
}

Payload payload(const Options& o) {
  if (o.coefficients == "trivial") return Payload::Trivial;
  if (o.coefficients == "qa") return Payload::QA;
  throw UsageError("--coefficients must be trivial or qa");
}

const std::string& operand(const Options& o, std::size_t i, const char* what) {
  if (o.operands.at(i).empty()) throw UsageError(std::string("missing operand: ") + what);
  return o.operands[i];
}

Multivector read_multivector(const Options& o, std::size_t i, const char* what, FrameKind kind, const AlgebroidSpec& spec,
                             int fallback_degree = 0) {
  return multivector_from_json(read_json_operand(operand(o, i, what)), kind, spec.rank(), spec.chart(), fallback_degree);
}

Json mv_json(const Multivector& m) { return Json{{"degree", m.degree()}, {"terms", multivector_to_json(m)}, {"text", m.to_string()}}; }

Json matrix_json(const GaussianMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json dims_json(const CohomologyDims& d) {
  return Json{{"degree", d.degree}, {"dim", d.dim}, {"kernel", d.kernel}, {"image", d.image}, {"stabilized", d.stabilized}};
}

std::string dims_text(const CohomologyDims& d) {
  std::ostringstream out;
  out << "H^" << d.degree << ": dim " << d.dim << " (kernel " << d.kernel << ", image " << d.image << ")"
      << (d.stabilized ? " stabilized" : " not stabilized");
  return out.str();
}

Report identity_report(const std::vector<IdentityOutcome>& outcomes) {
  Report r;
  Json rows = Json::array();
  std::ostringstream text;
  int failed = 0;
  for (const auto& o : outcomes) {
    Json row{{"group", o.group}, {"identity", o.identity}, {"spec", o.spec}, {"trials", o.trials}, {"failures", o.failures}};
    if (!o.passed()) row["first_failure"] = o.first_failure;
    rows.push_back(row);
    text << (o.passed() ? "PASS " : "FAIL ") << o.spec << "  " << o.group << "/" << o.identity << "  " << o.trials - o.failures
         << "/" << o.trials;
    if (!o.passed()) text << "  " << o.first_failure;
    text << "\n";
    failed += o.passed() ? 0 : 1;
  }
  r.data["results"] = rows;
  r.data["checks"] = outcomes.size();
  r.data["failed"] = failed;
  text << outcomes.size() - failed << "/" << outcomes.size() << " checks passed\n";
  r.text = text.str();
  r.exit_code = failed == 0 ? 0 : 1;
  return r;
}

Report run_validate(const Options& o) {
  const LoadedSpec s = load(o.spec);
  const ValidationReport v = validate(*s.spec);
  Report r;
  r.data["valid"] = v.ok;
  r.data["origin"] = origin_name(s.spec->origin());
  r.data["rank"] = s.spec->rank();
  r.data["chart"] = chart_to_json(*s.spec->chart());
  if (!v.ok) r.data["violation"] = Json{{"identity", v.identity}, {"residual", v.residual}};
  r.text = v.ok ? "valid: " + s.name + " (" + origin_name(s.spec->origin()) + ", rank " + std::to_string(s.spec->rank()) + ")\n"
                : "invalid: " + v.identity + " has residual " + v.residual + "\n";
  r.exit_code = v.ok ? 0 : 1;
  return r;
}

Report run_d(const Options& o, const LoadedSpec& s) {
  const Multivector form = read_multivector(o, 0, "form", FrameKind::DualAlgebroid, *s.spec);
  const Payload p = payload(o);
  const Multivector result = p == Payload::Trivial ? d_A(*s.spec, form)
                                                   : extend_D(modular_class(s.spec), EValuedForm{form, Payload::QA}).form;
  Report r;
  r.data["coefficients"] = payload_name(p);
  r.data["result"] = mv_json(result);
  r.text = result.to_string() + "\n";
  return r;
}

Report run_schouten(const Options& o, const LoadedSpec& s) {
  const Multivector x = read_multivector(o, 0, "first multivector", FrameKind::Algebroid, *s.spec);
  const Multivector y = read_multivector(o, 1, "second multivector", FrameKind::Algebroid, *s.spec);
  const Multivector result = schouten(*s.spec, x, y);
  Report r;
  r.data["result"] = mv_json(result);
  r.text = result.to_string() + "\n";
  return r;
}

Report run_lie(const Options& o, const LoadedSpec& s) {
  const Multivector a = read_multivector(o, 0, "section", FrameKind::Algebroid, *s.spec, 1);
  if (a.degree() != 1) throw UsageError("the first operand of lie must be a section (degree 1)");
  Multivector result;
  if (o.on == "form") {
    result = lie_derivative_form(*s.spec, a, read_multivector(o, 1, "form", FrameKind::DualAlgebroid, *s.spec));
  } else if (o.on == "multivector") {
    result = lie_derivative_mv(*s.spec, a, read_multivector(o, 1, "multivector", FrameKind::Algebroid, *s.spec));
  } else {
    throw UsageError("--on must be form or multivector");
  }
  Report r;
  r.data["result"] = mv_json(result);
  r.text = result.to_string() + "\n";
  return r;
}

Report run_modular(const Options&, const LoadedSpec& s) {
  const LineRep qa = modular_class(s.spec);
  Report r;
  r.data["theta"] = mv_json(qa.theta);
  r.text = "theta = " + qa.theta.to_string() + "\n";
  if (s.spec->origin() == AlgebroidOrigin::LieAlgebra) {
    const Multivector chi = adjoint_character(*s.spec);
    r.data["adjoint_character"] = mv_json(chi);
    r.text += "adjoint character = " + chi.to_string() + "\n";
  }
  if (s.spec->origin() == AlgebroidOrigin::CotangentPoisson) {
    const LineRep p = poisson_modular_class(s.spec);
    r.data["poisson_theta"] = mv_json(p.theta);
    r.text += "theta_P = " + p.theta.to_string() + "\n";
  }
  return r;
}

Report run_poisson_modular(const Options& o, const LoadedSpec& s) {
  if (s.spec->origin() != AlgebroidOrigin::CotangentPoisson) throw UsageError("poisson-modular needs a cotangent_poisson spec");
  const Scalar density = parse_scalar(o.density, s.spec->chart());
  const Multivector w = poisson_modular_vf(*s.spec->poisson(), density);
  const Multivector theta0 = theta_zero(*s.spec, density);
  const LineRep p = poisson_modular_class(s.spec);
  const LineRep qa = modular_class(s.spec);
  const bool twice = qa.theta == p.theta * Scalar(2);
  const bool matches = w == theta0;
  Report r;
  r.data["density"] = density.to_string();
  r.data["modular_vector_field"] = mv_json(w);
  r.data["theta_zero"] = mv_json(theta0);
  r.data["theta_P"] = mv_json(p.theta);
  r.data["theta_cotangent"] = mv_json(qa.theta);
  r.data["vector_field_matches_theta_zero"] = matches;
  r.data["cotangent_is_twice_poisson"] = twice;
  r.text = "w_mu = " + w.to_string() + "\ntheta_P = " + p.theta.to_string() + "\ntheta_T*P = " + qa.theta.to_string() +
           "\nw_mu == theta_0: " + (matches ? "yes" : "no") + "\ntheta_T*P == 2 theta_P: " + (twice ? "yes" : "no") + "\n";
  r.exit_code = twice && matches ? 0 : 1;
  return r;
}

Report run_sqrt_check(const Options&, const LoadedSpec& s) {
  const LineRep qa = modular_class(s.spec);
  const LineRep root = sqrt_rep(qa);
  const bool ok = tensor_rep(root, root).theta == qa.theta && d_A(*s.spec, root.theta).is_zero();
  Report r;
  r.data["theta"] = mv_json(qa.theta);
  r.data["sqrt_theta"] = mv_json(root.theta);
  r.data["square_matches"] = ok;
  r.text = "theta = " + qa.theta.to_string() + "\nsqrt theta = " + root.theta.to_string() + "\nsquare matches: " +
           (ok ? "yes" : "no") + "\n";
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report run_cohomology(const Options& o, const LoadedSpec& s) {
  const GradedOperator op = algebroid_operator(s.spec, payload(o));
  Report r;
  r.data["coefficients"] = o.coefficients;
  r.data["truncation"] = Json{{"max_poly_degree", o.max_poly_degree}, {"max_frequency", o.max_frequency}};
  r.data["growth"] = Json{{"poly", op.poly_growth}, {"frequency", op.frequency_growth}};
  Json rows = Json::array();
  for (int k : degrees(o, s.spec->rank())) {
    const CohomologyDims d = cohomology_dims(op, truncation(o), k);
    rows.push_back(dims_json(d));
    r.text += dims_text(d) + "\n";
  }
  r.data["cohomology"] = rows;
  return r;
}

Report run_pairing(const Options& o, const LoadedSpec& s) {
  Report r;
  Json rows = Json::array();
  for (int k : degrees(o, s.spec->rank())) {
    const PairingResult p = pairing_matrix(s.spec, k, truncation(o));
    rows.push_back(Json{{"degree", k},
                        {"rows", p.matrix.rows()},
                        {"cols", p.matrix.cols()},
                        {"rank", p.rank},
                        {"nonsingular", p.nonsingular},
                        {"well_defined", p.well_defined},
                        {"matrix", matrix_json(p.matrix)}});
    std::ostringstream line;
    line << "k=" << k << ": " << p.matrix.rows() << "x" << p.matrix.cols() << " rank " << p.rank
         << (p.nonsingular ? " nonsingular" : " singular") << (p.well_defined ? "" : " NOT well defined") << "\n";
    r.text += line.str();
    if (!p.well_defined) r.exit_code = 1;
  }
  r.data["pairing"] = rows;
  return r;
}

Report run_stokes(const Options& o, const LoadedSpec& s) {
  RandomSource rs(o.seed);
  Report r;
  int residual_failures = 0, integral_failures = 0, integrals = 0;
  for (int t = 0; t < o.trials; ++t) {
    const StokesResult result = stokes_check(s.spec, rs.form(*s.spec, s.spec->rank() - 1));
    residual_failures += result.residual.is_zero() ? 0 : 1;
    if (result.integral) {
      ++integrals;
      integral_failures += result.integral->is_zero() ? 0 : 1;
    }
  }
  r.data["trials"] = o.trials;
  r.data["residual_failures"] = residual_failures;
  r.data["integral_checked"] = integrals > 0;
  r.data["integral_failures"] = integral_failures;
  r.text = "Stokes identity: " + std::to_string(o.trials - residual_failures) + "/" + std::to_string(o.trials) + " zero residuals\n";
  r.text += integrals > 0 ? "integral: " + std::to_string(integrals - integral_failures) + "/" + std::to_string(integrals) + " zero\n"
                          : "integral: skipped (non-compact base)\n";
  r.exit_code = residual_failures + integral_failures == 0 ? 0 : 1;
  return r;
}

Report run_probe(const Options& o, const LoadedSpec& s) {
  const ProbeReport p = degeneracy_probe(s.spec, truncation(o));
  Report r;
  r.data["truncation"] = Json{{"max_poly_degree", o.max_poly_degree}, {"max_frequency", o.max_frequency}};
  r.data["h0"] = dims_json(p.h0);
  r.data["top_qa"] = dims_json(p.top);
  r.text = "H^0(A): " + dims_text(p.h0) + "\nH^r(A, Q_A): " + dims_text(p.top) + "\n";
  return r;
}

Report run_group_check(const Options& o, const LoadedSpec& s, const std::string& group) {
  return identity_report(run_identities(s.spec, s.name, o.seed, o.trials, IdentityFilter{{}, {group}}));
}

int emit(const Report& r, const Options& o, const std::string& command, const std::string& spec_name) {
  if (o.format == "json") {
    Json out{{"schema", kSchema}, {"command", command}};
    if (!spec_name.empty()) out["spec"] = spec_name;
    for (const auto& [key, value] : r.data.items()) out[key] = value;
    out["ok"] = r.exit_code == 0;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

int emit_error(const Options& o, const std::string& command, const std::string& kind, const std::string& message, int code) {
  if (o.format == "json") {
    std::cout << Json{{"schema", kSchema}, {"command", command}, {"ok", false}, {"error", Json{{"kind", kind}, {"message", message}}}}.dump(2)
              << "\n";
  }
  std::cerr << "lamod " << command << ": " << kind << ": " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic calculus on Lie algebroids"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool needs_spec = true) {
    if (needs_spec) sub->add_option("spec", o.spec, "spec JSON file or built-in spec name")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_truncation = [&o](CLI::App* sub) {
    sub->add_option("--max-poly-degree", o.max_poly_degree, "bound on total polynomial degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-frequency", o.max_frequency, "bound on |Fourier frequency|")->check(CLI::NonNegativeNumber);
  };
  auto add_random = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for randomized trials");
    sub->add_option("--trials", o.trials, "randomized trials per identity")->check(CLI::PositiveNumber);
  };

  std::map<std::string, std::function<Report(const Options&, const LoadedSpec&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s);
    handlers[name] = handler;
    return s;
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check the algebroid axioms of a spec");
  add_common(validate_cmd);

  auto* d_cmd = sub("d", "apply d_A (or D on Q_A-valued forms) to a form", run_d);
  d_cmd->add_option("form", o.operands[0], "form as JSON or a JSON file")->required();
  d_cmd->add_option("--coefficients", o.coefficients)->check(CLI::IsMember({"trivial", "qa"}));

  auto* schouten_cmd = sub("schouten", "Schouten bracket of two multivectors", run_schouten);
  schouten_cmd->add_option("first", o.operands[0], "multivector as JSON or a JSON file")->required();
  schouten_cmd->add_option("second", o.operands[1], "multivector as JSON or a JSON file")->required();

  auto* lie_cmd = sub("lie", "Lie derivative along a section", run_lie);
  lie_cmd->add_option("section", o.operands[0], "section as JSON or a JSON file")->required();
  lie_cmd->add_option("operand", o.operands[1], "form or multivector as JSON or a JSON file")->required();
  lie_cmd->add_option("--on", o.on, "operand type")->check(CLI::IsMember({"form", "multivector"}));

  sub("modular", "cocycle of Q_A at its standard section", run_modular);
  auto* pm_cmd = sub("poisson-modular", "modular vector field and the two Poisson modular cocycles", run_poisson_modular);
  pm_cmd->add_option("--density", o.density, "density of the volume form, a scalar expression");
  sub("sqrt-check", "square root of Q_A squares back to Q_A", run_sqrt_check);

  auto* coh_cmd = sub("cohomology", "truncated cohomology dimensions", run_cohomology);
  add_truncation(coh_cmd);
  coh_cmd->add_option("--degree", o.degree, "degree or 'all'");
  coh_cmd->add_option("--coefficients", o.coefficients)->check(CLI::IsMember({"trivial", "qa"}));

  auto* pairing_cmd = sub("pairing", "matrix of the integration pairing on representatives", run_pairing);
  add_truncation(pairing_cmd);
  pairing_cmd->add_option("--degree", o.degree, "degree or 'all'");

  auto* stokes_cmd = sub("stokes", "Stokes identity and integral on random top-minus-one cochains", run_stokes);
  add_random(stokes_cmd);

  auto* probe_cmd = sub("probe", "dim H^0(A) and dim H^r(A, Q_A) at a truncation", run_probe);
  add_truncation(probe_cmd);

  auto* hom_cmd = sub("homology-check", "Poisson homology identities", [](const Options& opts, const LoadedSpec& s) {
    return run_group_check(opts, s, "homology");
  });
  add_random(hom_cmd);
  auto* hty_cmd = sub("homotopy-check", "representation up to homotopy identities", [](const Options& opts, const LoadedSpec& s) {
    return run_group_check(opts, s, "homotopy");
  });
  add_random(hty_cmd);

  CLI::App* suite_cmd = app.add_subcommand("identity-suite", "every identity on every built-in spec");
  add_common(suite_cmd, false);
  add_random(suite_cmd);
  suite_cmd->add_option("--spec", o.specs, "restrict to these built-in specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "validate") return emit(run_validate(o), o, command, o.spec);
    if (command == "identity-suite") {
      for (const auto& name : o.specs) load(name);
      return emit(identity_report(run_identity_suite(o.seed, o.trials, o.specs)), o, command, "");
    }
    const LoadedSpec s = load(o.spec);
    require_valid(*s.spec);
    return emit(handlers.at(command)(o, s), o, command, s.name);
  } catch (const UsageError& e) {
    return emit_error(o, command, "usage", e.what(), 2);
  } catch (const ParseError& e) {
    return emit_error(o, command, "parse", e.what(), 2);
  } catch (const UnknownCoordinate& e) {
    return emit_error(o, command, "parse", e.what(), 2);
  } catch (const SpecError& e) {
    return emit_error(o, command, "spec", e.what(), 2);
  } catch (const ValidationError& e) {
    return emit_error(o, command, "validation", e.what(), 1);
  } catch (const Indivisible& e) {
    return emit_error(o, command, "indivisible", e.what(), 1);
  } catch (const NonCompactError& e) {
    return emit_error(o, command, "non-compact", e.what(), 1);
  } catch (const TruncationTooSmall& e) {
    return emit_error(o, command, "truncation-too-small", e.what(), 1);
  } catch (const Error& e) {
    return emit_error(o, command, "math", e.what(), 1);
  }
}
