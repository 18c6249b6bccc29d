#include "lamod/identities.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>

#include "lamod/builtin.hpp"
#include "lamod/duality.hpp"
#include "lamod/homology.hpp"
#include "lamod/homotopy.hpp"
#include "lamod/parser.hpp"
#include "lamod/random.hpp"

namespace lamod {

namespace {

using Failure = std::optional<std::string>;

/// Everything a check needs about the spec under test.
struct Context {
  SpecPtr spec;
  SpecPtr tangent;  // tangent algebroid of the base chart (null over a point)
  LineRep qa;
  int r = 0;
  int n = 0;
  ChartPtr chart;
  bool cotangent = false;
  bool compact = false;
};

struct Check {
  std::string group;
  std::string name;
  std::function<bool(const Context&)> applies;
  std::function<Failure(const Context&, RandomSource&)> run;
  bool randomized = true;
};

template <typename T>
Failure differ(const T& lhs, const T& rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs " + lhs.to_string() + " != rhs " + rhs.to_string();
}

template <typename T>
Failure nonzero(const T& value) {
  if (value.is_zero()) return std::nullopt;
  return "residual " + value.to_string();
}

Failure first_of(std::initializer_list<Failure> failures) {
  for (const auto& f : failures) {
    if (f) return f;
  }
  return std::nullopt;
}

int sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

Multivector signed_mv(int s, const Multivector& m) { return s > 0 ? m : -m; }

Scalar fourier_part(const Scalar& s) {
  Scalar out(Gaussian(), s.chart());
  const std::size_t m = s.chart() ? s.chart()->poly_count() : 0;
  for (const auto& [mono, c] : s.terms()) {
    bool poly = false;
    for (std::size_t i = 0; i < m; ++i) poly = poly || mono[i] != 0;
    if (!poly) out += Scalar::monomial(s.chart(), mono, c);
  }
  return out;
}

Scalar nonzero_scalar(RandomSource& rs, const ChartPtr& chart) {
  for (;;) {
    Scalar s = rs.scalar(chart);
    if (!s.is_zero()) return s;
  }
}

Scalar nonzero_constant(RandomSource& rs) { return Scalar(rs.coefficient()); }

Multivector rand_mv(RandomSource& rs, const Context& c, int degree) {
  return rs.multivector(FrameKind::Algebroid, c.r, degree, c.chart);
}

Multivector rand_form(RandomSource& rs, const Context& c, int degree) {
  return rs.multivector(FrameKind::DualAlgebroid, c.r, degree, c.chart);
}

Multivector rand_tangent(RandomSource& rs, const Context& c, int degree) {
  return rs.multivector(FrameKind::Tangent, c.n, degree, c.chart);
}

const Multivector& poisson(const Context& c) { return *c.spec->poisson(); }

/// Forms on the base, seen as multivectors of the cotangent algebroid and back.
Multivector as_cot_section(const Multivector& form) { return form.relabeled(FrameKind::Algebroid); }
Multivector as_form(const Multivector& cot_section) { return cot_section.relabeled(FrameKind::Cotangent); }

Multivector tangent_schouten(const Context& c, const Multivector& u, const Multivector& v) {
  return schouten_leibniz(*c.tangent, u.relabeled(FrameKind::Algebroid), v.relabeled(FrameKind::Algebroid))
      .relabeled(FrameKind::Tangent);
}

Multivector qa_D(const Context& c, const Multivector& form) { return extend_D(c.qa, EValuedForm{form, Payload::QA}).form; }

bool always(const Context&) { return true; }
bool has_base(const Context& c) { return c.n > 0; }
bool is_cot(const Context& c) { return c.cotangent; }
bool is_compact(const Context& c) { return c.compact; }
bool has_torus(const Context& c) { return c.chart->torus_count() > 0; }

std::vector<Check> make_checks() {
  std::vector<Check> checks;
  std::string group;
  auto add = [&checks, &group](std::string name, std::function<bool(const Context&)> applies,
                               std::function<Failure(const Context&, RandomSource&)> run, bool randomized = true) {
    checks.push_back({group, std::move(name), std::move(applies), std::move(run), randomized});
  };

  // Coefficient ring.
  group = "ring";
  add("ring axioms", always, [](const Context& c, RandomSource& rs) {
    const Scalar f = rs.scalar(c.chart), g = rs.scalar(c.chart), h = rs.scalar(c.chart);
    return first_of({differ((f + g) + h, f + (g + h)), differ((f * g) * h, f * (g * h)), differ(f * (g + h), f * g + f * h),
                     differ(f * g, g * f), differ(f + g, g + f)});
  });
  add("derivative Leibniz", has_base, [](const Context& c, RandomSource& rs) -> Failure {
    const Scalar f = rs.scalar(c.chart), g = rs.scalar(c.chart);
    for (int s = 0; s < c.n; ++s) {
      if (auto e = differ((f * g).derivative(s), f.derivative(s) * g + f * g.derivative(s))) return e;
    }
    return std::nullopt;
  });
  add("torus integral of derivative", has_torus, [](const Context& c, RandomSource& rs) -> Failure {
    const Scalar f = fourier_part(rs.scalar(c.chart, 4));
    for (std::size_t s = c.chart->poly_count(); s < c.chart->dimension(); ++s) {
      if (auto e = nonzero(torus_integral(f.derivative(s)))) return e;
    }
    return std::nullopt;
  });
  add("render round trip", always, [](const Context& c, RandomSource& rs) {
    const Scalar f = rs.scalar(c.chart, 4);
    return differ(parse_scalar(f.to_string(), c.chart), f);
  });

  // Exterior algebra.
  group = "exterior";
  add("wedge graded commutativity", always, [](const Context& c, RandomSource& rs) {
    const int p = rs.uniform(0, c.r), q = rs.uniform(0, c.r);
    const Multivector u = rand_form(rs, c, p), v = rand_form(rs, c, q);
    return differ(wedge(u, v), signed_mv(sign(p * q), wedge(v, u)));
  });
  add("wedge associativity", always, [](const Context& c, RandomSource& rs) {
    const Multivector u = rand_mv(rs, c, rs.uniform(0, 2)), v = rand_mv(rs, c, rs.uniform(0, 2)), w = rand_mv(rs, c, rs.uniform(0, 2));
    return differ(wedge(wedge(u, v), w), wedge(u, wedge(v, w)));
  });
  add("contraction identity", always, [](const Context& c, RandomSource& rs) {
    const int k = rs.uniform(0, c.r);
    const int p = rs.uniform(0, k);
    const Multivector xi = rand_form(rs, c, k), x = rand_mv(rs, c, p), y = rand_mv(rs, c, k - p);
    return differ(pair(contract(x, xi), y), pair(xi, wedge(x, y)));
  });

  // Structure data.
  group = "algebroid";
  add("validate", always, [](const Context& c, RandomSource&) -> Failure {
    const ValidationReport report = validate(*c.spec);
    if (report.ok) return std::nullopt;
    return report.identity + ": " + report.residual;
  }, false);
  add("anchor pushforward", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), b = rs.section(*c.spec);
    return differ(c.spec->anchor_of(bracket_sections(*c.spec, a, b)),
                  vector_field_bracket(c.spec->anchor_of(a), c.spec->anchor_of(b)));
  });
  add("derivation law", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), b = rs.section(*c.spec);
    const Scalar f = rs.scalar(c.chart);
    return differ(bracket_sections(*c.spec, a, f * b) - f * bracket_sections(*c.spec, a, b), c.spec->anchor_apply(a, f) * b);
  });

  // Differential calculus.
  group = "calculus";
  add("d_A squared", always, [](const Context& c, RandomSource& rs) {
    const Multivector xi = rand_form(rs, c, rs.uniform(0, c.r));
    return nonzero(d_A(*c.spec, d_A(*c.spec, xi)));
  });
  add("schouten antisymmetry", always, [](const Context& c, RandomSource& rs) {
    const int p = rs.uniform(0, c.r), q = rs.uniform(0, c.r);
    const Multivector x = rand_mv(rs, c, p), y = rand_mv(rs, c, q);
    return differ(schouten(*c.spec, x, y), -signed_mv(sign((p - 1) * (q - 1)), schouten(*c.spec, y, x)));
  });
  add("schouten Leibniz", always, [](const Context& c, RandomSource& rs) {
    const int p = rs.uniform(0, c.r), q = rs.uniform(0, c.r);
    const Multivector x = rand_mv(rs, c, p), y = rand_mv(rs, c, q), z = rand_mv(rs, c, rs.uniform(0, c.r));
    return differ(schouten(*c.spec, x, wedge(y, z)),
                  wedge(schouten(*c.spec, x, y), z) + signed_mv(sign((p - 1) * q), wedge(y, schouten(*c.spec, x, z))));
  });
  add("schouten routes agree", always, [](const Context& c, RandomSource& rs) {
    const Multivector x = rand_mv(rs, c, rs.uniform(0, c.r)), y = rand_mv(rs, c, rs.uniform(0, c.r));
    return differ(schouten(*c.spec, x, y), schouten_leibniz(*c.spec, x, y));
  });
  add("schouten in low degree", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), b = rs.section(*c.spec);
    const Scalar f = rs.scalar(c.chart);
    const Multivector fm = c.spec->scalar(FrameKind::Algebroid, f);
    return first_of({differ(schouten(*c.spec, a, fm), c.spec->scalar(FrameKind::Algebroid, c.spec->anchor_apply(a, f))),
                     differ(schouten(*c.spec, a, b), bracket_sections(*c.spec, a, b))});
  });
  add("Cartan formula", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), xi = rand_form(rs, c, rs.uniform(0, c.r));
    return differ(lie_derivative_form(*c.spec, a, xi),
                  d_A(*c.spec, contract(a, xi)) + contract(a, d_A(*c.spec, xi)));
  });
  add("Lie derivative duality", always, [](const Context& c, RandomSource& rs) {
    const int k = rs.uniform(0, c.r);
    const Multivector a = rs.section(*c.spec), xi = rand_form(rs, c, k), x = rand_mv(rs, c, k);
    return differ(pair(lie_derivative_form(*c.spec, a, xi), x) + pair(xi, lie_derivative_mv(*c.spec, a, x)),
                  c.spec->anchor_apply(a, pair(xi, x)));
  });
  add("L commutator on multivectors", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), b = rs.section(*c.spec), x = rand_mv(rs, c, rs.uniform(0, c.r));
    const AlgebroidSpec& s = *c.spec;
    return differ(lie_derivative_mv(s, bracket_sections(s, a, b), x),
                  lie_derivative_mv(s, a, lie_derivative_mv(s, b, x)) - lie_derivative_mv(s, b, lie_derivative_mv(s, a, x)));
  });
  add("L of fa on multivectors", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), x = rand_mv(rs, c, rs.uniform(0, c.r));
    const Scalar f = rs.scalar(c.chart);
    const Multivector df = d_A(*c.spec, c.spec->scalar(FrameKind::DualAlgebroid, f));
    return differ(lie_derivative_mv(*c.spec, f * a, x), f * lie_derivative_mv(*c.spec, a, x) - wedge(a, contract(df, x)));
  });
  add("L of fX on multivectors", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), x = rand_mv(rs, c, rs.uniform(0, c.r));
    const Scalar f = rs.scalar(c.chart);
    return differ(lie_derivative_mv(*c.spec, a, f * x), f * lie_derivative_mv(*c.spec, a, x) + c.spec->anchor_apply(a, f) * x);
  });
  add("L commutator on forms", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), b = rs.section(*c.spec), xi = rand_form(rs, c, rs.uniform(0, c.r));
    const AlgebroidSpec& s = *c.spec;
    return differ(lie_derivative_form(s, bracket_sections(s, a, b), xi),
                  lie_derivative_form(s, a, lie_derivative_form(s, b, xi)) - lie_derivative_form(s, b, lie_derivative_form(s, a, xi)));
  });
  add("L of fa on forms", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), xi = rand_form(rs, c, rs.uniform(0, c.r));
    const Scalar f = rs.scalar(c.chart);
    const Multivector df = d_A(*c.spec, c.spec->scalar(FrameKind::DualAlgebroid, f));
    return differ(lie_derivative_form(*c.spec, f * a, xi), f * lie_derivative_form(*c.spec, a, xi) + wedge(df, contract(a, xi)));
  });
  add("L of f xi on forms", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), xi = rand_form(rs, c, rs.uniform(0, c.r));
    const Scalar f = rs.scalar(c.chart);
    return differ(lie_derivative_form(*c.spec, a, f * xi), f * lie_derivative_form(*c.spec, a, xi) + c.spec->anchor_apply(a, f) * xi);
  });
  add("top degree L of fa", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), x = rand_mv(rs, c, c.r), xi = rand_form(rs, c, c.r);
    const Scalar f = rs.scalar(c.chart);
    const Scalar rf = c.spec->anchor_apply(a, f);
    return first_of({differ(lie_derivative_mv(*c.spec, f * a, x), f * lie_derivative_mv(*c.spec, a, x) - rf * x),
                     differ(lie_derivative_form(*c.spec, f * a, xi), f * lie_derivative_form(*c.spec, a, xi) + rf * xi)});
  });
  add("top degree L of f times", always, [](const Context& c, RandomSource& rs) {
    const Multivector a = rs.section(*c.spec), x = rand_mv(rs, c, c.r), xi = rand_form(rs, c, c.r);
    const Scalar f = rs.scalar(c.chart);
    const Scalar rf = c.spec->anchor_apply(a, f);
    return first_of({differ(lie_derivative_mv(*c.spec, a, f * x), f * lie_derivative_mv(*c.spec, a, x) + rf * x),
                     differ(lie_derivative_form(*c.spec, a, f * xi), f * lie_derivative_form(*c.spec, a, xi) + rf * xi)});
  });
  add("bracket of 1-forms", is_cot, [](const Context& c, RandomSource& rs) {
    const Multivector alpha = rs.multivector(FrameKind::Cotangent, c.n, 1, c.chart);
    const Multivector beta = rs.multivector(FrameKind::Cotangent, c.n, 1, c.chart);
    const Multivector& pi = poisson(c);
    const Multivector pa = poisson_anchor(pi, alpha), pb = poisson_anchor(pi, beta);
    const Multivector d_pi = de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, pair(wedge(alpha, beta), pi)));
    const Multivector exterior = d_pi + contract(pa, de_rham(beta)) - contract(pb, de_rham(alpha));
    auto lie = [&](const Multivector& v, const Multivector& form) {
      return lie_derivative_form(*c.tangent, v.relabeled(FrameKind::Algebroid), form.relabeled(FrameKind::DualAlgebroid))
          .relabeled(FrameKind::Cotangent);
    };
    const Multivector via_lie = -d_pi + lie(pa, beta) - lie(pb, alpha);
    const Multivector algebroid = as_form(bracket_sections(*c.spec, as_cot_section(alpha), as_cot_section(beta)));
    return first_of({differ(exterior, via_lie), differ(algebroid, exterior)});
  });
  add("hamiltonian field", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar f = rs.scalar(c.chart);
    const Multivector df = de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, f));
    return differ(poisson_anchor(poisson(c), df),
                  -tangent_schouten(c, poisson(c), Multivector::scalar(FrameKind::Tangent, c.n, f)));
  });
  add("bracket with df", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar f = rs.scalar(c.chart);
    const Multivector df = de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, f));
    const Multivector xi = rs.multivector(FrameKind::Cotangent, c.n, rs.uniform(0, std::min(2, c.n)), c.chart);
    const Multivector lhs = as_form(schouten(*c.spec, as_cot_section(df), as_cot_section(xi)));
    const Multivector field = poisson_anchor(poisson(c), df).relabeled(FrameKind::Algebroid);
    const Multivector rhs =
        lie_derivative_form(*c.tangent, field, xi.relabeled(FrameKind::DualAlgebroid)).relabeled(FrameKind::Cotangent);
    return differ(lhs, rhs);
  });

  // Representations and modular classes.
  group = "modular";
  add("D squared", always, [](const Context& c, RandomSource& rs) {
    return nonzero(qa_D(c, qa_D(c, rand_form(rs, c, rs.uniform(0, c.r)))));
  });
  add("D derivation rule", always, [](const Context& c, RandomSource& rs) {
    const int p = rs.uniform(0, c.r);
    const Multivector xi = rand_form(rs, c, p), eta = rand_form(rs, c, rs.uniform(0, c.r - p));
    return differ(qa_D(c, wedge(xi, eta)), wedge(d_A(*c.spec, xi), eta) + signed_mv(sign(p), wedge(xi, qa_D(c, eta))));
  });
  add("Q_A representation axioms", always, [](const Context& c, RandomSource& rs) {
    const AlgebroidSpec& s = *c.spec;
    const Multivector a = rs.section(s), b = rs.section(s);
    const Scalar f = rs.scalar(c.chart), g = rs.scalar(c.chart);
    auto D = [&](const Multivector& x, const Scalar& h) { return qa_rep_apply(s, x, h); };
    return first_of({differ(D(f * a, g), f * D(a, g)), differ(D(a, f * g), f * D(a, g) + s.anchor_apply(a, f) * g),
                     differ(D(bracket_sections(s, a, b), g), D(a, D(b, g)) - D(b, D(a, g)))});
  });
  add("cocycle closed", always, [](const Context& c, RandomSource&) -> Failure {
    if (auto e = nonzero(d_A(*c.spec, c.qa.theta))) return e;
    if (c.cotangent) return nonzero(d_A(*c.spec, poisson_modular_class(c.spec).theta));
    return std::nullopt;
  }, false);
  add("tensor additivity", always, [](const Context& c, RandomSource& rs) {
    const AlgebroidSpec& s = *c.spec;
    const LineRep exact_rep = make_line_rep(c.spec, d_A(s, s.scalar(FrameKind::DualAlgebroid, rs.scalar(c.chart))), "custom");
    const LineRep product = tensor_rep(c.qa, exact_rep);
    const Multivector a = rs.section(s);
    const Scalar f1 = rs.scalar(c.chart), f2 = rs.scalar(c.chart);
    auto D = [&](const LineRep& rep, const Scalar& f) {
      return pair(rep.theta, a) * f + s.anchor_apply(a, f);
    };
    return first_of({differ(D(product, f1 * f2), D(c.qa, f1) * f2 + f1 * D(exact_rep, f2)),
                     differ(tensor_rep(c.qa, trivial_rep(c.spec)).theta, c.qa.theta)});
  });
  add("square root squares back", always, [](const Context& c, RandomSource&) -> Failure {
    const LineRep root = sqrt_rep(c.qa);
    return differ(tensor_rep(root, root).theta, c.qa.theta);
  }, false);
  add("three canonical formulas", is_cot, [](const Context& c, RandomSource& rs) {
    const Multivector alpha = rs.section(*c.spec);
    const CanonicalValues v = canonical_rep_values(*c.spec, alpha, nonzero_scalar(rs, c.chart));
    return first_of({differ(v.bracket_form, v.lie_form), differ(v.lie_form, v.wedge_form)});
  });
  add("canonical representation axioms", is_cot, [](const Context& c, RandomSource& rs) {
    const AlgebroidSpec& s = *c.spec;
    const Multivector a = rs.section(s), b = rs.section(s);
    const Scalar f = rs.scalar(c.chart), g = rs.scalar(c.chart);
    auto D = [&](const Multivector& x, const Scalar& h) { return canonical_rep_cotangent(s, x, h); };
    return first_of({differ(D(f * a, g), f * D(a, g)), differ(D(a, f * g), f * D(a, g) + s.anchor_apply(a, f) * g),
                     differ(D(bracket_sections(s, a, b), g), D(a, D(b, g)) - D(b, D(a, g))),
                     differ(D(as_cot_section(de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, f))), g),
                            vector_field_apply(poisson_anchor(poisson(c), de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, f))), g) +
                                g * divergence(poisson_anchor(poisson(c), de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, f)))))});
  });
  add("cotangent modular class is twice the Poisson class", is_cot, [](const Context& c, RandomSource&) {
    return differ(c.qa.theta, poisson_modular_class(c.spec).theta * Scalar(2));
  }, false);
  add("modular vector field bracket", is_cot, [](const Context& c, RandomSource& rs) {
    const Multivector& pi = poisson(c);
    const Multivector w = poisson_modular_vf(pi);
    const Multivector alpha = de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, rs.scalar(c.chart)));
    const Multivector beta = de_rham(Multivector::scalar(FrameKind::Cotangent, c.n, rs.scalar(c.chart)));
    const Multivector bracket = as_form(bracket_sections(*c.spec, as_cot_section(alpha), as_cot_section(beta)));
    return differ(pair(bracket, w), vector_field_apply(poisson_anchor(pi, alpha), pair(beta, w)) -
                                        vector_field_apply(poisson_anchor(pi, beta), pair(alpha, w)));
  });
  add("modular vector field matches theta_0", is_cot, [](const Context& c, RandomSource&) {
    return differ(poisson_modular_vf(poisson(c)), theta_zero(*c.spec));
  }, false);

  // Poisson homology.
  group = "homology";
  add("tau intertwines delta' and the Koszul boundary", is_cot, [](const Context& c, RandomSource& rs) {
    const int k = rs.uniform(0, c.n);
    const Multivector v = rand_tangent(rs, c, k);
    const Scalar density = nonzero_scalar(rs, c.chart);
    return differ(tau_map(delta_prime(*c.spec, v, density)),
                  signed_mv(sign(k + 1), koszul_boundary(poisson(c), tau_map(v, density))));
  });
  add("Koszul boundary squared", is_cot, [](const Context& c, RandomSource& rs) {
    const Multivector form = rs.multivector(FrameKind::Cotangent, c.n, rs.uniform(0, c.n), c.chart);
    return nonzero(koszul_boundary(poisson(c), koszul_boundary(poisson(c), form)));
  });
  add("delta' squared", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar density = nonzero_scalar(rs, c.chart);
    const Multivector v = rand_tangent(rs, c, rs.uniform(0, c.n));
    // delta' returns the coefficient against the coordinate volume, so the second step uses density 1.
    return nonzero(delta_prime(*c.spec, delta_prime(*c.spec, v, density)));
  });
  add("b squared", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar c0 = nonzero_constant(rs);
    return nonzero(b_operator(c0, b_operator(c0, rand_tangent(rs, c, rs.uniform(0, c.n)))));
  });
  add("b Leibniz", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar c0 = nonzero_constant(rs);
    const int p = rs.uniform(0, c.n);
    const Multivector v1 = rand_tangent(rs, c, p), v2 = rand_tangent(rs, c, rs.uniform(0, c.n - p));
    return differ(b_operator(c0, wedge(v1, v2)),
                  wedge(b_operator(c0, v1), v2) + signed_mv(sign(p), wedge(v1, b_operator(c0, v2))) +
                      signed_mv(sign(p), tangent_schouten(c, v1, v2)));
  });
  add("b of pi is theta_0", is_cot, [](const Context& c, RandomSource& rs) {
    const Scalar c0 = nonzero_constant(rs);
    return differ(b_operator(c0, poisson(c)), theta_zero(*c.spec, c0));
  });
  add("theta_0 rewriting", is_cot, [](const Context& c, RandomSource& rs) {
    const Multivector& pi = poisson(c);
    const Multivector v = rand_tangent(rs, c, rs.uniform(0, c.n));
    const Scalar one(Gaussian(1), c.chart);
    const Multivector lhs = b_operator(one, wedge(v, pi)) - wedge(b_operator(one, v), pi);
    const Multivector rhs = wedge(theta_zero(*c.spec), v) + tangent_schouten(c, pi, v);
    return differ(tau_map(lhs), tau_map(rhs));
  });

  // Integration and duality.
  group = "duality";
  add("Stokes identity", always, [](const Context& c, RandomSource& rs) {
    return nonzero(stokes_check(c.spec, rand_form(rs, c, c.r - 1)).residual);
  });
  add("Stokes integral", is_compact, [](const Context& c, RandomSource& rs) -> Failure {
    const StokesResult result = stokes_check(c.spec, rand_form(rs, c, c.r - 1));
    if (!result.integral) return "no integral on a compact base";
    return nonzero(*result.integral);
  });
  add("pairing adjointness", is_compact, [](const Context& c, RandomSource& rs) {
    const int k = rs.uniform(1, c.r);
    return nonzero(adjointness_check(c.spec, rand_form(rs, c, k - 1), rand_form(rs, c, c.r - k)));
  });
  add("Koszul boundary adjointness", [](const Context& c) { return c.cotangent && c.compact; },
      [](const Context& c, RandomSource& rs) {
        const int p = rs.uniform(1, c.n);
        const Multivector alpha = rs.multivector(FrameKind::Cotangent, c.n, p, c.chart);
        const Multivector beta = rs.multivector(FrameKind::Cotangent, c.n, c.n + 1 - p, c.chart);
        const Multivector& pi = poisson(c);
        const Scalar first = integrate_pairing(koszul_boundary(pi, alpha), beta);
        const Scalar second = integrate_pairing(alpha, koszul_boundary(pi, beta));
        return nonzero(first + (sign(p - 1) > 0 ? second : -second));
      });

  // Representation up to homotopy on TP + A.
  group = "homotopy";
  auto graded = [](const Context& c, RandomSource& rs) {
    return GradedSection{rand_tangent(rs, c, 1), rs.section(*c.spec)};
  };
  add("homotopy relation", always, [graded](const Context& c, RandomSource& rs) -> Failure {
    const GradedSection r = check_one_prime(*c.spec, rs.section(*c.spec), rs.scalar(c.chart), graded(c, rs));
    if (r.is_zero()) return std::nullopt;
    return "residual " + r.even.to_string() + " | " + r.odd.to_string();
  });
  add("adjoint action is a chain map", always, [graded](const Context& c, RandomSource& rs) -> Failure {
    const Multivector a = rs.section(*c.spec);
    const GradedSection s = graded(c, rs);
    const GradedSection r =
        graded_boundary(*c.spec, adjoint_D(*c.spec, a, s)) - adjoint_D(*c.spec, a, graded_boundary(*c.spec, s));
    if (r.is_zero()) return std::nullopt;
    return "residual " + r.even.to_string() + " | " + r.odd.to_string();
  });
  add("adjoint action axioms", always, [graded](const Context& c, RandomSource& rs) -> Failure {
    const AlgebroidSpec& s = *c.spec;
    const Multivector a = rs.section(s), b = rs.section(s);
    const Scalar f = rs.scalar(c.chart);
    const GradedSection x = graded(c, rs);
    const GradedSection leibniz = adjoint_D(s, a, f * x) - f * adjoint_D(s, a, x) - s.anchor_apply(a, f) * x;
    const GradedSection flat = adjoint_D(s, bracket_sections(s, a, b), x) - adjoint_D(s, a, adjoint_D(s, b, x)) +
                               adjoint_D(s, b, adjoint_D(s, a, x));
    if (!leibniz.is_zero()) return "Leibniz residual " + leibniz.even.to_string() + " | " + leibniz.odd.to_string();
    if (!flat.is_zero()) return "flatness residual " + flat.even.to_string() + " | " + flat.odd.to_string();
    return std::nullopt;
  });
  add("determinant representation is the modular class", always, [](const Context& c, RandomSource&) {
    return differ(determinant_rep(c.spec).theta, c.qa.theta);
  }, false);
  add("trace cancellation", always, [](const Context& c, RandomSource& rs) {
    return nonzero(trace_K(*c.spec, rs.section(*c.spec), rs.scalar(c.chart)).difference);
  });
  return checks;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = make_checks();
  return all;
}

std::uint64_t mix(std::uint64_t seed, const std::string& a, const std::string& b) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char ch : a + "/" + b) h = (h ^ static_cast<unsigned char>(ch)) * 0x100000001b3ULL;
  return h;
}

std::vector<IdentityOutcome> run_checks(const SpecPtr& spec, const std::string& label, std::uint64_t seed, int trials,
                                        const IdentityFilter& filter) {
  Context c;
  c.spec = spec;
  c.chart = spec->chart();
  c.r = spec->rank();
  c.n = spec->base_dimension();
  c.tangent = c.n > 0 ? build_tangent(c.chart) : nullptr;
  c.qa = modular_class(spec);
  c.cotangent = spec->origin() == AlgebroidOrigin::CotangentPoisson;
  c.compact = c.chart->is_compact();

  auto wanted = [](const std::vector<std::string>& list, const std::string& item) {
    return list.empty() || std::find(list.begin(), list.end(), item) != list.end();
  };
  std::vector<IdentityOutcome> out;
  for (const Check& check : checks()) {
    if (!wanted(filter.identities, check.name) || !wanted(filter.groups, check.group) || !check.applies(c)) continue;
    IdentityOutcome outcome{check.group, check.name, label, check.randomized ? trials : 1, 0, {}};
    RandomSource rs(mix(seed, label, check.name));
    for (int t = 0; t < outcome.trials; ++t) {
      Failure failure;
      try {
        failure = check.run(c, rs);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (failure) {
        if (outcome.failures == 0) outcome.first_failure = *failure;
        ++outcome.failures;
      }
    }
    out.push_back(std::move(outcome));
  }
  return out;
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const Check& c : checks()) names.push_back(c.name);
  return names;
}

std::vector<std::string> identity_groups() {
  std::vector<std::string> groups;
  for (const Check& c : checks()) {
    if (std::find(groups.begin(), groups.end(), c.group) == groups.end()) groups.push_back(c.group);
  }
  return groups;
}

std::vector<IdentityOutcome> run_identities(const SpecPtr& spec, const std::string& label, std::uint64_t seed, int trials,
                                            const IdentityFilter& filter) {
  return run_checks(spec, label, seed, trials, filter);
}

std::vector<IdentityOutcome> run_identity_suite(std::uint64_t seed, int trials, const std::vector<std::string>& specs,
                                                const IdentityFilter& filter) {
  std::vector<std::string> names = specs;
  if (names.empty()) {
    for (const auto& b : builtin_documents()) names.push_back(b.name);
  }
  checks();
  std::vector<std::future<std::vector<IdentityOutcome>>> jobs;
  for (const std::string& name : names) {
    jobs.push_back(std::async(std::launch::async, [=] { return run_checks(builtin_spec(name), name, seed, trials, filter); }));
  }
  std::vector<IdentityOutcome> out;
  for (auto& job : jobs) {
    for (auto& o : job.get()) out.push_back(std::move(o));
  }
  return out;
}

}  // namespace lamod
