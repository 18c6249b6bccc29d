#include "lamod/calculus.hpp"

#include "lamod/error.hpp"

namespace lamod {

std::string payload_name(Payload payload) {
  switch (payload) {
    case Payload::Trivial: return "trivial";
    case Payload::QA: return "QA";
    case Payload::Canonical: return "canonical";
    case Payload::Custom: return "custom";
  }
  return "?";
}

namespace {

void require(const AlgebroidSpec& spec, const Multivector& m, FrameKind kind, const char* what) {
  if (m.kind() != kind || m.rank() != spec.rank()) {
    throw KindMismatch(std::string(what) + " expects a " + kind_name(kind) + " element of rank " + std::to_string(spec.rank()));
  }
}

/// xi(e_m ^ e_rest) for a form xi and a frame index m outside `rest`.
Scalar evaluate_with(const Multivector& xi, int m, IndexSet rest) {
  const IndexSet e = IndexSet{1} << m;
  if (rest & e) return Scalar();
  const Scalar c = xi.coefficient(rest | e);
  return index_set::wedge_sign(e, rest) > 0 ? c : -c;
}

Scalar scalar_part(const Multivector& m) { return m.degree() == 0 ? m.coefficient(0) : Scalar(); }

bool is_atom(const Multivector& m) {
  if (m.degree() == 0) return true;
  return m.degree() == 1 && m.terms().size() == 1 && m.terms().begin()->second == Scalar(1);
}

Multivector bracket_atoms(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y) {
  if (x.degree() == 1 && y.degree() == 1) return bracket_sections(spec, x, y);
  if (x.degree() == 1 && y.degree() == 0) return spec.scalar(FrameKind::Algebroid, spec.anchor_apply(x, scalar_part(y)));
  if (x.degree() == 0 && y.degree() == 1) return spec.scalar(FrameKind::Algebroid, -spec.anchor_apply(y, scalar_part(x)));
  return spec.zero(FrameKind::Algebroid, -1);
}

Multivector bracket_terms(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y);

/// [x, y] for single-term x and y.
Multivector bracket_monomials(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y) {
  const int p = x.degree();
  const int q = y.degree();
  if (!is_atom(y)) {
    const auto& [set, coef] = *y.terms().begin();
    if (!(coef == Scalar(1))) {
      // [x, g ^ B] = [x, g] ^ B + g [x, B]
      const Multivector g = spec.scalar(FrameKind::Algebroid, coef);
      const Multivector b = Multivector::from_set(FrameKind::Algebroid, spec.rank(), set);
      return wedge(bracket_monomials(spec, x, g), b) + coef * bracket_monomials(spec, x, b);
    }
    // [x, e_j ^ B] = [x, e_j] ^ B + (-1)^{p-1} e_j ^ [x, B]
    const IndexSet first = set & (~set + 1);
    const Multivector a = Multivector::from_set(FrameKind::Algebroid, spec.rank(), first);
    const Multivector b = Multivector::from_set(FrameKind::Algebroid, spec.rank(), set & ~first);
    const Multivector tail = wedge(a, bracket_monomials(spec, x, b));
    return wedge(bracket_monomials(spec, x, a), b) + ((p - 1) % 2 == 0 ? tail : -tail);
  }
  if (is_atom(x)) return bracket_atoms(spec, x, y);
  // [x, y] = -(-1)^{(p-1)(q-1)} [y, x]
  const Multivector swapped = bracket_monomials(spec, y, x);
  return ((p - 1) * (q - 1)) % 2 == 0 ? -swapped : swapped;
}

Multivector bracket_terms(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y) {
  Multivector out = spec.zero(FrameKind::Algebroid, x.degree() + y.degree() - 1);
  for (const auto& [sx, cx] : x.terms()) {
    const Multivector mx = Multivector::from_set(FrameKind::Algebroid, spec.rank(), sx, cx);
    for (const auto& [sy, cy] : y.terms()) {
      const Multivector b = bracket_monomials(spec, mx, Multivector::from_set(FrameKind::Algebroid, spec.rank(), sy, cy));
      if (!b.is_zero()) out += b;
    }
  }
  return out;
}

}  // namespace

Multivector d_A(const AlgebroidSpec& spec, const Multivector& form) {
  require(spec, form, FrameKind::DualAlgebroid, "d_A");
  const int r = spec.rank();
  const int k = form.degree();
  Multivector out = spec.zero(FrameKind::DualAlgebroid, k + 1);
  if (k + 1 > r || k < 0 || form.is_zero()) return out;

  std::vector<Multivector> rho;
  for (int i = 0; i < r; ++i) rho.push_back(spec.anchor_of(spec.frame(i)));

  for (IndexSet target : index_set::subsets(r, k + 1)) {
    const std::vector<int> idx = index_set::to_list(target);
    Scalar value;
    for (int j = 0; j <= k; ++j) {
      const Scalar f = form.coefficient(target & ~(IndexSet{1} << idx[j]));
      if (f.is_zero()) continue;
      const Scalar term = vector_field_apply(rho[idx[j]], f);
      value += (j % 2 == 0) ? term : -term;
    }
    for (int j = 0; j <= k; ++j) {
      for (int l = j + 1; l <= k; ++l) {
        const IndexSet rest = target & ~(IndexSet{1} << idx[j]) & ~(IndexSet{1} << idx[l]);
        Scalar term;
        for (int m = 0; m < r; ++m) {
          const Scalar& c = spec.structure(idx[j], idx[l], m);
          if (c.is_zero()) continue;
          const Scalar x = evaluate_with(form, m, rest);
          if (!x.is_zero()) term += c * x;
        }
        value += ((j + l) % 2 == 0) ? term : -term;
      }
    }
    out.add(target, value);
  }
  return out;
}

Multivector schouten(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y) {
  require(spec, x, FrameKind::Algebroid, "schouten");
  require(spec, y, FrameKind::Algebroid, "schouten");
  const int p = x.degree();
  const int q = y.degree();
  const int degree = p + q - 1;
  Multivector out = spec.zero(FrameKind::Algebroid, degree);
  if (degree < 0 || degree > spec.rank() || x.is_zero() || y.is_zero()) return out;

  const int first_sign = ((p - 1) * (q - 1)) % 2 == 0 ? 1 : -1;
  const Multivector xy = wedge(x, y);
  for (IndexSet set : index_set::subsets(spec.rank(), degree)) {
    const Multivector xi = Multivector::from_set(FrameKind::DualAlgebroid, spec.rank(), set);
    const Scalar a = scalar_part(contract(x, d_A(spec, contract(y, xi))));
    const Scalar b = scalar_part(contract(y, d_A(spec, contract(x, xi))));
    const Scalar c = scalar_part(contract(xy, d_A(spec, xi)));
    Scalar value = first_sign > 0 ? a : -a;
    value -= b;
    value += (p % 2 == 0) ? c : -c;
    out.add(set, value);
  }
  return out;
}

Multivector schouten_leibniz(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y) {
  require(spec, x, FrameKind::Algebroid, "schouten");
  require(spec, y, FrameKind::Algebroid, "schouten");
  if (x.degree() + y.degree() - 1 > spec.rank()) return spec.zero(FrameKind::Algebroid, x.degree() + y.degree() - 1);
  return bracket_terms(spec, x, y);
}

Multivector lie_derivative_mv(const AlgebroidSpec& spec, const Multivector& a, const Multivector& x) {
  require(spec, a, FrameKind::Algebroid, "lie_derivative_mv");
  if (a.degree() != 1) throw DegreeMismatch("Lie derivatives are along degree-1 sections");
  return schouten_leibniz(spec, a, x);
}

Multivector lie_derivative_form(const AlgebroidSpec& spec, const Multivector& a, const Multivector& xi) {
  require(spec, a, FrameKind::Algebroid, "lie_derivative_form");
  require(spec, xi, FrameKind::DualAlgebroid, "lie_derivative_form");
  if (a.degree() != 1) throw DegreeMismatch("Lie derivatives are along degree-1 sections");
  const int k = xi.degree();
  Multivector out = spec.zero(FrameKind::DualAlgebroid, k);
  if (k < 0 || k > spec.rank()) return out;
  const Multivector field = spec.anchor_of(a);
  for (IndexSet set : index_set::subsets(spec.rank(), k)) {
    const Multivector moved = lie_derivative_mv(spec, a, Multivector::from_set(FrameKind::Algebroid, spec.rank(), set));
    out.add(set, vector_field_apply(field, xi.coefficient(set)) - pair(xi, moved));
  }
  return out;
}

}  // namespace lamod
