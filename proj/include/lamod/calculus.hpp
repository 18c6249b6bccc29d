#pragma once

#include <string>

#include "lamod/algebroid.hpp"

namespace lamod {

/// The algebroid differential on Gamma(wedge^k A*), by the alternating-sum formula.
Multivector d_A(const AlgebroidSpec& spec, const Multivector& form);

/// Schouten bracket, evaluated against the dual basis through
/// (xi, [X,Y]) = (-1)^{(|X|-1)(|Y|-1)} i_X d i_Y xi - i_Y d i_X xi + (-1)^{|X|} i_{X^Y} d xi.
Multivector schouten(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y);
/// Same bracket, expanded recursively through the graded Leibniz rule and antisymmetry.
Multivector schouten_leibniz(const AlgebroidSpec& spec, const Multivector& x, const Multivector& y);

/// L_a X = [a, X].
Multivector lie_derivative_mv(const AlgebroidSpec& spec, const Multivector& a, const Multivector& x);
/// L_a xi, defined by (L_a xi, X) + (xi, L_a X) = rho(a) (xi, X).
Multivector lie_derivative_form(const AlgebroidSpec& spec, const Multivector& a, const Multivector& xi);

/// What an A-form with values in a line bundle takes its values in.
enum class Payload { Trivial, QA, Canonical, Custom };

std::string payload_name(Payload payload);

/// omega (x) s for the payload's standard section s.
struct EValuedForm {
  Multivector form;
  Payload payload = Payload::Trivial;
};

}  // namespace lamod
