#pragma once

#include <string_view>

#include "lamod/scalar.hpp"

namespace lamod {

/// Parses the scalar expression grammar
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      division only by constants
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' INT)?
///   primary := INT | 'I' | NAME | 'cis' '(' ['-'] INT ',' NAME ')' | '(' expr ')'
///
/// cis(k, t) is e^{i k t} for a torus coordinate t.
Scalar parse_scalar(std::string_view text, const ChartPtr& chart);

}  // namespace lamod
