#pragma once

#include <doctest.h>

#include "lamod/builtin.hpp"
#include "lamod/parser.hpp"

namespace lamod::test {

inline Scalar S(const std::string& text, const ChartPtr& chart) { return parse_scalar(text, chart); }

inline Multivector mv(const SpecPtr& spec, FrameKind kind, std::vector<int> one_based, const std::string& coeff = "1") {
  for (int& i : one_based) --i;
  const int rank = kind == FrameKind::Tangent || kind == FrameKind::Cotangent ? spec->base_dimension() : spec->rank();
  return Multivector::basis(kind, rank, one_based, parse_scalar(coeff, spec->chart()));
}

inline Multivector section(const SpecPtr& s, std::vector<int> idx, const std::string& c = "1") {
  return mv(s, FrameKind::Algebroid, std::move(idx), c);
}
inline Multivector form(const SpecPtr& s, std::vector<int> idx, const std::string& c = "1") {
  return mv(s, FrameKind::DualAlgebroid, std::move(idx), c);
}
inline Multivector field(const SpecPtr& s, std::vector<int> idx, const std::string& c = "1") {
  return mv(s, FrameKind::Tangent, std::move(idx), c);
}
inline Multivector dform(const SpecPtr& s, std::vector<int> idx, const std::string& c = "1") {
  return mv(s, FrameKind::Cotangent, std::move(idx), c);
}

}  // namespace lamod::test
