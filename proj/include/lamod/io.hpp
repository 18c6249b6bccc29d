#pragma once

#include <json.hpp>
#include <string>

#include "lamod/algebroid.hpp"

namespace lamod {

using Json = nlohmann::ordered_json;

/// Builds a spec from the JSON spec format; throws SpecError on unknown keys or bad shapes.
SpecPtr spec_from_json(const Json& doc);
SpecPtr load_spec(const std::string& path);

/// Multivectors serialize as [{"indices": [1-based...], "coeff": "expr"}].
Json multivector_to_json(const Multivector& m);
/// Reads a multivector; `degree` is used when the array is empty.
Multivector multivector_from_json(const Json& doc, FrameKind kind, int rank, const ChartPtr& chart, int degree = 0);

Json scalar_to_json(const Scalar& s);
Json chart_to_json(const Chart& chart);

}  // namespace lamod
