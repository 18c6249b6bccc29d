#pragma once

#include <string>
#include <vector>

#include "lamod/io.hpp"

namespace lamod {

struct BuiltinSpec {
  std::string name;
  Json document;
};

/// The worked examples that ship with the engine (also under specs/ as JSON files).
const std::vector<BuiltinSpec>& builtin_documents();
SpecPtr builtin_spec(const std::string& name);

}  // namespace lamod
