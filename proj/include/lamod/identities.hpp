#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lamod/algebroid.hpp"

namespace lamod {

struct IdentityOutcome {
  std::string group;
  std::string identity;
  std::string spec;
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Restricts a run to some identities and/or groups; empty lists select everything.
struct IdentityFilter {
  std::vector<std::string> identities;
  std::vector<std::string> groups;
};

/// Names of every identity in the battery, and the module groups they belong to.
std::vector<std::string> identity_names();
std::vector<std::string> identity_groups();

/// Runs every applicable identity on one spec, `trials` randomized trials each.
std::vector<IdentityOutcome> run_identities(const SpecPtr& spec, const std::string& label, std::uint64_t seed, int trials,
                                            const IdentityFilter& filter = {});

/// The same over the named built-in specs (all when empty). Specs run in parallel; output order is fixed.
std::vector<IdentityOutcome> run_identity_suite(std::uint64_t seed, int trials, const std::vector<std::string>& specs = {},
                                                const IdentityFilter& filter = {});

}  // namespace lamod
