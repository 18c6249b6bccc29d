#include "support.hpp"

#include <set>

#include "lamod/identities.hpp"

using namespace lamod;

TEST_CASE("identity names are unique") {
  const auto names = identity_names();
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  CHECK(identity_groups().size() == 8);
}

TEST_CASE("every module battery passes on every built-in spec") {
  for (const std::string& group : identity_groups()) {
    const auto outcomes = run_identity_suite(20240917, 8, {}, IdentityFilter{{}, {group}});
    CHECK_FALSE(outcomes.empty());
    for (const auto& o : outcomes) {
      INFO(o.spec << " " << o.identity << ": " << o.first_failure);
      CHECK(o.passed());
    }
  }
}

TEST_CASE("the suite is deterministic") {
  const auto a = run_identity_suite(3, 2, {"cotangent_linear"});
  const auto b = run_identity_suite(3, 2, {"cotangent_linear"});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].identity == b[i].identity);
}
