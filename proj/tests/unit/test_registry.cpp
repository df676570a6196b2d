#include <doctest.h>

#include <set>
#include <string>

#include "baire/registry.hpp"

TEST_SUITE_BEGIN("cli");

TEST_CASE("verbs and operations are in bijection") {
  std::set<std::string> verbs;
  std::set<std::string> operations;
  for (const auto& b : baire::registry::kVerbs) {
    CHECK(verbs.insert(b.verb).second);
    CHECK(operations.insert(b.operation).second);
  }
  CHECK(verbs.size() == baire::registry::kVerbs.size());

  const std::set<std::string> expected_verbs{"eval",     "eval-k1",  "convert",    "check-k0",
                                             "is-bar",   "fan",      "trim",       "saturate",
                                             "synthesize", "demo-llpo", "roundtrip"};
  CHECK(verbs == expected_verbs);
}

TEST_SUITE_END();
