#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hyperltl/checker.hpp"
#include "hyperltl/oracle.hpp"
#include "hyperltl/policies.hpp"

using namespace hyperltl;

namespace {

SystemModel fixture(const std::string& name) {
  std::ifstream in(std::filesystem::path(HYPERLTL_DATA_DIR) / (name + ".sys"));
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return load_system(s.str());
}

}  // namespace

TEST_SUITE("policies") {
  TEST_CASE("formula shapes") {
    CHECK(to_string(access_control()) == to_string(parse("A G (req -> (hasRight <-> permit))")));
    CHECK(to_string(guaranteed_service("r", "s")) == to_string(parse("A G (r -> F s)")));
    CHECK(to_string(noninference()) == to_string(parse("AE G (<true, !high> & low_equiv)")));
    CHECK(to_string(observational_determinism()) == to_string(parse("AA low_equiv -> G low_equiv")));
    CHECK(to_string(gni()) == to_string(parse("AAE G (high_in_equiv_13 & low_equiv_23)")));
    CHECK(to_string(opacity(prop("p"))) == to_string(parse("AE G low_equiv & (<p, !p> | <!p, p>)")));
  }

  TEST_CASE("hierarchy classes") {
    CHECK(classify_fragment(access_control()).hierarchy() == "Pi_1");
    CHECK(classify_fragment(guaranteed_service()).hierarchy() == "Pi_1");
    CHECK(classify_fragment(noninference()).hierarchy() == "Pi_2");
    CHECK(classify_fragment(observational_determinism()).hierarchy() == "Pi_1");
    CHECK(classify_fragment(gni()).hierarchy() == "Pi_2");
    CHECK(classify_fragment(opacity(prop("p"))).hierarchy() == "Pi_2");
    for (const auto& info : policy_catalog()) {
      CHECK(check_well_formed(instantiate_policy(info.name)).empty());
      CHECK(classify_fragment(instantiate_policy(info.name)).fragment != Fragment::Outside);
    }
  }

  TEST_CASE("instantiation") {
    CHECK(policy_catalog().size() == 6);
    const auto q = instantiate_policy("guaranteed_service", {{"resp", "ack"}});
    CHECK(to_string(q) == to_string(guaranteed_service("req", "ack")));
    const auto o = instantiate_policy("opacity", {{"phi", "p & !q"}});
    CHECK(to_string(o) == to_string(opacity(parse("p & !q").body)));
    CHECK_THROWS_AS(instantiate_policy("nope"), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_policy("gni", {{"high", "h"}}), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_policy("noninference", {{"high", "__x"}}), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_policy("opacity", {{"phi", "F p"}}), FragmentError);
    CHECK_THROWS_AS(instantiate_policy("opacity", {{"phi", "A p"}}), std::invalid_argument);
  }

  TEST_CASE("fixtures") {
    for (const auto& info : policy_catalog()) {
      const auto qf = instantiate_policy(info.name);
      for (bool holds : {true, false}) {
        const SystemModel m = fixture(info.name + (holds ? "_holds" : "_fails"));
        const Verdict v = check(m, qf);
        CHECK_MESSAGE(v.holds == holds, info.name);
        CHECK(v.countermodel.has_value() == !holds);
        if (in_oracle_envelope(m)) CHECK(oracle_holds(m, qf) == holds);
      }
    }
  }
}
