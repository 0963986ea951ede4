#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "commands.hpp"
#include "scenario.hpp"
#include "support/test_support.hpp"

using namespace credalkit;
using namespace credalkit::cli;
using credalkit::testing::prior;
using credalkit::testing::rat;

namespace {

constexpr const char* kUrnScenario = R"(# three-color urn
states r b y

set C = (9/20, 9/20, 2/20) (6/10, 2/10, 2/10) (1/10, 3/10, 6/10)

act f = 0 10 0
act g = 10 0 0

event A = r b
event B = b y

threshold half = 1/2
threshold mixed = 0 A:1/2 B:1

query update C A fb
)";

void check_position(const char* text, std::size_t line, std::size_t column) {
  try {
    parse_scenario(text);
    FAIL_CHECK("expected a parse failure for: ", text);
  } catch (const ScenarioError& error) {
    CHECK(error.line() == line);
    CHECK(error.column() == column);
  }
}

}  // namespace

TEST_CASE("a full scenario parses into resolvable declarations") {
  const Scenario scenario = parse_scenario(kUrnScenario);
  CHECK(scenario.states.labels() ==
        std::vector<std::string>{"r", "b", "y"});
  CHECK(scenario.set_ref("C").vertex_count() == 3);
  CHECK(scenario.act_ref("f") == Act({rat("0"), rat("10"), rat("0")}));
  CHECK(scenario.event_ref("A") ==
        scenario.states.event_of(std::vector<std::string>{"r", "b"}));
  CHECK(scenario.event_ref("S") == scenario.states.full_event());
  CHECK(scenario.threshold_ref("half").default_threshold() == rat("1/2"));
  CHECK(scenario.threshold_ref("mixed").at(scenario.event_ref("A")) ==
        rat("1/2"));
  CHECK(scenario.threshold_ref("mixed").at(scenario.event_ref("B")) == 1);
  CHECK(scenario.threshold_ref("mixed").at(scenario.states.full_event()) == 0);
  CHECK(scenario.queries == std::vector<std::string>{"update C A fb"});

  CHECK_THROWS_AS(scenario.set_ref("missing"), UsageError);
  CHECK_THROWS_AS(scenario.event_ref("missing"), UsageError);
  CHECK(&scenario.default_set() == &scenario.set_ref("C"));
}

TEST_CASE("parse errors carry meaningful positions") {
  check_position("states r b\nset X = (1/2, 1/3)\n", 2, 9);      // off simplex
  check_position("states r b\nset X = (1/2)\n", 2, 9);           // wrong arity
  check_position("states r b\nwobble X = 1\n", 2, 1);            // bad directive
  check_position("states r b\nact f = 1 oops\n", 2, 11);         // bad rational
  check_position("states r b\nevent E = r q\n", 2, 13);          // bad label
  check_position("states r r\n", 1, 1);                          // dup label
  check_position("set X = (1)\n", 1, 5);                         // states missing
  check_position("states r b\nact f = 1 2\nact f = 3 4\n", 3, 5);  // dup name
  check_position("states r b\nact S = 1 2\n", 2, 5);             // reserved name
  check_position("states r b\nthreshold t = 3/2\n", 2, 15);      // out of range
  check_position("states r b\nset X = (1/2, 1/2\n", 2, 9);       // unterminated
  CHECK_THROWS_AS(parse_scenario(""), ScenarioError);
}

TEST_CASE("scenario round trip is the identity") {
  const Scenario original = parse_scenario(kUrnScenario);
  const std::string canonical = format_scenario(original);
  const Scenario reparsed = parse_scenario(canonical);
  CHECK(reparsed.states == original.states);
  CHECK(reparsed.sets == original.sets);
  CHECK(reparsed.acts == original.acts);
  CHECK(reparsed.events == original.events);
  CHECK(reparsed.queries == original.queries);
  CHECK(reparsed.thresholds.size() == original.thresholds.size());
  for (const auto& [name, policy] : original.thresholds) {
    const auto& other = reparsed.threshold_ref(name);
    CHECK(other.default_threshold() == policy.default_threshold());
    CHECK(other.entries() == policy.entries());
  }
  // formatting is idempotent on canonical text
  CHECK(format_scenario(reparsed) == canonical);
}

TEST_CASE("rule specifications resolve against the scenario") {
  const Scenario scenario = parse_scenario(kUrnScenario);
  CHECK(std::holds_alternative<FullBayes>(parse_rule(scenario, "fb")));
  CHECK(std::holds_alternative<MaxLikelihood>(parse_rule(scenario, "ml")));
  const auto constant = parse_rule(scenario, "pb:13/18");
  CHECK(std::get<ConstantPartialBayes>(constant).threshold == rat("13/18"));
  const auto named = parse_rule(scenario, "pb:mixed");
  CHECK(std::get<PartialBayes>(named).policy.at(scenario.event_ref("B")) == 1);
  CHECK(std::get<RelativeMaxLikelihood>(parse_rule(scenario, "rml:1/2"))
            .contraction == rat("1/2"));
  CHECK_THROWS_AS(parse_rule(scenario, "pb:7/2"), UsageError);
  CHECK_THROWS_AS(parse_rule(scenario, "guess"), UsageError);
  CHECK_THROWS_AS(parse_rule(scenario, "pb:unknown"), UsageError);
}

TEST_CASE("dispatch output matches the command contracts") {
  const Scenario scenario = parse_scenario(kUrnScenario);
  std::ostringstream out;
  std::ostringstream err;

  CHECK(dispatch(scenario, {"update", "C", "A", "pb:1/2"}, out, err) == 0);
  CHECK(out.str() == "(3/10, 7/10, 0)\n(3/4, 1/4, 0)\n");

  out.str("");
  CHECK(dispatch(scenario, {"prefer", "f", "g", "given", "A", "pb:1/2"}, out,
                 err) == 0);
  CHECK(out.str() == "g_strict\n");

  out.str("");
  CHECK(dispatch(scenario, {"prefer", "f", "g"}, out, err) == 0);
  CHECK(out.str() == "f_strict\n");

  out.str("");
  CHECK(dispatch(scenario, {"check", "dc", "f", "g", "A", "pb:1/2"}, out,
                 err) == 0);
  CHECK(out.str() == "forward=false backward=true\n");

  out.str("");
  CHECK(dispatch(scenario, {"check", "wpc", "g", "5/2", "A", "pb:1/2"}, out,
                 err) == 0);
  CHECK(out.str() == "holds=true\n");

  out.str("");
  CHECK(dispatch(scenario, {"check", "pires", "g", "5/2", "A", "pb:1/2"}, out,
                 err) == 0);
  CHECK(out.str() == "holds=false\n");

  // determinism: identical command, byte-identical output
  std::ostringstream first;
  std::ostringstream second;
  dispatch(scenario, {"update", "C", "A", "pb:13/18"}, first, err);
  dispatch(scenario, {"update", "C", "A", "pb:13/18"}, second, err);
  CHECK(first.str() == second.str());
}

TEST_CASE("dispatch maps failures onto the exit-code contract") {
  const Scenario scenario = parse_scenario(kUrnScenario);
  std::ostringstream out;
  std::ostringstream err;

  CHECK(dispatch(scenario, {"update", "C", "A"}, out, err) == kExitUsage);
  CHECK(dispatch(scenario, {"update", "C", "A", "zz"}, out, err) ==
        kExitUsage);
  CHECK(dispatch(scenario, {"update", "Q", "A", "fb"}, out, err) ==
        kExitUsage);
  CHECK(dispatch(scenario, {"nonsense"}, out, err) == kExitUsage);

  // conditioning on an event that is not strongly nonnull: domain error
  const Scenario corner = parse_scenario(
      "states a b\nset X = (1, 0) (1/2, 1/2)\nevent E = b\n");
  CHECK(dispatch(corner, {"update", "X", "E", "fb"}, out, err) == kExitDomain);

  // plotting a four-state set: dimension error
  const Scenario wide = parse_scenario(
      "states a b c d\nset X = (1/4, 1/4, 1/4, 1/4)\n");
  CHECK(dispatch(wide, {"plot", "X", "--out", "/dev/null"}, out, err) ==
        kExitDomain);
}
