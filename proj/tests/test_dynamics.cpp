#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credalkit/dynamics.hpp"
#include "support/test_support.hpp"

using namespace credalkit;
using namespace credalkit::testing;

namespace {

CredalSet chain_singleton(std::initializer_list<const char*> coords) {
  return CredalSet(chain_space(), {prior(coords)});
}

}  // namespace

TEST_CASE("information paths validate nesting and thresholds") {
  const Event outer = chain_outer();
  const Event inner = chain_inner();
  CHECK_NOTHROW(InformationPath({{outer, rat("1")}, {inner, rat("1")}}));
  CHECK_THROWS_AS(InformationPath({{inner, rat("1")}, {outer, rat("1")}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(InformationPath({{outer, rat("3/2")}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(InformationPath({{Event::none(4), rat("1")}}),
                  std::invalid_argument);
}

TEST_CASE("sequential updating carries early inference forward") {
  const CredalSet chain = chain_set();
  const Event outer = chain_outer();
  const Event inner = chain_inner();

  const InformationPath path({{outer, rat("1")}, {inner, rat("1")}});
  CHECK(sequential_update(chain, path) ==
        chain_singleton({"2/3", "1/3", "0", "0"}));

  // one-step path is just an update
  const InformationPath single({{outer, rat("1")}});
  CHECK(sequential_update(chain, single) ==
        update(chain, outer, ConstantPartialBayes{rat("1")}));

  // the fresh-posterior mode re-derives from the original set instead
  CHECK(sequential_update(chain, path, SequenceMode::FreshPosterior) ==
        chain_singleton({"1/2", "1/2", "0", "0"}));
}

TEST_CASE("sequential posteriors across the revealing threshold range") {
  const CredalSet chain = chain_set();
  const Event outer = chain_outer();
  const Event inner = chain_inner();

  // seq(t) = {(2/(10-7t), (8-7t)/(10-7t), 0, 0)} for t in (6/7, 1]
  const std::vector<std::pair<const char*, std::array<const char*, 2>>>
      family = {
          {"7/8", {"16/31", "15/31"}},
          {"15/16", {"32/55", "23/55"}},
          {"1", {"2/3", "1/3"}},
      };
  for (const auto& [threshold, expected] : family) {
    const InformationPath path(
        {{outer, rat(threshold)}, {inner, rat("1")}});
    CHECK(sequential_update(chain, path) ==
          CredalSet(chain_space(),
                    {Prior({rat(expected[0]), rat(expected[1]), 0, 0})}));
  }
}

TEST_CASE("path independence holds and fails where the geometry says") {
  const CredalSet chain = chain_set();
  const Event outer = chain_outer();
  const Event inner = chain_inner();

  const auto report = check_ipi(chain, outer, inner,
                                ThresholdPolicy::constant(rat("1")));
  CHECK_FALSE(report.holds);
  CHECK(report.direct == chain_singleton({"1/2", "1/2", "0", "0"}));
  CHECK(report.sequential == chain_singleton({"2/3", "1/3", "0", "0"}));
  REQUIRE(report.witness.has_value());

  // full-bayesian policy is path independent
  CHECK(check_ipi(chain, outer, inner, ThresholdPolicy{}).holds);

  // non-revealing outer threshold with the inner one at the endpoints
  for (const char* inner_rho : {"0", "1/2", "9/14", "1"}) {
    ThresholdPolicy policy;
    policy.set(outer, rat("1/2"));
    policy.set(inner, rat(inner_rho));
    CHECK(check_ipi(chain, outer, inner, policy).holds);
  }

  // Inner thresholds in (9/14, 1) rank the conditionals differently from
  // the priors, so the two routes cut the family at different depths even
  // though nothing was excluded at the outer event.
  ThresholdPolicy skewed;
  skewed.set(outer, rat("0"));
  skewed.set(inner, rat("3/4"));
  const auto subtle = check_ipi(chain, outer, inner, skewed);
  CHECK_FALSE(subtle.holds);
  REQUIRE(subtle.witness.has_value());
  CHECK(subtle.direct.contains(prior({"2/3", "1/3", "0", "0"})));
  CHECK_FALSE(subtle.sequential.contains(prior({"2/3", "1/3", "0", "0"})));

  CHECK_THROWS_AS(check_ipi(chain, inner, outer, ThresholdPolicy{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_ipi(chain, outer, outer, ThresholdPolicy{}),
                  std::invalid_argument);
}

TEST_CASE("grid search finds the violating threshold pair") {
  const CredalSet chain = chain_set();
  const Event outer = chain_outer();
  const Event inner = chain_inner();

  std::vector<Rational> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(Rational(k) / 8);

  const auto hit = find_ipi_violation(chain, outer, inner, grid);
  REQUIRE(hit.has_value());
  CHECK(hit->rho_outer == 1);
  CHECK(hit->rho_inner == 1);
  CHECK(hit->premise_holds);

  CHECK_FALSE(find_ipi_violation(chain, outer, inner, {Rational(0)})
                  .has_value());

  // equal event likelihoods across the whole set: no selection ever
  // happens, so every threshold pair stays path independent
  const CredalSet flat(chain_space(), {prior({"1/4", "1/4", "1/4", "1/4"}),
                                       prior({"1/8", "3/8", "1/4", "1/4"})});
  CHECK_FALSE(find_ipi_violation(flat, outer, inner, grid).has_value());
}

TEST_CASE("a single constant threshold is recovered from observations") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();
  const Event by = urn_by();
  const Rational rho = rat("3/5");

  // At by the excluded prior's conditional is still generated by surviving
  // mixtures, so PB(3/5) collapses onto full bayes there and only the rb
  // observation reveals the threshold. Reproduction still pins 3/5.
  CHECK(update(urn, by, ConstantPartialBayes{rho}) ==
        update(urn, by, FullBayes{}));
  CHECK_FALSE(identify_rho(urn, by, update(urn, by, ConstantPartialBayes{rho}))
                  .is_point());

  const std::vector<std::pair<Event, CredalSet>> observations{
      {rb, update(urn, rb, ConstantPartialBayes{rho})},
      {by, update(urn, by, ConstantPartialBayes{rho})},
  };
  CHECK(constant_rho_consistent(urn, observations) == rho);

  // a full-bayesian observation reveals nothing: the least value wins
  const std::vector<std::pair<Event, CredalSet>> unrevealing{
      {rb, update(urn, rb, FullBayes{})}};
  CHECK(constant_rho_consistent(urn, unrevealing) == Rational(0));

  // incompatible revelations at two events
  const std::vector<std::pair<Event, CredalSet>> clashing{
      {rb, update(urn, rb, ConstantPartialBayes{rat("1/2")})},
      {by, update(urn, by, MaxLikelihood{})},
  };
  CHECK_FALSE(constant_rho_consistent(urn, clashing).has_value());

  // unreproducible observation: identification refuses
  const std::vector<std::pair<Event, CredalSet>> rogue{
      {rb, CredalSet(urn_space(), {prior({"3/4", "1/4", "0"})})}};
  CHECK_THROWS_AS(constant_rho_consistent(urn, rogue), IdentificationError);
}
