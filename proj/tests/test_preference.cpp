#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credalkit/preference.hpp"
#include "support/test_support.hpp"

using namespace credalkit;
using namespace credalkit::testing;

namespace {

Act act_f() { return Act(pt({"0", "10", "0"})); }
Act act_g() { return Act(pt({"10", "0", "0"})); }

PreferenceContext conditional_half() {
  return PreferenceContext{urn_set(), ConstantPartialBayes{rat("1/2")},
                           urn_rb()};
}

}  // namespace

TEST_CASE("meu evaluates the worst-case expectation") {
  const CredalSet urn = urn_set();
  CHECK(meu_value(urn, act_f()) == rat("2"));
  CHECK(meu_value(urn, act_g()) == rat("1"));
  CHECK(meu_value(urn, Act::constant(3, rat("5/2"))) == rat("5/2"));
  CHECK(meu_value(urn, Act(pt({"10", "0", "5/2"}))) == rat("5/2"));
  CHECK_THROWS_AS(meu_value(urn, Act(pt({"1", "2"}))), std::invalid_argument);
}

TEST_CASE("certainty equivalents in utile units") {
  const CredalSet posterior =
      update(urn_set(), urn_rb(), ConstantPartialBayes{rat("1/2")});
  CHECK(certainty_equivalent(posterior, act_g()) == rat("3"));
  CHECK(certainty_equivalent(posterior, Act::constant(3, rat("7/3"))) ==
        rat("7/3"));
  // the benchmark indifference behind the reversal
  CHECK(certainty_equivalent(posterior, Act::constant(3, rat("3"))) ==
        certainty_equivalent(posterior, act_g()));
}

TEST_CASE("conditional preference flips under inference") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();

  const PreferenceContext ex_ante{urn, FullBayes{}, std::nullopt};
  CHECK(prefer(ex_ante, act_f(), act_g()) == PreferenceOrder::FirstStrict);

  const PreferenceContext fb{urn, FullBayes{}, rb};
  CHECK(prefer(fb, act_f(), act_g()) == PreferenceOrder::Indifferent);

  const PreferenceContext ml{urn, MaxLikelihood{}, rb};
  CHECK(prefer(ml, act_f(), act_g()) == PreferenceOrder::Indifferent);

  CHECK(prefer(conditional_half(), act_f(), act_g()) ==
        PreferenceOrder::SecondStrict);

  CHECK(prefer(ex_ante, act_f(), act_f()) == PreferenceOrder::Indifferent);
}

TEST_CASE("act composition, mixing, reduction") {
  const Event rb = urn_rb();
  const Act x = Act::constant(3, rat("5/2"));

  CHECK(composite_act(act_g(), rb, x) == Act(pt({"10", "0", "5/2"})));
  CHECK(composite_act(act_f(), Event::full(3), act_g()) == act_f());
  CHECK(composite_act(act_f(), Event::none(3), act_g()) == act_g());

  CHECK(mixture_act(act_f(), act_g(), rat("1")) == act_f());
  CHECK(mixture_act(act_f(), act_g(), rat("0")) == act_g());
  CHECK(mixture_act(act_f(), act_f(), rat("1/3")) == act_f());
  CHECK(mixture_act(act_f(), act_g(), rat("1/2")) == Act(pt({"5", "5", "0"})));
  CHECK_THROWS_AS(mixture_act(act_f(), act_g(), rat("3/2")),
                  std::invalid_argument);

  CHECK(reduce_act(act_f(), prior({"0", "1", "0"})) ==
        Act::constant(3, rat("10")));
  CHECK(reduce_act(x, prior({"1/3", "1/3", "1/3"})) == x);
  CHECK(reduce_act(act_f(), prior({"1/2", "1/2", "0"})) ==
        Act::constant(3, rat("5")));
}

TEST_CASE("reduction is preferred exactly on the credal set") {
  const CredalSet urn = urn_set();
  CHECK(reduction_preferred(urn, prior({"6/10", "2/10", "2/10"})));
  CHECK(reduction_preferred(urn, prior({"1/3", "1/3", "1/3"})));
  CHECK_FALSE(reduction_preferred(urn, prior({"1", "0", "0"})));
}

TEST_CASE("dynamic consistency report on the reversal pair") {
  const auto report = check_dynamic_consistency(conditional_half(), urn_rb(),
                                                act_f(), act_g());
  CHECK_FALSE(report.forward);  // f = fAg beats g ex ante, yet g wins after
  CHECK(report.backward);

  const auto same = check_dynamic_consistency(conditional_half(), urn_rb(),
                                              act_f(), act_f());
  CHECK(same.forward);
  CHECK(same.backward);

  // g is conditionally tied with the sure 3, but committing to g-on-the-
  // event is strictly worse than 3 up front: the backward direction fails.
  const Act z = Act::constant(3, rat("3"));
  const auto partial = check_dynamic_consistency(conditional_half(), urn_rb(),
                                                 act_g(), z);
  CHECK(partial.forward);
  CHECK_FALSE(partial.backward);
}

TEST_CASE("weak planning consistency") {
  CHECK(check_weak_planning_consistency(conditional_half(), urn_rb(), act_g(),
                                        rat("5/2")));
  // and the conditional preference is strict
  const CredalSet posterior =
      update(urn_set(), urn_rb(), ConstantPartialBayes{rat("1/2")});
  CHECK(meu_value(posterior, act_g()) > rat("5/2"));

  CHECK(check_weak_planning_consistency(
      conditional_half(), urn_rb(), Act::constant(3, rat("4")), rat("7")));
}

TEST_CASE("certainty-equivalent consistency biconditional") {
  // plan indifferent, conditional strict: the biconditional fails
  CHECK_FALSE(check_pires_consistency(conditional_half(), urn_rb(), act_g(),
                                      rat("5/2")));

  // full bayesian updating satisfies it on the same instance
  const PreferenceContext fb{urn_set(), FullBayes{}, std::nullopt};
  CHECK(check_pires_consistency(fb, urn_rb(), act_g(), rat("5/2")));

  // benchmark below the act's worst in-event payoff: vacuously consistent
  CHECK(check_pires_consistency(conditional_half(), urn_rb(),
                                Act(pt({"4", "6", "0"})), rat("2")));
}

TEST_CASE("threshold identification from posteriors") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();

  const CredalSet revealed(urn_space(), {prior({"3/4", "1/4", "0"}),
                                         prior({"11/26", "15/26", "0"})});
  const auto point = identify_rho(urn, rb, revealed);
  REQUIRE(point.is_point());
  CHECK(point.rho() == rat("13/18"));

  const auto interval = identify_rho(urn, rb, update(urn, rb, FullBayes{}));
  REQUIRE_FALSE(interval.is_point());
  CHECK(interval.upper_bound() == rat("4/9"));
  CHECK(interval.admits(rat("1/3")));
  CHECK_FALSE(interval.admits(rat("1/2")));

  const auto ml_point =
      identify_rho(urn, rb, update(urn, rb, MaxLikelihood{}));
  REQUIRE(ml_point.is_point());
  CHECK(ml_point.rho() == rat("1"));

  // mass outside the event: not a posterior at rb
  CHECK_THROWS_AS(identify_rho(urn, rb, urn), IdentificationError);

  // a strict subset no threshold generates
  const CredalSet rogue(urn_space(), {prior({"3/4", "1/4", "0"})});
  CHECK_THROWS_AS(identify_rho(urn, rb, rogue), IdentificationError);
}

TEST_CASE("identification round-trips through updating") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();
  for (const char* rho_text : {"1/2", "5/9", "13/18", "8/9", "17/18", "1"}) {
    const Rational rho = rat(rho_text);
    const auto identified =
        identify_rho(urn, rb, update(urn, rb, ConstantPartialBayes{rho}));
    REQUIRE(identified.is_point());
    CHECK(identified.rho() == rho);
  }
  for (const char* rho_text : {"0", "1/9", "4/9"}) {
    const Rational rho = rat(rho_text);
    const auto identified =
        identify_rho(urn, rb, update(urn, rb, ConstantPartialBayes{rho}));
    REQUIRE_FALSE(identified.is_point());
    CHECK(identified.admits(rho));
  }
}

TEST_CASE("minimal representation zeroes unrevealed thresholds") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();
  const std::vector<Event> events{rb};

  const auto low = minimal_representation(urn, ThresholdPolicy(rat("1/3")),
                                          events);
  CHECK(low.at(rb) == 0);

  const auto high = minimal_representation(urn, ThresholdPolicy(rat("1/2")),
                                           events);
  CHECK(high.at(rb) == rat("1/2"));

  const auto zero = minimal_representation(urn, ThresholdPolicy{}, events);
  CHECK(zero.at(rb) == 0);
}

TEST_CASE("comparative ambiguity attitude tracks the threshold order") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();

  CHECK(compare_ambiguity_aversion(urn, rb, rat("13/18"), rat("1/2")) ==
        AmbiguityOrder::FirstLessAverse);
  CHECK(compare_ambiguity_aversion(urn, rb, rat("1/2"), rat("13/18")) ==
        AmbiguityOrder::SecondLessAverse);
  CHECK(compare_ambiguity_aversion(urn, rb, rat("3/5"), rat("3/5")) ==
        AmbiguityOrder::Equivalent);
  CHECK(compare_ambiguity_aversion(urn, rb, rat("1"), rat("0")) ==
        AmbiguityOrder::FirstLessAverse);
  // below the revelation bound both collapse to full bayes
  CHECK(compare_ambiguity_aversion(urn, rb, rat("4/9"), rat("1/9")) ==
        AmbiguityOrder::Equivalent);
}

TEST_CASE("maximal event probability and its defining indifference") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();
  CHECK(max_probability(urn, rb) == rat("9/10"));
  CHECK(max_probability(urn, Event::full(3)) == 1);

  // with utiles x=1 > y=0: value of y-inside-x equals 1 - max probability
  const Act y_inside_x =
      composite_act(Act::constant(3, rat("0")), rb, Act::constant(3, rat("1")));
  CHECK(meu_value(urn, y_inside_x) == rat("1/10"));
}

TEST_CASE("event-maximal preimages of conditionals") {
  const CredalSet urn = urn_set();
  const Event rb = urn_rb();

  const auto boundary = a_maximal(urn, prior({"3/10", "7/10", "0"}), rb);
  REQUIRE(boundary.has_value());
  CHECK(boundary->probability == rat("9/20"));
  CHECK(boundary->witness == prior({"27/200", "63/200", "11/20"}));

  const auto vertex = a_maximal(urn, prior({"3/4", "1/4", "0"}), rb);
  REQUIRE(vertex.has_value());
  CHECK(vertex->probability == rat("4/5"));
  CHECK(vertex->witness == prior({"6/10", "2/10", "2/10"}));

  CHECK_FALSE(a_maximal(urn, prior({"0", "1", "0"}), rb).has_value());

  CHECK_THROWS_AS(a_maximal(urn, prior({"1/3", "1/3", "1/3"}), rb),
                  std::invalid_argument);
}
