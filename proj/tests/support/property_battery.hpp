#pragma once

#include <sstream>
#include <string>

#include "support/test_support.hpp"

namespace credalkit::testing {

// One randomized instance for the invariant battery: a strictly positive
// credal set (so every event is strongly nonnull), an event, and a
// threshold pair.
struct PropertyInstance {
  CredalSet set;
  Event event;
  Rational rho_low;
  Rational rho_high;
};

inline PropertyInstance random_instance(TestRng& rng) {
  const std::size_t states = rng.pick(2, 4);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < states; ++s) {
    labels.push_back("s" + std::to_string(s + 1));
  }
  const StateSpace space(labels);
  CredalSet set = rng.random_credal_set(space, 5, true);
  Event event = rng.random_event(states);
  Rational a = rng.rational01();
  Rational b = rng.rational01();
  if (a > b) std::swap(a, b);
  return PropertyInstance{std::move(set), event, std::move(a), std::move(b)};
}

inline bool subset_of(const CredalSet& inner, const CredalSet& outer) {
  for (const auto& vertex : inner.polytope().vertices) {
    if (!hull_membership(vertex, outer.polytope())) return false;
  }
  return true;
}

// ml ⊆ pb(rho) ⊆ fb
inline std::string check_nesting(const PropertyInstance& instance) {
  const CredalSet fb = update(instance.set, instance.event, FullBayes{});
  const CredalSet ml = update(instance.set, instance.event, MaxLikelihood{});
  const CredalSet pb =
      update(instance.set, instance.event, ConstantPartialBayes{instance.rho_high});
  if (!subset_of(ml, pb)) return "ml not inside pb";
  if (!subset_of(pb, fb)) return "pb not inside fb";
  return {};
}

// rho <= rho' implies pb(rho') ⊆ pb(rho)
inline std::string check_antitone(const PropertyInstance& instance) {
  const CredalSet wide =
      update(instance.set, instance.event, ConstantPartialBayes{instance.rho_low});
  const CredalSet narrow =
      update(instance.set, instance.event, ConstantPartialBayes{instance.rho_high});
  if (!subset_of(narrow, wide)) return "posterior not antitone in threshold";
  return {};
}

inline std::string check_endpoints(const PropertyInstance& instance) {
  if (update(instance.set, instance.event, ConstantPartialBayes{Rational(0)}) !=
      update(instance.set, instance.event, FullBayes{})) {
    return "pb(0) differs from fb";
  }
  if (update(instance.set, instance.event, ConstantPartialBayes{Rational(1)}) !=
      update(instance.set, instance.event, MaxLikelihood{})) {
    return "pb(1) differs from ml";
  }
  return {};
}

// posterior mass vanishes outside the conditioning event, under all rules
inline std::string check_consequentialism(const PropertyInstance& instance) {
  const std::vector<UpdateRule> rules = {
      FullBayes{}, MaxLikelihood{}, ConstantPartialBayes{instance.rho_high},
      RelativeMaxLikelihood{instance.rho_low}};
  for (const auto& rule : rules) {
    const CredalSet posterior = update(instance.set, instance.event, rule);
    for (const auto& vertex : posterior.polytope().vertices) {
      if (Prior(vertex).probability(instance.event) != 1) {
        return "posterior mass escapes the event";
      }
    }
  }
  return {};
}

// retention is monotone in the event likelihood across the set's vertices
inline std::string check_monotone_retention(const PropertyInstance& instance) {
  const Rational cutoff =
      instance.rho_high * event_prob_bounds(instance.set, instance.event).max;
  const auto vertices = instance.set.vertices();
  for (const auto& pi : vertices) {
    for (const auto& pi_weaker : vertices) {
      const bool weaker_passes =
          pi_weaker.probability(instance.event) >= cutoff;
      const bool stronger =
          pi.probability(instance.event) >= pi_weaker.probability(instance.event);
      if (weaker_passes && stronger &&
          pi.probability(instance.event) < cutoff) {
        return "likelier prior rejected while a less likely one passed";
      }
    }
  }
  return {};
}

// full-bayesian updating commutes with nesting, vertex by vertex
inline std::string check_fb_path_independence(const PropertyInstance& instance,
                                              TestRng& rng) {
  if (instance.event.count() < 2) return {};
  const Event inner = rng.random_subevent(instance.event);
  ThresholdPolicy fb_policy;
  const auto report = check_ipi(instance.set, instance.event, inner, fb_policy);
  if (!report.holds) return "fb updating is path dependent";
  for (const auto& prior : instance.set.vertices()) {
    if (prior.bayes_update(instance.event).bayes_update(inner) !=
        prior.bayes_update(inner)) {
      return "chain rule fails on a vertex";
    }
  }
  return {};
}

// constant acts rank identically before and after updating
inline std::string check_ordinal_consistency(const PropertyInstance& instance,
                                             TestRng& rng) {
  const std::size_t states = instance.set.space().size();
  const Act x = Act::constant(states, rng.payoff());
  const Act y = Act::constant(states, rng.payoff());
  const PreferenceContext before{instance.set, FullBayes{}, std::nullopt};
  const PreferenceContext after{instance.set,
                                ConstantPartialBayes{instance.rho_high},
                                instance.event};
  if (prefer(before, x, y) != prefer(after, x, y)) {
    return "constant-act ranking changed after updating";
  }
  return {};
}

// identification recovers the generating threshold whenever the posterior
// reveals inference, and otherwise returns an interval whose cap is the
// collapse bound; reproduction always holds at the identified value.
inline std::string check_identify_roundtrip(const PropertyInstance& instance) {
  const Rational rho = instance.rho_high;
  const CredalSet posterior =
      update(instance.set, instance.event, ConstantPartialBayes{rho});
  const CredalSet fb = update(instance.set, instance.event, FullBayes{});
  const auto identified = identify_rho(instance.set, instance.event, posterior);
  if (posterior == fb) {
    if (identified.is_point()) return "unrevealing posterior identified as a point";
    const auto bounds = event_prob_bounds(instance.set, instance.event);
    if (identified.upper_bound() != bounds.min / bounds.max) {
      return "interval cap is not the collapse bound";
    }
    if (update(instance.set, instance.event, ConstantPartialBayes{Rational(0)}) !=
        posterior) {
      return "interval member does not reproduce the posterior";
    }
  } else {
    if (!identified.is_point()) return "revealing posterior identified as interval";
    if (identified.rho() != rho) return "identified threshold differs";
    if (update(instance.set, instance.event,
               ConstantPartialBayes{identified.rho()}) != posterior) {
      return "identified threshold does not reproduce the posterior";
    }
  }
  return {};
}

// the full criterion battery on one instance; empty string = all good
inline std::string run_battery_instance(TestRng& rng) {
  const PropertyInstance instance = random_instance(rng);
  const struct {
    const char* name;
    std::string failure;
  } results[] = {
      {"nesting", check_nesting(instance)},
      {"antitone", check_antitone(instance)},
      {"endpoints", check_endpoints(instance)},
      {"consequentialism", check_consequentialism(instance)},
      {"monotone-retention", check_monotone_retention(instance)},
      {"fb-path-independence", check_fb_path_independence(instance, rng)},
      {"ordinal-consistency", check_ordinal_consistency(instance, rng)},
      {"identify-roundtrip", check_identify_roundtrip(instance)},
  };
  for (const auto& result : results) {
    if (!result.failure.empty()) {
      std::ostringstream out;
      out << result.name << ": " << result.failure << " [set "
          << describe(instance.set) << ", event bits "
          << instance.event.bits() << ", rho " << format_rational(instance.rho_low)
          << ".." << format_rational(instance.rho_high) << "]";
      return out.str();
    }
  }
  return {};
}

}  // namespace credalkit::testing
