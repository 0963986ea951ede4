#include "credalkit/preference.hpp"

#include <algorithm>

namespace credalkit {

Act::Act(Point payoffs) : payoffs_(std::move(payoffs)) {
  if (payoffs_.empty()) {
    throw std::invalid_argument("act: empty payoff vector");
  }
}

Act Act::constant(std::size_t states, Rational value) {
  return Act(Point(states, std::move(value)));
}

bool Act::is_constant() const {
  return std::all_of(payoffs_.begin(), payoffs_.end(),
                     [&](const Rational& p) { return p == payoffs_.front(); });
}

CredalSet PreferenceContext::belief_set() const {
  if (!conditioning) return prior_set;
  return update(prior_set, *conditioning, rule);
}

Rational meu_value(const CredalSet& set, const Act& act) {
  if (act.size() != set.space().size()) {
    throw std::invalid_argument("meu: act dimension mismatch");
  }
  Rational worst = dot(act.payoffs(), set.polytope().vertices.front());
  for (const auto& v : set.polytope().vertices) {
    worst = std::min(worst, dot(act.payoffs(), v));
  }
  return worst;
}

Rational certainty_equivalent(const CredalSet& set, const Act& act) {
  return meu_value(set, act);
}

PreferenceOrder prefer(const PreferenceContext& context, const Act& first,
                       const Act& second) {
  const CredalSet beliefs = context.belief_set();
  const Rational value_first = meu_value(beliefs, first);
  const Rational value_second = meu_value(beliefs, second);
  if (value_first > value_second) return PreferenceOrder::FirstStrict;
  if (value_second > value_first) return PreferenceOrder::SecondStrict;
  return PreferenceOrder::Indifferent;
}

Act composite_act(const Act& on_event, const Event& event,
                  const Act& off_event) {
  if (on_event.size() != off_event.size() ||
      event.space_size() != on_event.size()) {
    throw std::invalid_argument("composite act: dimension mismatch");
  }
  Point payoffs(on_event.size());
  for (std::size_t s = 0; s < payoffs.size(); ++s) {
    payoffs[s] = event.contains(s) ? on_event[s] : off_event[s];
  }
  return Act(std::move(payoffs));
}

Act mixture_act(const Act& first, const Act& second, const Rational& weight) {
  if (first.size() != second.size()) {
    throw std::invalid_argument("mixture act: dimension mismatch");
  }
  if (weight < 0 || weight > 1) {
    throw std::invalid_argument("mixture act: weight outside [0,1]");
  }
  Point payoffs(first.size());
  for (std::size_t s = 0; s < payoffs.size(); ++s) {
    payoffs[s] = weight * first[s] + (1 - weight) * second[s];
  }
  return Act(std::move(payoffs));
}

Act reduce_act(const Act& act, const Prior& randomization) {
  if (act.size() != randomization.size()) {
    throw std::invalid_argument("reduce act: dimension mismatch");
  }
  return Act::constant(act.size(),
                       dot(act.payoffs(), randomization.coordinates()));
}

bool reduction_preferred(const CredalSet& set, const Prior& randomization) {
  return set.contains(randomization);
}

DynamicConsistencyReport check_dynamic_consistency(
    const PreferenceContext& context, const Event& event, const Act& f,
    const Act& g) {
  const CredalSet& prior = context.prior_set;
  const CredalSet conditional = update(prior, event, context.rule);
  const Act plan = composite_act(f, event, g);

  const bool plan_weakly_preferred = meu_value(prior, plan) >= meu_value(prior, g);
  const bool f_weakly_preferred_after =
      meu_value(conditional, f) >= meu_value(conditional, g);

  return DynamicConsistencyReport{
      !plan_weakly_preferred || f_weakly_preferred_after,
      !f_weakly_preferred_after || plan_weakly_preferred,
  };
}

bool check_weak_planning_consistency(const PreferenceContext& context,
                                     const Event& event, const Act& f,
                                     const Rational& sure_value) {
  const CredalSet& prior = context.prior_set;
  const Act benchmark = Act::constant(f.size(), sure_value);
  const Act plan = composite_act(f, event, benchmark);
  if (meu_value(prior, plan) < sure_value) return true;  // vacuous
  const CredalSet conditional = update(prior, event, context.rule);
  return meu_value(conditional, f) >= sure_value;
}

bool check_pires_consistency(const PreferenceContext& context,
                             const Event& event, const Act& f,
                             const Rational& sure_value) {
  const CredalSet& prior = context.prior_set;
  const Act benchmark = Act::constant(f.size(), sure_value);
  const Act plan = composite_act(f, event, benchmark);
  const CredalSet conditional = update(prior, event, context.rule);
  const bool plan_indifferent = meu_value(prior, plan) == sure_value;
  const bool conditionally_indifferent =
      meu_value(conditional, f) == sure_value;
  return plan_indifferent == conditionally_indifferent;
}

IdentificationResult IdentificationResult::point(Rational rho) {
  IdentificationResult result;
  result.is_point_ = true;
  result.value_ = std::move(rho);
  return result;
}

IdentificationResult IdentificationResult::interval(Rational upper) {
  IdentificationResult result;
  result.is_point_ = false;
  result.value_ = std::move(upper);
  return result;
}

const Rational& IdentificationResult::rho() const {
  if (!is_point_) {
    throw std::logic_error("identification result is an interval");
  }
  return value_;
}

const Rational& IdentificationResult::upper_bound() const {
  if (is_point_) {
    throw std::logic_error("identification result is a point");
  }
  return value_;
}

bool IdentificationResult::admits(const Rational& rho) const {
  return is_point_ ? rho == value_ : rho >= 0 && rho <= value_;
}

IdentificationResult identify_rho(const CredalSet& prior, const Event& event,
                                  const CredalSet& posterior) {
  if (posterior.space() != prior.space()) {
    throw std::invalid_argument("identify: posterior over a different space");
  }
  const ProbabilityBounds bounds = event_prob_bounds(prior, event);
  const CredalSet full_bayes = update(prior, event, FullBayes{});
  if (posterior == full_bayes) {
    return IdentificationResult::interval(bounds.min / bounds.max);
  }

  // The retained region's boundary likelihood equals the smallest maximal
  // likelihood over the posterior vertices' preimage fibers.
  std::optional<Rational> boundary;
  for (const auto& vertex : posterior.polytope().vertices) {
    const Prior conditional{vertex};
    if (conditional.probability(event) != 1) {
      throw IdentificationError("posterior carries mass outside the event");
    }
    const auto fiber = a_maximal(prior, conditional, event);
    if (!fiber) {
      throw IdentificationError(
          "posterior vertex is not a Bayes update of any prior in the set");
    }
    if (!boundary || fiber->probability < *boundary) {
      boundary = fiber->probability;
    }
  }
  const Rational rho = *boundary / bounds.max;
  if (update(prior, event, ConstantPartialBayes{rho}) != posterior) {
    throw IdentificationError(
        "posterior is not reproducible by any threshold in [0,1]");
  }
  return IdentificationResult::point(rho);
}

ThresholdPolicy minimal_representation(const CredalSet& set,
                                       const ThresholdPolicy& policy,
                                       const std::vector<Event>& events) {
  ThresholdPolicy minimal(policy.default_threshold());
  for (const auto& event : events) {
    const Rational rho = policy.at(event);
    const CredalSet posterior = update(set, event, ConstantPartialBayes{rho});
    const CredalSet full_bayes = update(set, event, FullBayes{});
    minimal.set(event, posterior == full_bayes ? Rational(0) : rho);
  }
  return minimal;
}

namespace {

bool contained_in(const CredalSet& inner, const CredalSet& outer) {
  for (const auto& vertex : inner.polytope().vertices) {
    if (!hull_membership(vertex, outer.polytope())) return false;
  }
  return true;
}

}  // namespace

AmbiguityOrder compare_ambiguity_aversion(const CredalSet& set,
                                          const Event& event,
                                          const Rational& rho_first,
                                          const Rational& rho_second) {
  const CredalSet full_bayes = update(set, event, FullBayes{});
  const CredalSet first = update(set, event, ConstantPartialBayes{rho_first});
  const CredalSet second = update(set, event, ConstantPartialBayes{rho_second});
  const Rational minimal_first = first == full_bayes ? Rational(0) : rho_first;
  const Rational minimal_second =
      second == full_bayes ? Rational(0) : rho_second;

  AmbiguityOrder order;
  if (first == second) {
    order = AmbiguityOrder::Equivalent;
  } else if (contained_in(first, second)) {
    order = AmbiguityOrder::FirstLessAverse;
  } else if (contained_in(second, first)) {
    order = AmbiguityOrder::SecondLessAverse;
  } else {
    throw std::logic_error("posteriors at one event must be nested");
  }

  const AmbiguityOrder by_threshold =
      minimal_first == minimal_second ? AmbiguityOrder::Equivalent
      : minimal_first > minimal_second ? AmbiguityOrder::FirstLessAverse
                                       : AmbiguityOrder::SecondLessAverse;
  if (order != by_threshold) {
    throw std::logic_error(
        "posterior inclusion disagrees with the threshold order");
  }
  return order;
}

Rational max_probability(const CredalSet& set, const Event& event) {
  return event_prob_bounds(set, event).max;
}

std::optional<AMaximalResult> a_maximal(const CredalSet& set,
                                        const Prior& conditional,
                                        const Event& event) {
  if (conditional.size() != set.space().size()) {
    throw std::invalid_argument("a_maximal: dimension mismatch");
  }
  if (conditional.probability(event) != 1) {
    throw std::invalid_argument(
        "a_maximal: conditional carries mass outside the event");
  }

  // pi conditions to the given distribution iff pi is proportional to it
  // inside the event: anchor on one supported state and tie every other
  // in-event coordinate to it.
  std::size_t anchor = event.space_size();
  for (std::size_t s = 0; s < conditional.size(); ++s) {
    if (event.contains(s) && conditional[s] > 0) {
      anchor = s;
      break;
    }
  }
  std::vector<LinearEquality> fiber;
  for (std::size_t s = 0; s < conditional.size(); ++s) {
    if (!event.contains(s) || s == anchor) continue;
    LinearEquality eq;
    eq.coefficients.assign(conditional.size(), Rational(0));
    eq.coefficients[s] = conditional[anchor];
    eq.coefficients[anchor] = -conditional[s];
    eq.rhs = 0;
    fiber.push_back(std::move(eq));
  }

  const auto best =
      constrained_maximize_linear(event.indicator(), set.polytope(), fiber);
  if (!best || best->value == 0) return std::nullopt;
  return AMaximalResult{best->value, Prior(best->witness)};
}

}  // namespace credalkit
