#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "credalkit/credal.hpp"

namespace credalkit {

/// State-contingent payoff, already in utility units.
class Act {
 public:
  explicit Act(Point payoffs);
  static Act constant(std::size_t states, Rational value);

  const Point& payoffs() const { return payoffs_; }
  std::size_t size() const { return payoffs_.size(); }
  const Rational& operator[](std::size_t i) const { return payoffs_[i]; }
  bool is_constant() const;

  bool operator==(const Act&) const = default;

 private:
  Point payoffs_;
};

/// A preference in the collection: prior set, update rule, and optional
/// conditioning event. Absent conditioning is the unconditional
/// preference.
struct PreferenceContext {
  CredalSet prior_set;
  UpdateRule rule;
  std::optional<Event> conditioning;

  /// The set beliefs are evaluated over: the updated set when
  /// conditioning is present, the prior set otherwise.
  CredalSet belief_set() const;
};

/// Worst-case expected payoff: min over vertices of the expected value.
Rational meu_value(const CredalSet& set, const Act& act);

/// Equals meu_value since payoffs are utiles already.
Rational certainty_equivalent(const CredalSet& set, const Act& act);

enum class PreferenceOrder { FirstStrict, SecondStrict, Indifferent };

PreferenceOrder prefer(const PreferenceContext& context, const Act& first,
                       const Act& second);

/// Pays on_event inside the event and off_event outside.
Act composite_act(const Act& on_event, const Event& event,
                  const Act& off_event);

/// Pointwise mixture weight·first + (1-weight)·second, weight in [0,1].
Act mixture_act(const Act& first, const Act& second, const Rational& weight);

/// The constant act paying the randomization-weighted average payoff.
Act reduce_act(const Act& act, const Prior& randomization);

/// True iff reducing any act through the randomization is weakly
/// preferred, i.e. the randomization lies in the set.
bool reduction_preferred(const CredalSet& set, const Prior& randomization);

struct DynamicConsistencyReport {
  bool forward;   // fAg weakly preferred to g  =>  f weakly preferred after A
  bool backward;  // f weakly preferred after A  =>  fAg weakly preferred to g
};

/// Evaluates both directions of dynamic consistency for this act pair
/// under the context's rule.
DynamicConsistencyReport check_dynamic_consistency(
    const PreferenceContext& context, const Event& event, const Act& f,
    const Act& g);

/// fAx weakly preferred to x  =>  f weakly preferred to x after A, for a
/// constant benchmark x.
bool check_weak_planning_consistency(const PreferenceContext& context,
                                     const Event& event, const Act& f,
                                     const Rational& sure_value);

/// The certainty-equivalent consistency biconditional: fAx ~ x iff f ~_A x.
/// Holds universally under full-bayesian updating; fails at instances that
/// reveal inference.
bool check_pires_consistency(const PreferenceContext& context,
                             const Event& event, const Act& f,
                             const Rational& sure_value);

/// Thrown by identify_rho (and propagated by constant_rho_consistent) when
/// an observed posterior is not reproducible by any threshold in [0,1].
class IdentificationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Either a revealed point threshold or the unrevealed interval [0, hi].
class IdentificationResult {
 public:
  static IdentificationResult point(Rational rho);
  static IdentificationResult interval(Rational upper);

  bool is_point() const { return is_point_; }
  const Rational& rho() const;          // point case only
  const Rational& upper_bound() const;  // interval case only
  bool admits(const Rational& rho) const;

  bool operator==(const IdentificationResult&) const = default;

 private:
  bool is_point_ = false;
  Rational value_;
};

/// Recovers the inference threshold that produced the posterior at the
/// event. Posterior equal to the full-bayesian one: every threshold up to
/// min pi(A)/max mu(A) generates it, so the interval is returned.
/// Otherwise the revealed threshold is reconstructed exactly (the boundary
/// likelihood of the retained region over the maximal likelihood) and
/// verified by re-updating; IdentificationError if nothing reproduces the
/// posterior.
IdentificationResult identify_rho(const CredalSet& prior, const Event& event,
                                  const CredalSet& posterior);

/// Pointwise-least policy generating the same posteriors over the listed
/// events: thresholds drop to 0 wherever the posterior already equals the
/// full-bayesian one.
ThresholdPolicy minimal_representation(const CredalSet& set,
                                       const ThresholdPolicy& policy,
                                       const std::vector<Event>& events);

enum class AmbiguityOrder {
  FirstLessAverse,   // first posterior strictly inside the second
  SecondLessAverse,  // second posterior strictly inside the first
  Equivalent,
};

/// Compares conditional ambiguity attitudes of two thresholds at one
/// event over a common prior set. Normalizes through the minimal
/// representation first; the posterior inclusion always agrees with the
/// normalized threshold order.
AmbiguityOrder compare_ambiguity_aversion(const CredalSet& set,
                                          const Event& event,
                                          const Rational& rho_first,
                                          const Rational& rho_second);

/// Maximal probability of the event over the set (the elicited upper
/// probability).
Rational max_probability(const CredalSet& set, const Event& event);

struct AMaximalResult {
  Rational probability;
  Prior witness;
};

/// Among priors in the set conditioning to the given distribution on the
/// event, one giving the event maximal probability. nullopt when no prior
/// in the set conditions to it. Ties share the probability; the witness
/// returned is the one the (deterministic) pivot rule lands on.
std::optional<AMaximalResult> a_maximal(const CredalSet& set,
                                        const Prior& conditional,
                                        const Event& event);

}  // namespace credalkit
