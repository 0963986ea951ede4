#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "credalkit/geometry.hpp"

namespace credalkit {

/// Thrown when conditioning is requested on an event that is not strongly
/// nonnull (some prior gives it probability zero, or the event is empty).
/// The conditional preference is undefined there, so we refuse rather
/// than guess.
class ConditioningError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Event;

/// Ordered, named finite state space.
class StateSpace {
 public:
  explicit StateSpace(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Resolves state labels to an event; throws std::invalid_argument on
  /// an unknown label.
  Event event_of(std::span<const std::string> labels) const;
  Event full_event() const;

  bool operator==(const StateSpace&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Subset of the state space, bitmask semantics. Spaces beyond 64 states
/// are outside the design envelope and are rejected.
class Event {
 public:
  Event() = default;
  Event(std::size_t space_size, std::uint64_t bits);
  static Event from_indices(std::size_t space_size,
                            std::span<const std::size_t> indices);
  static Event full(std::size_t space_size);
  static Event none(std::size_t space_size);

  std::size_t space_size() const { return space_size_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t index) const;
  std::size_t count() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const;
  bool is_subset_of(const Event& other) const;
  Event complement() const;

  /// 0/1 vector, the linear functional pi -> pi(A).
  Point indicator() const;

  auto operator<=>(const Event&) const = default;

 private:
  std::uint64_t bits_ = 0;
  std::size_t space_size_ = 0;
};

/// Probability distribution over the state space: coordinates >= 0 summing
/// to exactly 1.
class Prior {
 public:
  explicit Prior(Point coordinates);

  const Point& coordinates() const { return coordinates_; }
  std::size_t size() const { return coordinates_.size(); }
  const Rational& operator[](std::size_t i) const { return coordinates_[i]; }
  Rational probability(const Event& event) const;

  /// Bayes update conditional on the event: mass renormalized inside,
  /// zero outside. ConditioningError when the event has probability zero.
  Prior bayes_update(const Event& event) const;

  bool operator==(const Prior&) const = default;
  auto operator<=>(const Prior&) const = default;

 private:
  Point coordinates_;
};

inline Prior bayes_update_prior(const Prior& prior, const Event& event) {
  return prior.bayes_update(event);
}

/// Convex set of priors in minimal canonical V-representation. The
/// constructor prunes, so two sets with the same hull compare equal.
class CredalSet {
 public:
  CredalSet(StateSpace space, std::vector<Prior> priors);

  const StateSpace& space() const { return space_; }
  const VPolytope& polytope() const { return polytope_; }
  std::size_t vertex_count() const { return polytope_.vertices.size(); }
  std::vector<Prior> vertices() const;
  bool contains(const Prior& prior) const;

  bool operator==(const CredalSet&) const = default;

 private:
  StateSpace space_;
  VPolytope polytope_;
};

/// Event-indexed inference thresholds in [0,1]. Unlisted events fall back
/// to the default, which is 0 (full-bayesian behaviour) unless set
/// otherwise.
class ThresholdPolicy {
 public:
  ThresholdPolicy() = default;
  explicit ThresholdPolicy(Rational default_threshold);
  static ThresholdPolicy constant(Rational threshold);

  void set(const Event& event, Rational threshold);
  const Rational& at(const Event& event) const;
  const Rational& default_threshold() const { return default_; }
  const std::map<Event, Rational>& entries() const { return per_event_; }

 private:
  Rational default_ = 0;
  std::map<Event, Rational> per_event_;
};

struct FullBayes {};
struct MaxLikelihood {};
struct PartialBayes {
  ThresholdPolicy policy;
};
struct ConstantPartialBayes {
  Rational threshold;
};
struct RelativeMaxLikelihood {
  Rational contraction;  // s in [0,1]: 0 keeps the set, 1 contracts fully
};

using UpdateRule = std::variant<FullBayes, MaxLikelihood, PartialBayes,
                                ConstantPartialBayes, RelativeMaxLikelihood>;

/// The threshold the rule applies at this event: 0 for FullBayes, 1 for
/// MaxLikelihood, the policy value for the partial-bayes rules. nullopt
/// for RelativeMaxLikelihood, which is not a likelihood-threshold rule.
std::optional<Rational> rule_threshold(const UpdateRule& rule,
                                       const Event& event);

struct ProbabilityBounds {
  Rational min;
  Rational max;
};

/// Exact min and max of pi(A) over the set (attained at vertices).
ProbabilityBounds event_prob_bounds(const CredalSet& set, const Event& event);

/// True iff every prior in the set gives the event positive probability.
bool is_strongly_nonnull(const CredalSet& set, const Event& event);

/// Updates the set conditional on the event. Throws ConditioningError when
/// the event is not strongly nonnull.
CredalSet update(const CredalSet& set, const Event& event,
                 const UpdateRule& rule);

/// The pre-update mixture (1-s)·C + s·C*(A), where C*(A) is the face of
/// priors giving the event maximal probability. Exposed separately so the
/// retained/excluded structure can be inspected before Bayes updating.
CredalSet rml_contracted_set(const CredalSet& set, const Event& event,
                             const Rational& contraction);

/// Hull of {(1-epsilon)·reference + epsilon·p : p vertex of ambient}.
CredalSet epsilon_contamination(const Prior& reference,
                                const CredalSet& ambient,
                                const Rational& epsilon);

/// Closed-form retention test for the reference prior of a contaminated
/// set: reference(A) >= rho·epsilon/(1-(1-epsilon)·rho) · max_{p} p(A).
/// Requires the denominator to be positive.
bool reference_retained(const Prior& reference, const CredalSet& ambient,
                        const Rational& epsilon, const Rational& rho,
                        const Event& event);

}  // namespace credalkit
