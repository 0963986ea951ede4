#include "credalkit/credal.hpp"

#include <algorithm>
#include <bit>

namespace credalkit {

StateSpace::StateSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("state space: no states");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("state space: duplicate label '" +
                                    labels_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> StateSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Event StateSpace::event_of(std::span<const std::string> labels) const {
  std::uint64_t bits = 0;
  for (const auto& label : labels) {
    auto index = index_of(label);
    if (!index) {
      throw std::invalid_argument("unknown state label '" + label + "'");
    }
    bits |= std::uint64_t{1} << *index;
  }
  return Event(size(), bits);
}

Event StateSpace::full_event() const { return Event::full(size()); }

Event::Event(std::size_t space_size, std::uint64_t bits)
    : bits_(bits), space_size_(space_size) {
  if (space_size == 0 || space_size > 64) {
    throw std::invalid_argument("event: unsupported state space size");
  }
  const std::uint64_t mask = space_size == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << space_size) - 1;
  if ((bits_ & ~mask) != 0) {
    throw std::invalid_argument("event: state index out of range");
  }
}

Event Event::from_indices(std::size_t space_size,
                          std::span<const std::size_t> indices) {
  std::uint64_t bits = 0;
  for (std::size_t index : indices) {
    if (index >= space_size) {
      throw std::invalid_argument("event: state index out of range");
    }
    bits |= std::uint64_t{1} << index;
  }
  return Event(space_size, bits);
}

Event Event::full(std::size_t space_size) {
  const std::uint64_t mask = space_size == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << space_size) - 1;
  return Event(space_size, mask);
}

Event Event::none(std::size_t space_size) { return Event(space_size, 0); }

bool Event::contains(std::size_t index) const {
  return index < space_size_ && (bits_ >> index & 1) != 0;
}

std::size_t Event::count() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

bool Event::is_full() const { return *this == Event::full(space_size_); }

bool Event::is_subset_of(const Event& other) const {
  return space_size_ == other.space_size_ && (bits_ & ~other.bits_) == 0;
}

Event Event::complement() const {
  return Event(space_size_, Event::full(space_size_).bits_ & ~bits_);
}

Point Event::indicator() const {
  Point out(space_size_, Rational(0));
  for (std::size_t i = 0; i < space_size_; ++i) {
    if (contains(i)) out[i] = 1;
  }
  return out;
}

Prior::Prior(Point coordinates) : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty()) {
    throw std::invalid_argument("prior: empty coordinate vector");
  }
  Rational total = 0;
  for (const auto& c : coordinates_) {
    if (c < 0) throw std::invalid_argument("prior: negative coordinate");
    total += c;
  }
  if (total != 1) {
    throw std::invalid_argument("prior: coordinates sum to " +
                                format_rational(total) + ", not 1");
  }
}

Rational Prior::probability(const Event& event) const {
  if (event.space_size() != coordinates_.size()) {
    throw std::invalid_argument("prior: event space mismatch");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (event.contains(i)) total += coordinates_[i];
  }
  return total;
}

Prior Prior::bayes_update(const Event& event) const {
  const Rational mass = probability(event);
  if (mass == 0) {
    throw ConditioningError("bayes update conditional on a zero-probability event");
  }
  Point updated(coordinates_.size(), Rational(0));
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (event.contains(i)) updated[i] = coordinates_[i] / mass;
  }
  return Prior(std::move(updated));
}

CredalSet::CredalSet(StateSpace space, std::vector<Prior> priors)
    : space_(std::move(space)) {
  if (priors.empty()) {
    throw std::invalid_argument("credal set: no priors");
  }
  VPolytope raw;
  raw.vertices.reserve(priors.size());
  for (auto& prior : priors) {
    if (prior.size() != space_.size()) {
      throw std::invalid_argument("credal set: prior dimension mismatch");
    }
    raw.vertices.push_back(prior.coordinates());
  }
  polytope_ = prune_redundant(raw);
}

std::vector<Prior> CredalSet::vertices() const {
  std::vector<Prior> out;
  out.reserve(polytope_.vertices.size());
  for (const auto& v : polytope_.vertices) out.emplace_back(v);
  return out;
}

bool CredalSet::contains(const Prior& prior) const {
  return hull_membership(prior.coordinates(), polytope_);
}

namespace {

Rational checked_threshold(Rational value, const char* what) {
  if (value < 0 || value > 1) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
  }
  return value;
}

}  // namespace

ThresholdPolicy::ThresholdPolicy(Rational default_threshold)
    : default_(checked_threshold(std::move(default_threshold),
                                 "threshold default")) {}

ThresholdPolicy ThresholdPolicy::constant(Rational threshold) {
  return ThresholdPolicy(std::move(threshold));
}

void ThresholdPolicy::set(const Event& event, Rational threshold) {
  per_event_[event] = checked_threshold(std::move(threshold), "threshold");
}

const Rational& ThresholdPolicy::at(const Event& event) const {
  auto found = per_event_.find(event);
  return found == per_event_.end() ? default_ : found->second;
}

std::optional<Rational> rule_threshold(const UpdateRule& rule,
                                       const Event& event) {
  struct Visitor {
    const Event& event;
    std::optional<Rational> operator()(const FullBayes&) const {
      return Rational(0);
    }
    std::optional<Rational> operator()(const MaxLikelihood&) const {
      return Rational(1);
    }
    std::optional<Rational> operator()(const PartialBayes& rule) const {
      return rule.policy.at(event);
    }
    std::optional<Rational> operator()(const ConstantPartialBayes& rule) const {
      return rule.threshold;
    }
    std::optional<Rational> operator()(const RelativeMaxLikelihood&) const {
      return std::nullopt;
    }
  };
  return std::visit(Visitor{event}, rule);
}

ProbabilityBounds event_prob_bounds(const CredalSet& set, const Event& event) {
  if (event.space_size() != set.space().size()) {
    throw std::invalid_argument("event space mismatch");
  }
  const Point indicator = event.indicator();
  Rational lo = dot(indicator, set.polytope().vertices.front());
  Rational hi = lo;
  for (const auto& v : set.polytope().vertices) {
    Rational p = dot(indicator, v);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return ProbabilityBounds{std::move(lo), std::move(hi)};
}

bool is_strongly_nonnull(const CredalSet& set, const Event& event) {
  if (event.is_empty()) return false;
  return event_prob_bounds(set, event).min > 0;
}

namespace {

CredalSet bayes_update_polytope(const CredalSet& set, const VPolytope& retained,
                                const Event& event) {
  // The Bayes map is linear-fractional on {pi : pi(A) > 0}, so it sends
  // the retained polytope's vertices onto a vertex superset of the image
  // polytope; pruning in the CredalSet constructor does the rest.
  std::vector<Prior> updated;
  updated.reserve(retained.vertices.size());
  for (const auto& v : retained.vertices) {
    updated.push_back(Prior(v).bayes_update(event));
  }
  return CredalSet(set.space(), std::move(updated));
}

void require_strongly_nonnull(const CredalSet& set, const Event& event) {
  if (!is_strongly_nonnull(set, event)) {
    throw ConditioningError(
        "conditioning event is not strongly nonnull for the set");
  }
}

}  // namespace

CredalSet update(const CredalSet& set, const Event& event,
                 const UpdateRule& rule) {
  require_strongly_nonnull(set, event);

  if (const auto* rml = std::get_if<RelativeMaxLikelihood>(&rule)) {
    CredalSet contracted = rml_contracted_set(set, event, rml->contraction);
    return bayes_update_polytope(contracted, contracted.polytope(), event);
  }

  const Rational rho =
      checked_threshold(*rule_threshold(rule, event), "inference threshold");
  const Rational max_likelihood = event_prob_bounds(set, event).max;
  // Eq-style selection: retain pi with pi(A) >= rho · max likelihood
  // (weak inequality, so thresholds exactly at the boundary keep ties).
  Halfspace selection{event.indicator(), rho * max_likelihood};
  VPolytope retained = clip_halfspace(set.polytope(), selection);
  return bayes_update_polytope(set, retained, event);
}

CredalSet rml_contracted_set(const CredalSet& set, const Event& event,
                             const Rational& contraction) {
  checked_threshold(contraction, "contraction weight");
  const LinearMax likelihood =
      maximize_linear(event.indicator(), set.polytope());

  // Mixture vertices: a Minkowski-style mixture of two polytopes has its
  // vertices among pairwise mixtures of theirs.
  std::vector<Prior> mixtures;
  for (const auto& v : set.polytope().vertices) {
    for (const auto& top : likelihood.argmax) {
      Point mixed(v.size());
      for (std::size_t d = 0; d < v.size(); ++d) {
        mixed[d] = (1 - contraction) * v[d] + contraction * top[d];
      }
      mixtures.emplace_back(std::move(mixed));
    }
  }
  return CredalSet(set.space(), std::move(mixtures));
}

CredalSet epsilon_contamination(const Prior& reference,
                                const CredalSet& ambient,
                                const Rational& epsilon) {
  checked_threshold(epsilon, "contamination weight");
  if (reference.size() != ambient.space().size()) {
    throw std::invalid_argument("contamination: dimension mismatch");
  }
  std::vector<Prior> mixtures;
  for (const auto& v : ambient.polytope().vertices) {
    Point mixed(v.size());
    for (std::size_t d = 0; d < v.size(); ++d) {
      mixed[d] = (1 - epsilon) * reference[d] + epsilon * v[d];
    }
    mixtures.emplace_back(std::move(mixed));
  }
  return CredalSet(ambient.space(), std::move(mixtures));
}

bool reference_retained(const Prior& reference, const CredalSet& ambient,
                        const Rational& epsilon, const Rational& rho,
                        const Event& event) {
  checked_threshold(epsilon, "contamination weight");
  checked_threshold(rho, "inference threshold");
  const Rational denominator = 1 - (1 - epsilon) * rho;
  if (denominator <= 0) {
    throw std::invalid_argument(
        "reference_retained: threshold/weight combination degenerate");
  }
  const Rational ambient_max = event_prob_bounds(ambient, event).max;
  return reference.probability(event) >=
         rho * epsilon / denominator * ambient_max;
}

}  // namespace credalkit
