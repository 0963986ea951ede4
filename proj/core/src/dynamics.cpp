#include "credalkit/dynamics.hpp"

#include <algorithm>

namespace credalkit {

InformationPath::InformationPath(std::vector<PathStep> steps)
    : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i].threshold < 0 || steps_[i].threshold > 1) {
      throw std::invalid_argument("path: threshold outside [0,1]");
    }
    if (steps_[i].event.is_empty()) {
      throw std::invalid_argument("path: empty event");
    }
    if (i > 0 && !steps_[i].event.is_subset_of(steps_[i - 1].event)) {
      throw std::invalid_argument("path: events must be weakly decreasing");
    }
  }
}

CredalSet sequential_update(const CredalSet& set, const InformationPath& path,
                            SequenceMode mode) {
  CredalSet current = set;
  for (const auto& step : path.steps()) {
    const CredalSet& base =
        mode == SequenceMode::FreshPosterior ? set : current;
    current = update(base, step.event, ConstantPartialBayes{step.threshold});
  }
  return current;
}

namespace {

std::optional<Prior> symmetric_difference_witness(const CredalSet& a,
                                                  const CredalSet& b) {
  for (const auto& vertex : a.polytope().vertices) {
    if (!hull_membership(vertex, b.polytope())) return Prior(vertex);
  }
  for (const auto& vertex : b.polytope().vertices) {
    if (!hull_membership(vertex, a.polytope())) return Prior(vertex);
  }
  return std::nullopt;
}

void require_nested(const Event& outer, const Event& inner) {
  if (!inner.is_subset_of(outer) || inner == outer) {
    throw std::invalid_argument(
        "events must be strictly nested (inner inside outer)");
  }
}

}  // namespace

IpiReport check_ipi(const CredalSet& set, const Event& outer,
                    const Event& inner, const ThresholdPolicy& policy) {
  require_nested(outer, inner);
  CredalSet direct = update(set, inner, PartialBayes{policy});
  CredalSet through_outer = update(update(set, outer, PartialBayes{policy}),
                                   inner, PartialBayes{policy});
  const bool holds = direct == through_outer;
  std::optional<Prior> witness;
  if (!holds) witness = symmetric_difference_witness(direct, through_outer);
  return IpiReport{holds, std::move(direct), std::move(through_outer),
                   std::move(witness)};
}

namespace {

// Sufficient condition for a violation at the outer threshold: some prior
// whose odds between two inner-event states differ from those of every
// prior retained at the outer event. Checked exactly: the bilinear form
// pi(s)·mu(s') - pi(s')·mu(s) must keep one strict sign over the retained
// polytope, and both extremes are attained at vertices.
bool violation_premise(const CredalSet& set, const Event& outer,
                       const Event& inner, const Rational& rho_outer) {
  const Rational max_outer = event_prob_bounds(set, outer).max;
  const Halfspace selection{outer.indicator(), rho_outer * max_outer};
  const VPolytope retained = clip_halfspace(set.polytope(), selection);

  std::vector<std::size_t> inner_states;
  for (std::size_t s = 0; s < inner.space_size(); ++s) {
    if (inner.contains(s)) inner_states.push_back(s);
  }
  for (const auto& pi : set.polytope().vertices) {
    for (std::size_t a = 0; a < inner_states.size(); ++a) {
      for (std::size_t b = a + 1; b < inner_states.size(); ++b) {
        const std::size_t s = inner_states[a];
        const std::size_t t = inner_states[b];
        bool always_positive = true;
        bool always_negative = true;
        for (const auto& mu : retained.vertices) {
          const Rational form = pi[s] * mu[t] - pi[t] * mu[s];
          always_positive = always_positive && form > 0;
          always_negative = always_negative && form < 0;
        }
        if (always_positive || always_negative) return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<IpiViolation> find_ipi_violation(
    const CredalSet& set, const Event& outer, const Event& inner,
    const std::vector<Rational>& grid) {
  require_nested(outer, inner);
  std::vector<Rational> thresholds = grid;
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  for (const auto& rho_outer : thresholds) {
    for (const auto& rho_inner : thresholds) {
      ThresholdPolicy policy;
      policy.set(outer, rho_outer);
      policy.set(inner, rho_inner);
      if (!check_ipi(set, outer, inner, policy).holds) {
        return IpiViolation{rho_outer, rho_inner,
                            violation_premise(set, outer, inner, rho_outer)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Rational> constant_rho_consistent(
    const CredalSet& set,
    const std::vector<std::pair<Event, CredalSet>>& observations) {
  // A revealing observation pins the threshold uniquely; unrevealing ones
  // admit a left-closed range. Membership in that range is decided by
  // reproduction rather than by the interval bound alone: a set whose
  // excluded priors share conditionals with retained ones can collapse to
  // the full-bayesian posterior at thresholds past the bound.
  std::optional<Rational> revealed;
  for (const auto& [event, posterior] : observations) {
    const IdentificationResult identified =
        identify_rho(set, event, posterior);
    if (identified.is_point()) {
      if (revealed && *revealed != identified.rho()) return std::nullopt;
      revealed = identified.rho();
    }
  }
  const Rational candidate = revealed.value_or(Rational(0));
  for (const auto& [event, posterior] : observations) {
    if (update(set, event, ConstantPartialBayes{candidate}) != posterior) {
      return std::nullopt;
    }
  }
  return candidate;
}

}  // namespace credalkit
