#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "credalkit/preference.hpp"

namespace credalkit {

struct PathStep {
  Event event;
  Rational threshold;
};

/// Nested chain of observations: each event is a (weak) subset of the
/// previous one, with a per-step inference threshold.
class InformationPath {
 public:
  explicit InformationPath(std::vector<PathStep> steps);

  const std::vector<PathStep>& steps() const { return steps_; }

 private:
  std::vector<PathStep> steps_;
};

enum class SequenceMode {
  Sequential,      // fold the update through the chain
  FreshPosterior,  // re-derive each posterior from the original set
};

/// Folds partial-bayesian updating along the path. Throws
/// ConditioningError if any step's event stops being strongly nonnull for
/// the set current at that step.
CredalSet sequential_update(const CredalSet& set, const InformationPath& path,
                            SequenceMode mode = SequenceMode::Sequential);

struct IpiReport {
  bool holds;
  CredalSet direct;      // one-shot update at the inner event
  CredalSet sequential;  // outer-then-inner update
  std::optional<Prior> witness;  // vertex of one set outside the other
};

/// Informational path independence at a nested pair: the inner-event
/// posterior computed directly must equal the one computed through the
/// outer event, both under the given policy.
IpiReport check_ipi(const CredalSet& set, const Event& outer,
                    const Event& inner, const ThresholdPolicy& policy);

struct IpiViolation {
  Rational rho_outer;
  Rational rho_inner;
  /// Whether the sufficient condition held at rho_outer: some prior's
  /// in-inner-event odds differ from those of every retained prior.
  bool premise_holds;
};

/// Scans the grid (descending, outer-major) for a threshold pair at which
/// path independence fails.
std::optional<IpiViolation> find_ipi_violation(
    const CredalSet& set, const Event& outer, const Event& inner,
    const std::vector<Rational>& grid);

/// Finds a single constant threshold generating all observed posteriors:
/// identifies per event, intersects the results, returns the smallest
/// consistent value (absent when the intersection is empty). Throws
/// IdentificationError if an observation is not reproducible at all.
std::optional<Rational> constant_rho_consistent(
    const CredalSet& set,
    const std::vector<std::pair<Event, CredalSet>>& observations);

}  // namespace credalkit
