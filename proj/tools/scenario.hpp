#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "credalkit/dynamics.hpp"

namespace credalkit::cli {

/// Parse failure with a 1-based position.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Unresolvable name or malformed command argument.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed scenario file: one state space plus named sets, acts, events
/// and threshold policies, and an optional scripted query list.
struct Scenario {
  StateSpace states;
  std::map<std::string, CredalSet> sets;
  std::map<std::string, Act> acts;
  std::map<std::string, Event> events;
  std::map<std::string, ThresholdPolicy> thresholds;
  std::vector<std::string> queries;

  const CredalSet& set_ref(const std::string& name) const;
  /// The scenario's sole credal set, used by commands whose grammar does
  /// not name one; UsageError when the scenario has none or several.
  const CredalSet& default_set() const;
  const Act& act_ref(const std::string& name) const;
  /// Declared events by name; the name "S" resolves to the full space
  /// unless shadowed by a declaration.
  Event event_ref(const std::string& name) const;
  const ThresholdPolicy& threshold_ref(const std::string& name) const;
};

Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Canonical text form; parse_scenario(format_scenario(s)) reproduces s.
std::string format_scenario(const Scenario& scenario);

/// Vertices joined by ";" in canonical order, e.g. "(1/4, 3/4);(3/4, 1/4)".
std::string format_vertices(const CredalSet& set);

/// "fb" | "ml" | "pb:<rational>" | "pb:<policy-name>" | "rml:<rational>".
UpdateRule parse_rule(const Scenario& scenario, const std::string& spec);

}  // namespace credalkit::cli
