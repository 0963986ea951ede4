#include "scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace credalkit::cli {

ScenarioError::ScenarioError(std::size_t line, std::size_t column,
                             const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text.front())) &&
      text.front() != '_') {
    return false;
  }
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

// Whitespace-delimited tokens of one line, with 1-based columns.
struct Scanner {
  std::string_view line;
  std::size_t line_number;
  std::size_t pos = 0;
  std::size_t token_column = 1;  // start of the most recent token

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  bool done() {
    skip_space();
    return pos >= line.size();
  }

  // 1-based column of the next nonblank character.
  std::size_t column() {
    skip_space();
    return pos + 1;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ScenarioError(line_number, column(), what);
  }

  std::string_view token(const char* expectation) {
    skip_space();
    if (pos >= line.size()) fail(std::string("expected ") + expectation);
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    token_column = start + 1;
    return line.substr(start, pos - start);
  }

  // "( ... )" group, parens included.
  std::string_view paren_group() {
    skip_space();
    if (pos >= line.size() || line[pos] != '(') fail("expected '('");
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ')') ++pos;
    if (pos >= line.size()) {
      throw ScenarioError(line_number, start + 1, "unterminated '('");
    }
    ++pos;
    token_column = start + 1;
    return line.substr(start, pos - start);
  }

  std::string rest() {
    skip_space();
    std::string_view tail = line.substr(pos);
    while (!tail.empty() && (tail.back() == ' ' || tail.back() == '\t')) {
      tail.remove_suffix(1);
    }
    pos = line.size();
    return std::string(tail);
  }
};

struct Builder {
  std::optional<StateSpace> states;
  std::map<std::string, CredalSet> sets;
  std::map<std::string, Act> acts;
  std::map<std::string, Event> events;
  std::map<std::string, ThresholdPolicy> thresholds;
  std::vector<std::string> queries;
  std::vector<std::string> taken_names;

  const StateSpace& space(Scanner& scanner) const {
    if (!states) scanner.fail("'states' must be declared first");
    return *states;
  }

  std::string claim_name(Scanner& scanner, std::string_view raw) {
    const std::size_t column = scanner.token_column;
    std::string name(raw);
    if (!is_identifier(name)) {
      throw ScenarioError(scanner.line_number, column,
                          "invalid name '" + name + "'");
    }
    if (name == "S") {
      throw ScenarioError(scanner.line_number, column,
                          "'S' is reserved for the full event");
    }
    for (const auto& taken : taken_names) {
      if (taken == name) {
        throw ScenarioError(scanner.line_number, column,
                            "duplicate name '" + name + "'");
      }
    }
    taken_names.push_back(name);
    return name;
  }
};

Rational parse_rational_at(Scanner& scanner, std::string_view text,
                           std::size_t column) {
  auto value = parse_rational(text);
  if (!value) {
    throw ScenarioError(scanner.line_number, column,
                        "invalid rational '" + std::string(text) + "'");
  }
  return *value;
}

void expect_equals(Scanner& scanner) {
  if (scanner.token("'='") != "=") scanner.fail("expected '='");
}

void parse_states(Scanner& scanner, Builder& builder) {
  if (builder.states) scanner.fail("'states' declared twice");
  std::vector<std::string> labels;
  while (!scanner.done()) {
    const std::size_t column = scanner.column();
    std::string label(scanner.token("state label"));
    if (!is_identifier(label)) {
      throw ScenarioError(scanner.line_number, column,
                          "invalid state label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }
  if (labels.empty()) scanner.fail("expected at least one state label");
  try {
    builder.states.emplace(std::move(labels));
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(scanner.line_number, 1, error.what());
  }
}

void parse_set(Scanner& scanner, Builder& builder) {
  const StateSpace& space = builder.space(scanner);
  std::string name = builder.claim_name(scanner, scanner.token("set name"));
  expect_equals(scanner);
  std::vector<Prior> priors;
  while (!scanner.done()) {
    const std::size_t column = scanner.column();
    std::string_view group = scanner.paren_group();
    auto coords = parse_point(group);
    if (!coords) {
      throw ScenarioError(scanner.line_number, column, "invalid point");
    }
    if (coords->size() != space.size()) {
      throw ScenarioError(scanner.line_number, column,
                          "point has " + std::to_string(coords->size()) +
                              " coordinates, expected " +
                              std::to_string(space.size()));
    }
    try {
      priors.emplace_back(std::move(*coords));
    } catch (const std::invalid_argument& error) {
      throw ScenarioError(scanner.line_number, column, error.what());
    }
  }
  if (priors.empty()) scanner.fail("expected at least one vertex");
  builder.sets.emplace(std::move(name), CredalSet(space, std::move(priors)));
}

void parse_act(Scanner& scanner, Builder& builder) {
  const StateSpace& space = builder.space(scanner);
  std::string name = builder.claim_name(scanner, scanner.token("act name"));
  expect_equals(scanner);
  Point payoffs;
  while (!scanner.done()) {
    const std::size_t column = scanner.column();
    payoffs.push_back(
        parse_rational_at(scanner, scanner.token("payoff"), column));
  }
  if (payoffs.size() != space.size()) {
    scanner.fail("act has " + std::to_string(payoffs.size()) +
                 " payoffs, expected " + std::to_string(space.size()));
  }
  builder.acts.emplace(std::move(name), Act(std::move(payoffs)));
}

void parse_event(Scanner& scanner, Builder& builder) {
  const StateSpace& space = builder.space(scanner);
  std::string name = builder.claim_name(scanner, scanner.token("event name"));
  expect_equals(scanner);
  std::vector<std::string> labels;
  while (!scanner.done()) {
    const std::size_t column = scanner.column();
    std::string label(scanner.token("state label"));
    if (!space.index_of(label)) {
      throw ScenarioError(scanner.line_number, column,
                          "unknown state label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }
  if (labels.empty()) scanner.fail("expected at least one state label");
  builder.events.emplace(std::move(name), space.event_of(labels));
}

void parse_threshold(Scanner& scanner, Builder& builder) {
  builder.space(scanner);
  std::string name =
      builder.claim_name(scanner, scanner.token("threshold name"));
  expect_equals(scanner);
  const std::size_t default_column = scanner.column();
  ThresholdPolicy policy;
  try {
    policy = ThresholdPolicy(parse_rational_at(
        scanner, scanner.token("default threshold"), default_column));
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(scanner.line_number, default_column, error.what());
  }
  while (!scanner.done()) {
    const std::size_t column = scanner.column();
    const std::string entry(scanner.token("event:threshold entry"));
    const auto colon = entry.find(':');
    if (colon == std::string::npos) {
      throw ScenarioError(scanner.line_number, column,
                          "expected '<event>:<threshold>'");
    }
    const std::string event_name = entry.substr(0, colon);
    auto found = builder.events.find(event_name);
    if (found == builder.events.end()) {
      throw ScenarioError(scanner.line_number, column,
                          "unknown event '" + event_name + "'");
    }
    const Rational value = parse_rational_at(
        scanner, std::string_view(entry).substr(colon + 1), column + colon + 1);
    try {
      policy.set(found->second, value);
    } catch (const std::invalid_argument& error) {
      throw ScenarioError(scanner.line_number, column, error.what());
    }
  }
  builder.thresholds.emplace(std::move(name), std::move(policy));
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Builder builder;
  std::size_t line_number = 0;
  std::size_t consumed = 0;
  while (consumed <= text.size()) {
    const std::size_t newline = text.find('\n', consumed);
    std::string_view line = text.substr(
        consumed, newline == std::string_view::npos ? text.size() - consumed
                                                    : newline - consumed);
    consumed += line.size() + 1;
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Scanner scanner{line, line_number};
    if (scanner.done()) {
      if (newline == std::string_view::npos) break;
      continue;
    }
    const std::string_view directive = scanner.token("directive");
    if (directive == "states") {
      parse_states(scanner, builder);
    } else if (directive == "set") {
      parse_set(scanner, builder);
    } else if (directive == "act") {
      parse_act(scanner, builder);
    } else if (directive == "event") {
      parse_event(scanner, builder);
    } else if (directive == "threshold") {
      parse_threshold(scanner, builder);
    } else if (directive == "query") {
      builder.queries.push_back(scanner.rest());
    } else {
      throw ScenarioError(line_number, scanner.token_column,
                          "unknown directive '" + std::string(directive) + "'");
    }
    if (newline == std::string_view::npos) break;
  }
  if (!builder.states) {
    throw ScenarioError(line_number, 1, "scenario declares no states");
  }
  return Scenario{std::move(*builder.states), std::move(builder.sets),
                  std::move(builder.acts),    std::move(builder.events),
                  std::move(builder.thresholds),
                  std::move(builder.queries)};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open scenario file '" + path + "'");
  std::ostringstream content;
  content << file.rdbuf();
  return parse_scenario(content.str());
}

const CredalSet& Scenario::set_ref(const std::string& name) const {
  auto found = sets.find(name);
  if (found == sets.end()) throw UsageError("unknown set '" + name + "'");
  return found->second;
}

const CredalSet& Scenario::default_set() const {
  if (sets.size() != 1) {
    throw UsageError("the command needs a scenario with exactly one set (" +
                     std::to_string(sets.size()) + " declared)");
  }
  return sets.begin()->second;
}

const Act& Scenario::act_ref(const std::string& name) const {
  auto found = acts.find(name);
  if (found == acts.end()) throw UsageError("unknown act '" + name + "'");
  return found->second;
}

Event Scenario::event_ref(const std::string& name) const {
  auto found = events.find(name);
  if (found != events.end()) return found->second;
  if (name == "S") return states.full_event();
  throw UsageError("unknown event '" + name + "'");
}

const ThresholdPolicy& Scenario::threshold_ref(const std::string& name) const {
  auto found = thresholds.find(name);
  if (found == thresholds.end()) {
    throw UsageError("unknown threshold policy '" + name + "'");
  }
  return found->second;
}

std::string format_vertices(const CredalSet& set) {
  std::string out;
  for (const auto& vertex : set.polytope().vertices) {
    if (!out.empty()) out += ";";
    out += format_point(vertex);
  }
  return out;
}

namespace {

std::string event_labels(const StateSpace& space, const Event& event) {
  std::string out;
  for (std::size_t s = 0; s < space.size(); ++s) {
    if (!event.contains(s)) continue;
    if (!out.empty()) out += " ";
    out += space.label(s);
  }
  return out;
}

}  // namespace

std::string format_scenario(const Scenario& scenario) {
  std::ostringstream out;
  out << "states";
  for (const auto& label : scenario.states.labels()) out << " " << label;
  out << "\n";
  for (const auto& [name, set] : scenario.sets) {
    out << "set " << name << " =";
    for (const auto& vertex : set.polytope().vertices) {
      out << " " << format_point(vertex);
    }
    out << "\n";
  }
  for (const auto& [name, act] : scenario.acts) {
    out << "act " << name << " =";
    for (const auto& payoff : act.payoffs()) {
      out << " " << format_rational(payoff);
    }
    out << "\n";
  }
  for (const auto& [name, event] : scenario.events) {
    out << "event " << name << " = " << event_labels(scenario.states, event)
        << "\n";
  }
  for (const auto& [name, policy] : scenario.thresholds) {
    out << "threshold " << name << " = "
        << format_rational(policy.default_threshold());
    for (const auto& [event, value] : policy.entries()) {
      // reverse lookup of a declared event name for canonical output
      for (const auto& [event_name, declared] : scenario.events) {
        if (declared == event) {
          out << " " << event_name << ":" << format_rational(value);
          break;
        }
      }
    }
    out << "\n";
  }
  for (const auto& query : scenario.queries) {
    out << "query " << query << "\n";
  }
  return out.str();
}

UpdateRule parse_rule(const Scenario& scenario, const std::string& spec) {
  if (spec == "fb") return FullBayes{};
  if (spec == "ml") return MaxLikelihood{};
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    const std::string parameter = spec.substr(colon + 1);
    if (kind == "pb") {
      if (auto rho = parse_rational(parameter)) {
        if (*rho < 0 || *rho > 1) {
          throw UsageError("threshold '" + parameter + "' outside [0,1]");
        }
        return ConstantPartialBayes{*rho};
      }
      return PartialBayes{scenario.threshold_ref(parameter)};
    }
    if (kind == "rml") {
      if (auto weight = parse_rational(parameter)) {
        if (*weight < 0 || *weight > 1) {
          throw UsageError("contraction '" + parameter + "' outside [0,1]");
        }
        return RelativeMaxLikelihood{*weight};
      }
    }
  }
  throw UsageError("unknown update rule '" + spec +
                   "' (use fb, ml, pb:<rho>, pb:<policy>, rml:<s>)");
}

}  // namespace credalkit::cli
