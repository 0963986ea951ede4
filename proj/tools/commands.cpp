#include "commands.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "plot.hpp"

namespace credalkit::cli {

namespace {

void cmd_update(const Scenario& scenario, const std::vector<std::string>& args,
                std::ostream& out) {
  if (args.size() != 3) {
    throw UsageError("usage: update <set> <event> <rule>");
  }
  const CredalSet posterior =
      update(scenario.set_ref(args[0]), scenario.event_ref(args[1]),
             parse_rule(scenario, args[2]));
  for (const auto& vertex : posterior.polytope().vertices) {
    out << format_point(vertex) << "\n";
  }
}

void cmd_prefer(const Scenario& scenario, const std::vector<std::string>& args,
                std::ostream& out) {
  if (args.size() != 2 && args.size() != 5) {
    throw UsageError("usage: prefer <f> <g> [given <event> <rule>]");
  }
  PreferenceContext context{scenario.default_set(), FullBayes{},
                            std::nullopt};
  if (args.size() == 5) {
    if (args[2] != "given") {
      throw UsageError("usage: prefer <f> <g> given <event> <rule>");
    }
    context.rule = parse_rule(scenario, args[4]);
    context.conditioning = scenario.event_ref(args[3]);
  }
  switch (prefer(context, scenario.act_ref(args[0]),
                 scenario.act_ref(args[1]))) {
    case PreferenceOrder::FirstStrict:
      out << "f_strict\n";
      break;
    case PreferenceOrder::SecondStrict:
      out << "g_strict\n";
      break;
    case PreferenceOrder::Indifferent:
      out << "indifferent\n";
      break;
  }
}

void cmd_check(const Scenario& scenario, const std::vector<std::string>& args,
               std::ostream& out) {
  if (args.size() != 5) {
    throw UsageError(
        "usage: check dc <f> <g> <event> <rule> | check wpc|pires <f> "
        "<sure-value> <event> <rule>");
  }
  const std::string& kind = args[0];
  const Act& f = scenario.act_ref(args[1]);
  const Event event = scenario.event_ref(args[3]);
  const PreferenceContext context{scenario.default_set(),
                                  parse_rule(scenario, args[4]), event};
  if (kind == "dc") {
    const auto report =
        check_dynamic_consistency(context, event, f, scenario.act_ref(args[2]));
    out << "forward=" << (report.forward ? "true" : "false")
        << " backward=" << (report.backward ? "true" : "false") << "\n";
    return;
  }
  const auto sure_value = parse_rational(args[2]);
  if (!sure_value) {
    throw UsageError("invalid sure value '" + args[2] + "'");
  }
  if (kind == "wpc") {
    out << "holds="
        << (check_weak_planning_consistency(context, event, f, *sure_value)
                ? "true"
                : "false")
        << "\n";
  } else if (kind == "pires") {
    out << "holds="
        << (check_pires_consistency(context, event, f, *sure_value) ? "true"
                                                                    : "false")
        << "\n";
  } else {
    throw UsageError("unknown check '" + kind + "' (use dc, wpc, pires)");
  }
}

void cmd_identify(const Scenario& scenario,
                  const std::vector<std::string>& args, std::ostream& out) {
  if (args.size() != 3) {
    throw UsageError("usage: identify <set> <event> <posterior-scenario>");
  }
  const Scenario posterior_scenario = load_scenario(args[2]);
  if (posterior_scenario.states != scenario.states) {
    throw UsageError("posterior scenario uses a different state space");
  }
  const CredalSet* posterior = nullptr;
  if (posterior_scenario.sets.size() == 1) {
    posterior = &posterior_scenario.sets.begin()->second;
  } else if (auto found = posterior_scenario.sets.find("posterior");
             found != posterior_scenario.sets.end()) {
    posterior = &found->second;
  } else {
    throw UsageError(
        "posterior scenario must declare exactly one set (or name it "
        "'posterior')");
  }
  const auto identified = identify_rho(scenario.set_ref(args[0]),
                                       scenario.event_ref(args[1]), *posterior);
  if (identified.is_point()) {
    out << "rho=" << format_rational(identified.rho()) << "\n";
  } else {
    out << "rho_lo=0 rho_hi=" << format_rational(identified.upper_bound())
        << "\n";
  }
}

void cmd_ipi(const Scenario& scenario, const std::vector<std::string>& args,
             std::ostream& out) {
  if (args.size() != 4 && args.size() != 5) {
    throw UsageError(
        "usage: ipi <set> <outer-event> <inner-event> <rho|policy> "
        "[<rho-inner>]");
  }
  const CredalSet& set = scenario.set_ref(args[0]);
  const Event outer = scenario.event_ref(args[1]);
  const Event inner = scenario.event_ref(args[2]);

  ThresholdPolicy policy;
  if (args.size() == 5) {
    const auto rho_outer = parse_rational(args[3]);
    const auto rho_inner = parse_rational(args[4]);
    if (!rho_outer || !rho_inner) {
      throw UsageError("invalid thresholds '" + args[3] + "' / '" + args[4] +
                       "'");
    }
    policy.set(outer, *rho_outer);
    policy.set(inner, *rho_inner);
  } else if (const auto rho = parse_rational(args[3])) {
    policy = ThresholdPolicy::constant(*rho);
  } else {
    policy = scenario.threshold_ref(args[3]);
  }

  const IpiReport report = check_ipi(set, outer, inner, policy);
  out << "holds=" << (report.holds ? "true" : "false") << "\n";
  out << "direct=" << format_vertices(report.direct) << "\n";
  out << "sequential=" << format_vertices(report.sequential) << "\n";
  if (report.witness) {
    out << "witness=" << format_point(report.witness->coordinates()) << "\n";
  }
}

void cmd_plot(const Scenario& scenario, const std::vector<std::string>& args,
              std::ostream& out) {
  std::vector<std::string> expressions;
  std::string data_path;
  std::string svg_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out" || args[i] == "-o") {
      if (++i == args.size()) throw UsageError("--out needs a path");
      data_path = args[i];
    } else if (args[i] == "--svg") {
      if (++i == args.size()) throw UsageError("--svg needs a path");
      svg_path = args[i];
    } else {
      expressions.push_back(args[i]);
    }
  }
  if (expressions.empty() || data_path.empty()) {
    throw UsageError(
        "usage: plot <set-expr>... --out <path> [--svg <path>]; a set "
        "expression is <set> or <set>@<event>:<rule>");
  }

  std::vector<PlotSeries> series;
  for (const auto& expression : expressions) {
    const auto at = expression.find('@');
    if (at == std::string::npos) {
      series.push_back(
          PlotSeries{expression, scenario.set_ref(expression).polytope()});
      continue;
    }
    const std::string set_name = expression.substr(0, at);
    const std::string conditioning = expression.substr(at + 1);
    const auto colon = conditioning.find(':');
    if (colon == std::string::npos) {
      throw UsageError("set expression '" + expression +
                       "' needs <set>@<event>:<rule>");
    }
    const CredalSet posterior =
        update(scenario.set_ref(set_name),
               scenario.event_ref(conditioning.substr(0, colon)),
               parse_rule(scenario, conditioning.substr(colon + 1)));
    series.push_back(PlotSeries{expression, posterior.polytope()});
  }

  std::ofstream data_file(data_path);
  if (!data_file) throw UsageError("cannot write '" + data_path + "'");
  data_file << render_plot_data(series);
  out << "wrote " << data_path << "\n";
  if (!svg_path.empty()) {
    std::ofstream svg_file(svg_path);
    if (!svg_file) throw UsageError("cannot write '" + svg_path + "'");
    svg_file << render_plot_svg(series);
    out << "wrote " << svg_path << "\n";
  }
}

}  // namespace

int dispatch(const Scenario& scenario, const std::vector<std::string>& args,
             std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("no command given");
    const std::string& command = args.front();
    const std::vector<std::string> rest(args.begin() + 1, args.end());
    if (command == "update") {
      cmd_update(scenario, rest, out);
    } else if (command == "prefer") {
      cmd_prefer(scenario, rest, out);
    } else if (command == "check") {
      cmd_check(scenario, rest, out);
    } else if (command == "identify") {
      cmd_identify(scenario, rest, out);
    } else if (command == "ipi") {
      cmd_ipi(scenario, rest, out);
    } else if (command == "plot") {
      cmd_plot(scenario, rest, out);
    } else {
      throw UsageError("unknown command '" + command + "'");
    }
    return kExitSuccess;
  } catch (const ScenarioError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const ConditioningError& error) {
    err << "error: " << error.what() << "\n";
    return kExitDomain;
  } catch (const IdentificationError& error) {
    err << "error: " << error.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& error) {
    err << "error: " << error.what() << "\n";
    return kExitDomain;
  }
}

int run_queries(const Scenario& scenario, std::ostream& out,
                std::ostream& err) {
  for (const auto& query : scenario.queries) {
    out << "## " << query << "\n";
    std::istringstream words(query);
    std::vector<std::string> args;
    std::string word;
    while (words >> word) args.push_back(word);
    if (const int code = dispatch(scenario, args, out, err); code != 0) {
      return code;
    }
  }
  return kExitSuccess;
}

}  // namespace credalkit::cli
