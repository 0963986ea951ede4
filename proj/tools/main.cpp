#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using credalkit::cli::dispatch;
using credalkit::cli::kExitUsage;
using credalkit::cli::load_scenario;
using credalkit::cli::run_demo;
using credalkit::cli::run_queries;
using credalkit::cli::Scenario;
using credalkit::cli::ScenarioError;
using credalkit::cli::UsageError;

struct ScenarioCommand {
  CLI::App* app = nullptr;
  std::string scenario_path;
  std::vector<std::string> arguments;
};

ScenarioCommand* add_scenario_command(CLI::App& app,
                                      std::vector<ScenarioCommand>& commands,
                                      const std::string& name,
                                      const std::string& description,
                                      const std::string& argument_hint) {
  commands.push_back(ScenarioCommand{});
  ScenarioCommand& command = commands.back();
  command.app = app.add_subcommand(name, description);
  command.app->add_option("scenario", command.scenario_path, "scenario file")
      ->required();
  command.app
      ->add_option("args", command.arguments, argument_hint)
      ->take_all();
  return &command;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "credalkit: exact updating of convex prior sets, maxmin evaluation, "
      "and consistency checks, driven by scenario files"};
  app.require_subcommand(1);

  // Reserve storage up front so pointers into the vector stay valid.
  std::vector<ScenarioCommand> commands;
  commands.reserve(8);

  add_scenario_command(app, commands, "update",
                       "condition a credal set on an event",
                       "<set> <event> <rule>");
  add_scenario_command(app, commands, "prefer",
                       "compare two acts by worst-case expected payoff",
                       "<f> <g> [given <event> <rule>]");
  add_scenario_command(
      app, commands, "check",
      "evaluate a consistency condition on one instance",
      "dc <f> <g> <event> <rule> | wpc|pires <f> <sure-value> <event> <rule>");
  add_scenario_command(app, commands, "identify",
                       "recover the inference threshold from a posterior",
                       "<set> <event> <posterior-scenario>");
  add_scenario_command(app, commands, "ipi",
                       "test informational path independence on nested events",
                       "<set> <outer> <inner> <rho|policy> [<rho-inner>]");
  ScenarioCommand* plot = add_scenario_command(
      app, commands, "plot",
      "export barycentric plot data for three-state sets",
      "set expressions: <set> or <set>@<event>:<rule>");
  std::string plot_out_path;
  std::string plot_svg_path;
  plot->app->add_option("--out,-o", plot_out_path, "plot data output path")
      ->required();
  plot->app->add_option("--svg", plot_svg_path,
                        "also write a vector-graphic outline");

  CLI::App* run = app.add_subcommand(
      "run", "execute the scenario's scripted query lines");
  std::string run_scenario_path;
  run->add_option("scenario", run_scenario_path, "scenario file")->required();

  CLI::App* demo = app.add_subcommand(
      "demo", "run a built-in walkthrough against its embedded oracle");
  std::string demo_name;
  demo->add_option("name", demo_name,
                   "kate | reversal2 | contamination | rml | ipi")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (demo->parsed()) {
      return run_demo(demo_name, std::cout, std::cerr);
    }
    if (run->parsed()) {
      const Scenario scenario = load_scenario(run_scenario_path);
      return run_queries(scenario, std::cout, std::cerr);
    }
    for (const auto& command : commands) {
      if (!command.app->parsed()) continue;
      const Scenario scenario = load_scenario(command.scenario_path);
      std::vector<std::string> args{command.app->get_name()};
      args.insert(args.end(), command.arguments.begin(),
                  command.arguments.end());
      if (command.app == plot->app) {
        args.insert(args.end(), {"--out", plot_out_path});
        if (!plot_svg_path.empty()) {
          args.insert(args.end(), {"--svg", plot_svg_path});
        }
      }
      return dispatch(scenario, args, std::cout, std::cerr);
    }
  } catch (const ScenarioError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
