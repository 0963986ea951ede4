#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace credalkit::cli {

// Exit-code contract: 0 success, 2 usage (bad arguments, parse or lookup
// failures), 3 domain error (conditioning, infeasibility, dimension),
// 4 demo oracle mismatch.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitOracleMismatch = 4;

/// Runs one scenario command ("update", "prefer", "check", "identify",
/// "ipi", "plot") given its positional arguments; maps errors onto the
/// exit-code contract.
int dispatch(const Scenario& scenario, const std::vector<std::string>& args,
             std::ostream& out, std::ostream& err);

/// Executes every scripted query of the scenario in order; stops at the
/// first failing one.
int run_queries(const Scenario& scenario, std::ostream& out,
                std::ostream& err);

/// Built-in paper-style walkthroughs with embedded expected values:
/// kate, reversal2, contamination, rml, ipi.
int run_demo(const std::string& name, std::ostream& out, std::ostream& err);

std::vector<std::string> demo_names();

}  // namespace credalkit::cli
