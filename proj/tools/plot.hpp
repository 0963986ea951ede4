#pragma once

#include <string>
#include <vector>

#include "credalkit/credal.hpp"

namespace credalkit::cli {

struct PlotSeries {
  std::string label;
  VPolytope polytope;
};

/// Tab-separated plot rows for three-state sets, barycentric coordinates
/// under the standard equilateral-triangle embedding. Exact columns carry
/// x and y/sqrt(3) as rationals; decimal approximations sit alongside.
/// Throws std::invalid_argument unless every vertex has three coordinates.
std::string render_plot_data(const std::vector<PlotSeries>& series);

/// Minimal vector-graphic outline: the simplex triangle plus one hull per
/// series.
std::string render_plot_svg(const std::vector<PlotSeries>& series);

}  // namespace credalkit::cli
