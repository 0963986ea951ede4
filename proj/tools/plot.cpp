#include "plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace credalkit::cli {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

void require_three_states(const std::vector<PlotSeries>& series) {
  for (const auto& s : series) {
    for (const auto& vertex : s.polytope.vertices) {
      if (vertex.size() != 3) {
        throw std::invalid_argument(
            "plot: barycentric output needs a three-state space");
      }
    }
  }
}

// Planar embedding with rational coordinates; the true y is sqrt(3) times
// the second component, which only matters for decimal output.
struct Planar {
  Rational x;
  Rational y_over_sqrt3;
};

Planar embed(const Point& vertex) {
  return Planar{vertex[1] + vertex[2] / 2, vertex[2] / 2};
}

std::string decimal(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9f", value);
  return buffer;
}

Rational cross(const Planar& o, const Planar& a, const Planar& b) {
  return (a.x - o.x) * (b.y_over_sqrt3 - o.y_over_sqrt3) -
         (a.y_over_sqrt3 - o.y_over_sqrt3) * (b.x - o.x);
}

// Counterclockwise hull cycle over pruned (all-extreme) vertices; indices
// refer to the input order. Monotone chain with exact orientation tests.
std::vector<std::size_t> polygon_cycle(const std::vector<Point>& vertices) {
  const std::size_t n = vertices.size();
  if (n <= 2) {
    std::vector<std::size_t> trivial(n);
    for (std::size_t i = 0; i < n; ++i) trivial[i] = i;
    return trivial;
  }
  std::vector<Planar> planar;
  planar.reserve(n);
  for (const auto& v : vertices) planar.push_back(embed(v));

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (planar[a].x != planar[b].x) return planar[a].x < planar[b].x;
    return planar[a].y_over_sqrt3 < planar[b].y_over_sqrt3;
  });

  std::vector<std::size_t> hull;
  auto build = [&](auto begin, auto end) {
    const std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(planar[hull[hull.size() - 2]], planar[hull.back()],
                   planar[*it]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
  };
  build(order.begin(), order.end());
  hull.pop_back();
  build(order.rbegin(), order.rend());
  hull.pop_back();
  return hull;
}

}  // namespace

std::string render_plot_data(const std::vector<PlotSeries>& series) {
  require_three_states(series);
  std::ostringstream out;
  out << "# barycentric plot data (equilateral-triangle embedding)\n";
  out << "# point\tset\tvertex\tp1\tp2\tp3\tx\ty/sqrt3\tx_approx\ty_approx\n";
  out << "# edge\tset\tfrom\tto\n";
  for (const auto& s : series) {
    const auto& vertices = s.polytope.vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const Planar planar = embed(vertices[i]);
      out << "point\t" << s.label << "\t" << i;
      for (const auto& coordinate : vertices[i]) {
        out << "\t" << format_rational(coordinate);
      }
      out << "\t" << format_rational(planar.x) << "\t"
          << format_rational(planar.y_over_sqrt3) << "\t"
          << decimal(to_double(planar.x)) << "\t"
          << decimal(to_double(planar.y_over_sqrt3) * kSqrt3) << "\n";
    }
  }
  for (const auto& s : series) {
    const auto cycle = polygon_cycle(s.polytope.vertices);
    if (cycle.size() < 2) continue;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
      out << "edge\t" << s.label << "\t" << cycle[i] << "\t" << cycle[i + 1]
          << "\n";
    }
    if (cycle.size() >= 3) {
      out << "edge\t" << s.label << "\t" << cycle.back() << "\t" << cycle[0]
          << "\n";
    }
  }
  return out.str();
}

std::string render_plot_svg(const std::vector<PlotSeries>& series) {
  require_three_states(series);
  constexpr double kScale = 480.0;
  constexpr double kMargin = 40.0;
  constexpr double kHeight = kSqrt3 / 2;
  const auto px = [&](double x) { return kMargin + x * kScale; };
  const auto py = [&](double y) { return kMargin + (kHeight - y) * kScale; };
  const std::array<const char*, 6> palette = {"#1b6ca8", "#b54d1f", "#3f7d20",
                                              "#7a2f8f", "#a8871b", "#555555"};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << decimal(2 * kMargin + kScale) << "\" height=\""
      << decimal(2 * kMargin + kHeight * kScale) << "\">\n";
  out << "  <polygon points=\"" << decimal(px(0)) << "," << decimal(py(0))
      << " " << decimal(px(1)) << "," << decimal(py(0)) << " "
      << decimal(px(0.5)) << "," << decimal(py(kHeight))
      << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1\"/>\n";

  std::size_t color = 0;
  for (const auto& s : series) {
    const char* stroke = palette[color++ % palette.size()];
    const auto& vertices = s.polytope.vertices;
    std::vector<std::pair<double, double>> coords;
    for (const auto& v : vertices) {
      const double x = to_double(v[1]) + to_double(v[2]) / 2;
      const double y = to_double(v[2]) * kHeight;
      coords.emplace_back(px(x), py(y));
    }
    if (coords.size() == 1) {
      out << "  <circle cx=\"" << decimal(coords[0].first) << "\" cy=\""
          << decimal(coords[0].second) << "\" r=\"3\" fill=\"" << stroke
          << "\"/>\n";
    } else {
      const auto cycle = polygon_cycle(vertices);
      out << "  <polygon points=\"";
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i != 0) out << " ";
        out << decimal(coords[cycle[i]].first) << ","
            << decimal(coords[cycle[i]].second);
      }
      out << "\" fill=\"none\" stroke=\"" << stroke
          << "\" stroke-width=\"1.5\"/>\n";
    }
    out << "  <text x=\"" << decimal(kMargin) << "\" y=\""
        << decimal(12.0 + 14.0 * static_cast<double>(color)) << "\" fill=\""
        << stroke << "\" font-size=\"12\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace credalkit::cli
