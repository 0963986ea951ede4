#include "credalkit/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "credalkit/simplex_lp.hpp"

namespace credalkit {

Rational dot(const Point& a, const Point& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: dimension mismatch");
  }
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool satisfies(const Point& p, const Halfspace& h) {
  return dot(p, h.normal) >= h.offset;
}

namespace {

void require_uniform_dimension(const VPolytope& polytope) {
  if (polytope.vertices.empty()) {
    throw std::invalid_argument("polytope: no vertices");
  }
  const std::size_t dim = polytope.vertices.front().size();
  for (const auto& v : polytope.vertices) {
    if (v.size() != dim) {
      throw std::invalid_argument("polytope: mixed vertex dimensions");
    }
  }
}

// Feasibility of sum_i w_i v_i = p, sum_i w_i = 1, w >= 0, with optional
// extra equality rows over the points and an objective over the points.
LpProblem combination_problem(const VPolytope& polytope, const Point& objective,
                              const std::vector<LinearEquality>& equalities) {
  const std::size_t k = polytope.vertices.size();
  LpProblem lp;
  lp.objective.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    lp.objective[i] = dot(objective, polytope.vertices[i]);
  }
  lp.constraints.emplace_back(k, Rational(1));  // weights sum to one
  lp.rhs.emplace_back(1);
  for (const auto& eq : equalities) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) {
      row[i] = dot(eq.coefficients, polytope.vertices[i]);
    }
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(eq.rhs);
  }
  return lp;
}

}  // namespace

bool hull_membership(const Point& p, const VPolytope& polytope) {
  require_uniform_dimension(polytope);
  if (p.size() != polytope.vertices.front().size()) {
    throw std::invalid_argument("hull_membership: dimension mismatch");
  }
  const std::size_t k = polytope.vertices.size();
  LpProblem lp;
  lp.objective.assign(k, Rational(0));
  lp.constraints.emplace_back(k, Rational(1));
  lp.rhs.emplace_back(1);
  for (std::size_t d = 0; d < p.size(); ++d) {
    std::vector<Rational> row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = polytope.vertices[i][d];
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(p[d]);
  }
  return solve_simplex(lp).status == LpStatus::Optimal;
}

VPolytope prune_redundant(const VPolytope& polytope) {
  require_uniform_dimension(polytope);
  std::vector<Point> points = polytope.vertices;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 1) return VPolytope{std::move(points)};

  // With duplicates gone, a point is a vertex iff it is outside the hull
  // of all the others; the tests are independent of each other.
  std::vector<Point> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    VPolytope others;
    others.vertices.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.vertices.push_back(points[j]);
    }
    if (!hull_membership(points[i], others)) kept.push_back(points[i]);
  }
  return VPolytope{std::move(kept)};
}

LinearMax maximize_linear(const Point& objective, const VPolytope& polytope) {
  require_uniform_dimension(polytope);
  LinearMax result;
  result.value = dot(objective, polytope.vertices.front());
  for (const auto& v : polytope.vertices) {
    Rational value = dot(objective, v);
    if (value > result.value) result.value = value;
  }
  for (const auto& v : polytope.vertices) {
    if (dot(objective, v) == result.value) result.argmax.push_back(v);
  }
  return result;
}

std::optional<ConstrainedMax> constrained_maximize_linear(
    const Point& objective, const VPolytope& polytope,
    const std::vector<LinearEquality>& equalities) {
  require_uniform_dimension(polytope);
  LpProblem lp = combination_problem(polytope, objective, equalities);
  LpSolution lp_solution = solve_simplex(lp);
  if (lp_solution.status != LpStatus::Optimal) return std::nullopt;

  const std::size_t dim = polytope.vertices.front().size();
  Point witness(dim, Rational(0));
  for (std::size_t i = 0; i < polytope.vertices.size(); ++i) {
    if (lp_solution.variables[i] == 0) continue;
    for (std::size_t d = 0; d < dim; ++d) {
      witness[d] += lp_solution.variables[i] * polytope.vertices[i][d];
    }
  }
  return ConstrainedMax{lp_solution.value, std::move(witness)};
}

VPolytope clip_halfspace(const VPolytope& polytope,
                         const Halfspace& halfspace) {
  require_uniform_dimension(polytope);
  bool nonzero = false;
  for (const auto& c : halfspace.normal) nonzero = nonzero || c != 0;
  if (!nonzero) {
    throw std::invalid_argument("clip_halfspace: zero normal");
  }

  std::vector<Point> inside;
  std::vector<Point> outside;
  for (const auto& v : polytope.vertices) {
    (satisfies(v, halfspace) ? inside : outside).push_back(v);
  }
  if (inside.empty()) return VPolytope{{}};

  std::vector<Point> candidates = inside;
  for (const auto& sat : inside) {
    const Rational sat_value = dot(sat, halfspace.normal);
    for (const auto& bad : outside) {
      const Rational bad_value = dot(bad, halfspace.normal);
      // Segment crossing: (1-t)·bad + t·sat hits the boundary at
      // t = (offset - bad_value) / (sat_value - bad_value) in (0, 1].
      const Rational t = (halfspace.offset - bad_value) / (sat_value - bad_value);
      Point crossing(sat.size());
      for (std::size_t d = 0; d < sat.size(); ++d) {
        crossing[d] = bad[d] + t * (sat[d] - bad[d]);
      }
      candidates.push_back(std::move(crossing));
    }
  }
  return prune_redundant(VPolytope{std::move(candidates)});
}

std::string format_point(const Point& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_rational(p[i]);
  }
  out += ")";
  return out;
}

std::optional<Point> parse_point(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    return std::nullopt;
  }
  text = text.substr(1, text.size() - 2);
  Point coords;
  while (true) {
    auto comma = text.find(',');
    std::string_view field = strip(text.substr(0, comma));
    auto value = parse_rational(field);
    if (!value) return std::nullopt;
    coords.push_back(*value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return coords;
}

}  // namespace credalkit
