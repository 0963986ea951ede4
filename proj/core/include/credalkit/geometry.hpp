#pragma once

#include <optional>
#include <string>
#include <vector>

#include "credalkit/rational.hpp"

namespace credalkit {

using Point = std::vector<Rational>;

/// Closed halfspace {x : normal·x >= offset}. The normal must not be the
/// zero vector.
struct Halfspace {
  Point normal;
  Rational offset;
};

/// Convex polytope in V-representation. Operations that return polytopes
/// prune to the minimal vertex list in canonical (lexicographic) order, so
/// equal hulls compare equal as vertex lists.
struct VPolytope {
  std::vector<Point> vertices;

  bool operator==(const VPolytope&) const = default;
};

Rational dot(const Point& a, const Point& b);
bool satisfies(const Point& p, const Halfspace& h);

/// Exact hull membership: true iff p is a convex combination of the
/// vertices, decided by a feasibility LP over the combination weights.
bool hull_membership(const Point& p, const VPolytope& polytope);

/// Minimal V-representation of the same hull: duplicates removed, every
/// point lying in the hull of the others removed, canonical order.
/// Idempotent.
VPolytope prune_redundant(const VPolytope& polytope);

struct LinearMax {
  Rational value;
  std::vector<Point> argmax;  // every vertex attaining the value
};

/// Maximum of objective·v over the polytope. A linear functional attains
/// its max at vertices, so this is a plain scan; ties are all reported.
LinearMax maximize_linear(const Point& objective, const VPolytope& polytope);

/// coefficients·x = rhs.
struct LinearEquality {
  Point coefficients;
  Rational rhs;
};

struct ConstrainedMax {
  Rational value;
  Point witness;
};

/// Maximum of objective·x over the polytope intersected with the given
/// equalities, via an exact simplex LP over the convex-combination
/// weights. Infeasibility is a value (nullopt), not an error.
std::optional<ConstrainedMax> constrained_maximize_linear(
    const Point& objective, const VPolytope& polytope,
    const std::vector<LinearEquality>& equalities);

/// polytope ∩ halfspace, as a V-polytope: the satisfying vertices plus,
/// for every (satisfying, violating) vertex pair, the unique point of the
/// segment on the boundary hyperplane; pruned. An empty vertex list
/// signals an empty intersection.
VPolytope clip_halfspace(const VPolytope& polytope, const Halfspace& halfspace);

/// "(a, b, c)" with canonical rationals; inverse of parse_point.
std::string format_point(const Point& p);
std::optional<Point> parse_point(std::string_view text);

}  // namespace credalkit
