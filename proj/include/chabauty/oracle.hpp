#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "set.hpp"
#include "space.hpp"

namespace chabauty {

/// Implicit description of a closed set S through its distance field.
///
/// This is the non-exact side of the library: infinite closed sets (curves,
/// level sets) cannot be represented point-for-point, so they are carried as
/// an oracle and materialized into finite eps-nets on demand.
struct SetOracle {
  /// x -> inf over s in S of d(x, s). Must be 1-Lipschitz in the ambient
  /// metric; epsilon_net's guarantees assume it.
  std::function<double(const Point&)> nearest_distance;

  /// Horizon beyond which the oracle's answers are not trusted. Requests
  /// with R_cut past this throw.
  double reach_radius = std::numeric_limits<double>::infinity();

  /// R -> is S disjoint from the closed ball of radius R about the base
  /// point? May be left empty when unknown; the net scan then decides.
  std::function<bool(double)> empty_within;

  /// Grid resolution used when a finite working set has to be materialized
  /// implicitly (e.g. by the quadrature distance).
  double net_epsilon = 0.01;
};

class NetBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite eps-net of the oracle's set inside the ball of radius r_cut.
///
/// Scans an axis-aligned grid of spacing eps/dim centered on the base point
/// and keeps the nodes with nearest_distance <= eps. Every returned point is
/// within eps of S, and every point of S inside the ball has a net point
/// within eps, so the symmetric gap to S (away from the cutoff sphere) is at
/// most eps. This is a heuristic approximation, not an exact representation:
/// points of S within eps of the cutoff sphere may gain or lose net
/// representatives under a later truncation, so distances involving nets are
/// eps-accurate at best near the boundary.
///
/// Throws NetBudgetError when the grid would exceed cell_budget nodes
/// (eps too small for r_cut).
inline PointSet epsilon_net(const SetOracle& oracle,
                            const CoordinateSpace& space, double r_cut,
                            double eps, std::size_t cell_budget = 8'000'000) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("epsilon must be positive");
  if (!(r_cut > 0.0) || !std::isfinite(r_cut))
    throw std::invalid_argument("r_cut must be positive");
  if (r_cut > oracle.reach_radius)
    throw std::invalid_argument("r_cut exceeds the oracle's reach radius");
  if (!oracle.nearest_distance)
    throw std::invalid_argument("oracle has no nearest_distance function");
  if (oracle.empty_within && oracle.empty_within(r_cut)) return PointSet{};

  const std::size_t dim = space.dimension();
  const double spacing = eps / static_cast<double>(dim);
  const long half_span = static_cast<long>(std::ceil(r_cut / spacing));
  const double per_axis = 2.0 * static_cast<double>(half_span) + 1.0;
  double cells = 1.0;
  for (std::size_t i = 0; i < dim; ++i) cells *= per_axis;
  if (cells > static_cast<double>(cell_budget))
    throw NetBudgetError("epsilon-net grid exceeds the cell budget; "
                         "epsilon is too small for this r_cut");

  const Point& base = space.base_point();
  std::vector<long> index(dim, -half_span);
  Point node(dim, 0.0);
  std::vector<Point> kept;
  for (;;) {
    for (std::size_t i = 0; i < dim; ++i)
      node[i] = base[i] + static_cast<double>(index[i]) * spacing;
    if (radius(space, node) <= r_cut &&
        oracle.nearest_distance(node) <= eps)
      kept.push_back(node);
    // odometer step, last axis fastest
    std::size_t axis = dim;
    while (true) {
      if (axis == 0) return PointSet(std::move(kept));  // full sweep done
      --axis;
      if (++index[axis] <= half_span) break;
      index[axis] = -half_span;  // carry into the next axis
    }
  }
}

/// Oracle view of an explicit finite set (for tests and mixed-mode calls).
inline SetOracle oracle_from_set(const CoordinateSpace& space, PointSet set) {
  SetOracle oracle;
  oracle.nearest_distance = [space, set](const Point& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& p : set) best = std::min(best, space.distance(x, p));
    return best;
  };
  oracle.empty_within = [space, set](double R) {
    for (const Point& p : set)
      if (radius(space, p) <= R) return false;
    return true;
  };
  return oracle;
}

/// The everywhere-empty set as an oracle.
inline SetOracle empty_oracle() {
  SetOracle oracle;
  oracle.nearest_distance = [](const Point&) {
    return std::numeric_limits<double>::infinity();
  };
  oracle.empty_within = [](double) { return true; };
  return oracle;
}

/// Euclidean circle of the given center and radius in R^2.
inline SetOracle circle_oracle(const CoordinateSpace& space, Point center,
                               double circle_radius) {
  if (space.norm() != Norm::euclidean || space.dimension() != 2)
    throw std::invalid_argument("circle oracle needs Euclidean R^2");
  if (!(circle_radius > 0.0))
    throw std::invalid_argument("circle radius must be positive");
  space.check_member(center);
  SetOracle oracle;
  oracle.nearest_distance = [space, center, circle_radius](const Point& x) {
    return std::abs(space.distance(x, center) - circle_radius);
  };
  const double base_to_circle =
      std::abs(space.distance(space.base_point(), center) - circle_radius);
  oracle.empty_within = [base_to_circle](double R) {
    return base_to_circle > R;
  };
  return oracle;
}

}  // namespace chabauty
