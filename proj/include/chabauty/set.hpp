#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "space.hpp"

namespace chabauty {

/// Exact representation of a finite closed subset of a metric space.
///
/// Points are deduplicated by exact equality (a tolerance would make set
/// equality non-transitive) and kept in canonical ascending order, so two
/// sets are equal iff their point sequences are.
template <typename P>
class FiniteClosedSet {
 public:
  using point_type = P;

  FiniteClosedSet() = default;

  explicit FiniteClosedSet(std::vector<P> points) : points_(std::move(points)) {
    validate(points_);
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  }

  FiniteClosedSet(std::initializer_list<P> points)
      : FiniteClosedSet(std::vector<P>(points)) {}

  /// Fast path for callers that already hold a sorted, deduplicated,
  /// validated sequence (e.g. truncation, which filters a canonical set).
  static FiniteClosedSet from_canonical(std::vector<P> points) {
    FiniteClosedSet s;
    s.points_ = std::move(points);
    return s;
  }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<P>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  const P& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const P& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  friend bool operator==(const FiniteClosedSet&,
                         const FiniteClosedSet&) = default;

 private:
  static void validate(const std::vector<P>& pts) {
    if constexpr (std::is_same_v<P, Point>) {
      for (const Point& p : pts) {
        if (!detail::all_finite(p))
          throw std::invalid_argument("set points must have finite coordinates");
        if (p.size() != pts.front().size())
          throw std::invalid_argument("set points must share one dimension");
      }
    }
  }

  std::vector<P> points_;
};

using PointSet = FiniteClosedSet<Point>;
using VertexSet = FiniteClosedSet<VertexId>;

enum class BallBoundary { closed, open };

/// Intersection of A with the ball of radius R about the base point.
///
/// The closed boundary (the default, and the definition used everywhere in
/// the metric) keeps points at radius exactly R. The open variant exists for
/// the cross-check that the boundary convention cannot change any integral:
/// the radii where the two differ form a measure-zero set.
template <MetricSpace S>
FiniteClosedSet<typename S::point_type> truncate(
    const S& space, const FiniteClosedSet<typename S::point_type>& set,
    double R, BallBoundary boundary = BallBoundary::closed) {
  if (!std::isfinite(R) || R < 0.0)
    throw std::invalid_argument("truncation radius must be finite and >= 0");
  std::vector<typename S::point_type> kept;
  for (const auto& p : set) {
    const double r = radius(space, p);
    const bool inside = boundary == BallBoundary::closed ? r <= R : r < R;
    if (inside) kept.push_back(p);
  }
  // Filtering a canonical sequence preserves canonical order.
  return FiniteClosedSet<typename S::point_type>::from_canonical(
      std::move(kept));
}

/// Smallest radius of any member, or nullopt for the empty set.
template <MetricSpace S>
std::optional<double> min_radius(
    const S& space, const FiniteClosedSet<typename S::point_type>& set) {
  std::optional<double> best;
  for (const auto& p : set) {
    const double r = radius(space, p);
    if (!best || r < *best) best = r;
  }
  return best;
}

}  // namespace chabauty
