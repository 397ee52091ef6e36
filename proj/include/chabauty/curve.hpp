#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hausdorff.hpp"
#include "set.hpp"
#include "space.hpp"
#include "weight.hpp"

namespace chabauty {

namespace detail {

/// Truncated distance with the cap as a knob. The public entry point pins
/// cap = 1; the knob exists so the self-test can run a deliberately broken
/// evaluation as its negative control.
template <MetricSpace S>
double truncated_distance_impl(const S& space,
                               const FiniteClosedSet<typename S::point_type>& A,
                               const FiniteClosedSet<typename S::point_type>& B,
                               double R, BallBoundary boundary, double cap) {
  const auto a_r = truncate(space, A, R, boundary);
  const auto b_r = truncate(space, B, R, boundary);
  return hausdorff(space, a_r, b_r).capped(cap);
}

}  // namespace detail

/// The truncated pseudo-distance at radius R: min{1, H(A_R, B_R)} where A_R
/// is the part of A within the closed ball of radius R about the base point.
/// An infinite Hausdorff value (exactly one truncation empty) caps to 1.
template <MetricSpace S>
double truncated_distance(const S& space,
                          const FiniteClosedSet<typename S::point_type>& A,
                          const FiniteClosedSet<typename S::point_type>& B,
                          double R) {
  if (!std::isfinite(R) || R < 0.0)
    throw std::invalid_argument("truncation radius must be finite and >= 0");
  return detail::truncated_distance_impl(space, A, B, R, BallBoundary::closed,
                                         1.0);
}

/// Radii at which the truncations of A or B change membership: the sorted,
/// deduplicated base-point distances of all points of both sets. Between
/// consecutive entries the truncated distance is constant in R.
template <MetricSpace S>
std::vector<double> breakpoints(const S& space,
                                const FiniteClosedSet<typename S::point_type>& A,
                                const FiniteClosedSet<typename S::point_type>& B) {
  std::vector<double> radii;
  radii.reserve(A.size() + B.size());
  for (const auto& p : A) radii.push_back(radius(space, p));
  for (const auto& p : B) radii.push_back(radius(space, p));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

/// Piecewise-constant view of R -> truncated_distance(A, B, R).
///
/// segment_values[k] is the value on [breakpoints[k-1], breakpoints[k]), with
/// the first segment starting at 0 and the last extending to infinity. All
/// values lie in [0, cap].
struct DistanceCurve {
  std::vector<double> breakpoints;
  std::vector<double> segment_values;  // breakpoints.size() + 1 entries

  double value_at(double R) const {
    const auto it =
        std::upper_bound(breakpoints.begin(), breakpoints.end(), R);
    return segment_values[static_cast<std::size_t>(it - breakpoints.begin())];
  }
};

struct CurveOptions {
  BallBoundary boundary = BallBoundary::closed;
  /// Diagnostic knob; 1.0 is the metric's definition.
  double cap = 1.0;
};

/// Materializes the curve by evaluating the truncated distance once per
/// segment, at the segment midpoint (constancy makes any interior point
/// equivalent; the midpoint stays clear of boundary ties). The unbounded
/// last segment uses the untruncated sets. A zero-width leading segment
/// (some point sits exactly at the base point) gets value 0 by convention;
/// it carries no mass.
template <MetricSpace S>
DistanceCurve distance_curve(const S& space,
                             const FiniteClosedSet<typename S::point_type>& A,
                             const FiniteClosedSet<typename S::point_type>& B,
                             const CurveOptions& options = {}) {
  DistanceCurve curve;
  curve.breakpoints = breakpoints(space, A, B);
  const std::size_t m = curve.breakpoints.size();
  curve.segment_values.reserve(m + 1);

  auto value_inside = [&](double lo, double hi) {
    double at = lo + 0.5 * (hi - lo);
    // Guard against the midpoint rounding onto a breakpoint when lo and hi
    // are adjacent doubles; fall back to whichever endpoint the segment owns.
    if (options.boundary == BallBoundary::closed) {
      if (at >= hi) at = lo;
    } else {
      if (at <= lo) at = hi;
    }
    return detail::truncated_distance_impl(space, A, B, at, options.boundary,
                                           options.cap);
  };

  for (std::size_t k = 0; k + 1 <= m; ++k) {
    const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
    const double hi = curve.breakpoints[k];
    curve.segment_values.push_back(lo == hi ? 0.0 : value_inside(lo, hi));
  }
  // Unbounded tail segment: truncation no longer removes anything.
  curve.segment_values.push_back(hausdorff(space, A, B).capped(options.cap));
  return curve;
}

/// Exact integral of curve * weight: sum over segments of value times the
/// weight's exact interval mass, accumulated in ascending breakpoint order
/// for determinism.
inline double integrate_curve(const DistanceCurve& curve, const Weight& weight) {
  const std::size_t m = curve.breakpoints.size();
  double total = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
    const double hi = curve.breakpoints[k];
    if (curve.segment_values[k] != 0.0)
      total += curve.segment_values[k] * weight.interval_mass(lo, hi);
  }
  const double tail_start = m == 0 ? 0.0 : curve.breakpoints.back();
  if (curve.segment_values[m] != 0.0)
    total += curve.segment_values[m] * weight.tail(tail_start);
  return total;
}

}  // namespace chabauty
