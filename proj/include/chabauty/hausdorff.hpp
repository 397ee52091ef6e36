#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "kdtree.hpp"
#include "set.hpp"
#include "space.hpp"

namespace chabauty {

/// Hausdorff distance between finite sets, with the empty-set convention
/// made explicit instead of leaking a floating infinity through arithmetic:
/// H(empty, empty) = 0, H(empty, A) is the distinguished infinite value for
/// nonempty A. Downstream capping logic branches on `infinite`.
template <typename P>
struct HausdorffResult {
  double value = 0.0;  // meaningful only when !infinite
  bool infinite = false;
  std::optional<P> witness_a;
  std::optional<P> witness_b;

  /// min{cap, H} with the infinite branch mapping to cap.
  double capped(double cap) const {
    return infinite ? cap : std::min(cap, value);
  }

  static HausdorffResult infinity() {
    HausdorffResult r;
    r.infinite = true;
    return r;
  }
};

/// Nearest member of B to x, brute force. nullopt for empty B.
template <MetricSpace S>
std::optional<std::pair<double, typename S::point_type>> nearest_in(
    const S& space, const typename S::point_type& x,
    const FiniteClosedSet<typename S::point_type>& B) {
  if (B.empty()) return std::nullopt;
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < B.size(); ++i) {
    const double d = space.distance(x, B[i]);
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  return std::make_pair(best, B[best_i]);
}

/// Smallest eps with A contained in the eps-neighborhood of B: the max over
/// a in A of the distance from a to B. Empty A gives 0 (vacuous containment);
/// nonempty A against empty B is infinite.
///
/// This is the reference implementation: a plain exhaustive max-min scan.
template <MetricSpace S>
HausdorffResult<typename S::point_type> directed_hausdorff(
    const S& space, const FiniteClosedSet<typename S::point_type>& A,
    const FiniteClosedSet<typename S::point_type>& B) {
  using R = HausdorffResult<typename S::point_type>;
  if (A.empty()) return R{};
  if (B.empty()) return R::infinity();
  R result;
  result.value = -1.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const auto nearest = nearest_in(space, A[i], B);
    if (nearest->first > result.value) {
      result.value = nearest->first;
      result.witness_a = A[i];
      result.witness_b = nearest->second;
    }
  }
  return result;
}

/// Symmetric Hausdorff distance: max of the two directed values. Witnesses
/// are reported with witness_a in A and witness_b in B.
template <MetricSpace S>
HausdorffResult<typename S::point_type> hausdorff(
    const S& space, const FiniteClosedSet<typename S::point_type>& A,
    const FiniteClosedSet<typename S::point_type>& B) {
  using R = HausdorffResult<typename S::point_type>;
  if (A.empty() && B.empty()) return R{};
  if (A.empty() || B.empty()) return R::infinity();
  R ab = directed_hausdorff(space, A, B);
  R ba = directed_hausdorff(space, B, A);
  if (ab.value >= ba.value) return ab;
  std::swap(ba.witness_a, ba.witness_b);
  return ba;
}

namespace detail {

/// Accelerated directed scan: kd-tree nearest-neighbor queries, the outer
/// loop ordered by decreasing distance to the centroid of B (likely maxima
/// first), and queries aborted as soon as they cannot raise the running max.
inline HausdorffResult<Point> directed_accelerated(const CoordinateSpace& space,
                                                   const PointSet& A,
                                                   const PointSet& B) {
  HausdorffResult<Point> result;
  result.value = -1.0;

  Point centroid(space.dimension(), 0.0);
  for (const Point& b : B)
    for (std::size_t c = 0; c < centroid.size(); ++c) centroid[c] += b[c];
  for (double& c : centroid) c /= static_cast<double>(B.size());

  std::vector<std::size_t> order(A.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> pull(A.size());
  for (std::size_t i = 0; i < A.size(); ++i)
    pull[i] = space.distance(A[i], centroid);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pull[a] != pull[b] ? pull[a] > pull[b] : a < b;
  });

  const KdTree tree(space, B.points());
  for (const std::size_t i : order) {
    const KdTree::Query q = tree.nearest(A[i], result.value);
    if (q.aborted) continue;  // some b is within the running max already
    if (q.distance > result.value) {
      result.value = q.distance;
      result.witness_a = A[i];
      result.witness_b = B[q.index];
    }
  }
  return result;
}

}  // namespace detail

/// Same value as hausdorff() (within 1e-12 relative: kd pruning can differ
/// from the exhaustive scan by sub-ulp rounding of axis gaps), computed with
/// a spatial index. Non-coordinate spaces fall back to the exhaustive scan,
/// as do inputs small enough that building trees costs more than it saves.
template <MetricSpace S>
HausdorffResult<typename S::point_type> hausdorff_accelerated(
    const S& space, const FiniteClosedSet<typename S::point_type>& A,
    const FiniteClosedSet<typename S::point_type>& B) {
  if constexpr (!is_coordinate_space_v<S>) {
    return hausdorff(space, A, B);
  } else {
    using R = HausdorffResult<Point>;
    if (A.empty() && B.empty()) return R{};
    if (A.empty() || B.empty()) return R::infinity();
    if (A.size() * B.size() <= 4096) return hausdorff(space, A, B);
    R ab = detail::directed_accelerated(space, A, B);
    R ba = detail::directed_accelerated(space, B, A);
    if (ab.value >= ba.value) return ab;
    std::swap(ba.witness_a, ba.witness_b);
    return ba;
  }
}

}  // namespace chabauty
