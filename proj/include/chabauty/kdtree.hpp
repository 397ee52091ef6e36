#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "space.hpp"

namespace chabauty {

/// Static kd-tree over coordinate points.
///
/// Works for all three coordinate norms: a single-axis gap lower-bounds the
/// Euclidean, Chebyshev and Manhattan distances alike, so the usual plane
/// pruning rule stays valid.
class KdTree {
 public:
  struct Query {
    double distance = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    /// True when the search stopped early because a point at distance
    /// <= abort_below was found; `distance` is then just that witness value,
    /// not necessarily the minimum.
    bool aborted = false;
  };

  KdTree(const CoordinateSpace& space, const std::vector<Point>& points)
      : space_(&space), points_(&points), order_(points.size()) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (points.size() > kLeafSize) splits_.resize(points.size());
    if (!points.empty()) build(0, points.size());
  }

  bool empty() const { return points_->empty(); }

  /// Nearest member to q, or an early exit once anything at distance
  /// <= abort_below shows up (pass a negative value to disable aborting).
  Query nearest(const Point& q, double abort_below = -1.0) const {
    Query best;
    if (!points_->empty()) search(0, points_->size(), q, abort_below, best);
    return best;
  }

 private:
  static constexpr std::size_t kLeafSize = 16;

  struct Split {
    int axis;
    double value;
  };

  // Nodes are implicit: each recursion level splits [begin, end) at its
  // median, and splits_ is indexed by that median offset. Internal nodes
  // have size > kLeafSize, so the median offsets never collide between a
  // node and any of its descendants.
  void build(std::size_t begin, std::size_t end) {
    if (end - begin <= kLeafSize) return;
    const int axis = widest_axis(begin, end);
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                     order_.begin() + static_cast<std::ptrdiff_t>(mid),
                     order_.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) {
                       return (*points_)[a][static_cast<std::size_t>(axis)] <
                              (*points_)[b][static_cast<std::size_t>(axis)];
                     });
    splits_[mid] = {axis,
                    (*points_)[order_[mid]][static_cast<std::size_t>(axis)]};
    build(begin, mid);
    build(mid, end);
  }

  int widest_axis(std::size_t begin, std::size_t end) const {
    const std::size_t dim = points_->front().size();
    int best_axis = 0;
    double best_spread = -1.0;
    for (std::size_t ax = 0; ax < dim; ++ax) {
      double lo = std::numeric_limits<double>::infinity();
      double hi = -lo;
      for (std::size_t i = begin; i < end; ++i) {
        const double c = (*points_)[order_[i]][ax];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (hi - lo > best_spread) {
        best_spread = hi - lo;
        best_axis = static_cast<int>(ax);
      }
    }
    return best_axis;
  }

  void search(std::size_t begin, std::size_t end, const Point& q,
              double abort_below, Query& best) const {
    if (best.aborted) return;
    if (end - begin <= kLeafSize) {
      for (std::size_t i = begin; i < end; ++i) {
        const double d = space_->distance(q, (*points_)[order_[i]]);
        if (d < best.distance) {
          best.distance = d;
          best.index = order_[i];
          if (best.distance <= abort_below) {
            best.aborted = true;
            return;
          }
        }
      }
      return;
    }
    const std::size_t mid = begin + (end - begin) / 2;
    const Split split = splits_[mid];
    const double gap = q[static_cast<std::size_t>(split.axis)] - split.value;
    if (gap < 0.0) {
      search(begin, mid, q, abort_below, best);
      if (!best.aborted && -gap < best.distance)
        search(mid, end, q, abort_below, best);
    } else {
      search(mid, end, q, abort_below, best);
      if (!best.aborted && gap < best.distance)
        search(begin, mid, q, abort_below, best);
    }
  }

  const CoordinateSpace* space_;
  const std::vector<Point>* points_;
  std::vector<std::size_t> order_;
  std::vector<Split> splits_;
};

}  // namespace chabauty
