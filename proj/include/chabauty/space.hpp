#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace chabauty {

/// Coordinate point in R^d. std::vector's lexicographic operator< doubles as
/// the canonical ordering used by FiniteClosedSet.
using Point = std::vector<double>;

/// Vertex of a finite edge-weighted graph.
using VertexId = int;

namespace detail {

inline bool all_finite(const Point& p) {
  return std::all_of(p.begin(), p.end(),
                     [](double c) { return std::isfinite(c); });
}

}  // namespace detail

enum class Norm { euclidean, chebyshev, manhattan };

inline std::string to_string(Norm n) {
  switch (n) {
    case Norm::euclidean: return "euclidean";
    case Norm::chebyshev: return "chebyshev";
    case Norm::manhattan: return "manhattan";
  }
  return "?";
}

inline Norm parse_norm(const std::string& name) {
  if (name == "euclidean") return Norm::euclidean;
  if (name == "chebyshev") return Norm::chebyshev;
  if (name == "manhattan") return Norm::manhattan;
  throw std::invalid_argument("unknown metric kind: " + name);
}

/// A proper metric space with a distinguished base point. Every truncation
/// radius in the library is measured from that base point, so it is part of
/// the space's configuration rather than a per-call argument.
template <typename S>
concept MetricSpace = requires(const S& s, const typename S::point_type& x,
                               const typename S::point_type& y) {
  typename S::point_type;
  { s.distance(x, y) } -> std::convertible_to<double>;
  { s.base_point() } -> std::convertible_to<typename S::point_type>;
};

/// R^d under the Euclidean, Chebyshev or Manhattan norm.
///
/// distance() is bitwise symmetric: each per-axis term is computed from the
/// exact IEEE difference, whose sign flip does not change the magnitude.
class CoordinateSpace {
 public:
  using point_type = Point;

  CoordinateSpace(Norm norm, Point base) : norm_(norm), base_(std::move(base)) {
    if (base_.empty())
      throw std::invalid_argument("base point needs at least one coordinate");
    if (!detail::all_finite(base_))
      throw std::invalid_argument("base point coordinates must be finite");
  }

  std::size_t dimension() const { return base_.size(); }
  Norm norm() const { return norm_; }
  const Point& base_point() const { return base_; }

  double distance(const Point& x, const Point& y) const {
    check_member(x);
    check_member(y);
    switch (norm_) {
      case Norm::euclidean: {
        double sum = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double d = x[i] - y[i];
          sum += d * d;
        }
        return std::sqrt(sum);
      }
      case Norm::chebyshev: {
        double worst = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
          worst = std::max(worst, std::abs(x[i] - y[i]));
        return worst;
      }
      case Norm::manhattan: {
        double sum = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
        return sum;
      }
    }
    return 0.0;  // unreachable
  }

  void check_member(const Point& x) const {
    if (x.size() != base_.size())
      throw std::invalid_argument("point dimension " +
                                  std::to_string(x.size()) +
                                  " does not match space dimension " +
                                  std::to_string(base_.size()));
  }

 private:
  Norm norm_;
  Point base_;
};

/// Finite connected graph with strictly positive edge weights, under the
/// shortest-path metric. Finiteness makes closed balls trivially compact.
class GraphSpace {
 public:
  using point_type = VertexId;

  struct Edge {
    VertexId u;
    VertexId v;
    double weight;
  };

  GraphSpace(int vertex_count, const std::vector<Edge>& edges, VertexId base)
      : adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))),
        base_(base) {
    if (vertex_count <= 0)
      throw std::invalid_argument("graph needs at least one vertex");
    check_member(base);
    for (const Edge& e : edges) {
      check_member(e.u);
      check_member(e.v);
      if (!(e.weight > 0.0) || !std::isfinite(e.weight))
        throw std::invalid_argument("edge weights must be finite and positive");
      adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
      adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
    }
    if (!connected())
      throw std::invalid_argument("graph must be connected");
  }

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  VertexId base_point() const { return base_; }

  double distance(VertexId x, VertexId y) const {
    check_member(x);
    check_member(y);
    if (x == y) return 0.0;
    // Canonical endpoint order keeps the accumulated path sum, and hence the
    // returned value, bitwise symmetric.
    if (x > y) std::swap(x, y);
    return dijkstra(x, y);
  }

  void check_member(VertexId v) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  }

 private:
  struct Arc {
    VertexId to;
    double weight;
  };

  bool connected() const {
    std::vector<char> seen(adjacency_.size(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Arc& a : adjacency_[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = 1;
          ++reached;
          stack.push_back(a.to);
        }
      }
    }
    return reached == adjacency_.size();
  }

  double dijkstra(VertexId source, VertexId target) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(adjacency_.size(), kInf);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[static_cast<std::size_t>(source)] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
      const auto [d, v] = queue.top();
      queue.pop();
      if (d > dist[static_cast<std::size_t>(v)]) continue;
      if (v == target) return d;
      for (const Arc& a : adjacency_[static_cast<std::size_t>(v)]) {
        const double candidate = d + a.weight;
        if (candidate < dist[static_cast<std::size_t>(a.to)]) {
          dist[static_cast<std::size_t>(a.to)] = candidate;
          queue.push({candidate, a.to});
        }
      }
    }
    return dist[static_cast<std::size_t>(target)];  // unreachable: connected
  }

  std::vector<std::vector<Arc>> adjacency_;
  VertexId base_;
};

template <typename S>
inline constexpr bool is_coordinate_space_v =
    std::is_same_v<typename S::point_type, Point>;

/// Distance from the base point, the radius at which x enters truncations.
template <MetricSpace S>
double radius(const S& space, const typename S::point_type& x) {
  return space.distance(space.base_point(), x);
}

}  // namespace chabauty
