#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "set.hpp"
#include "space.hpp"

namespace chabauty {

/// Deterministic test families. Every generator is a pure function of its
/// parameters (and seed), so repeated runs reproduce byte-identical sets.

/// {(1 + 1/i, 0)} in R^2: a single point creeping down onto the unit circle
/// from outside. Against the limit {(1, 0)} and base point at the origin,
/// the truncated distance at R = 1 stays 1 for every i while the integrated
/// distance goes to 0.
inline PointSet boundary_approach_set(int i) {
  if (i < 1) throw std::invalid_argument("boundary-approach index must be >= 1");
  return PointSet({{1.0 + 1.0 / static_cast<double>(i), 0.0}});
}

inline PointSet boundary_approach_limit() { return PointSet({{1.0, 0.0}}); }

inline std::vector<PointSet> boundary_approach_family(int count) {
  if (count < 1) throw std::invalid_argument("family length must be >= 1");
  std::vector<PointSet> family;
  family.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) family.push_back(boundary_approach_set(i));
  return family;
}

/// Single point at target + (start - target)/i, sliding from start to target.
inline PointSet moving_point_set(const Point& start, const Point& target,
                                 int i) {
  if (i < 1) throw std::invalid_argument("moving-point index must be >= 1");
  if (start.size() != target.size())
    throw std::invalid_argument("start and target dimensions differ");
  Point p(target.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    p[c] = target[c] + (start[c] - target[c]) / static_cast<double>(i);
  return PointSet({std::move(p)});
}

inline std::vector<PointSet> moving_point_family(const Point& start,
                                                 const Point& target,
                                                 int count) {
  if (count < 1) throw std::invalid_argument("family length must be >= 1");
  std::vector<PointSet> family;
  family.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i)
    family.push_back(moving_point_set(start, target, i));
  return family;
}

/// spacing * Z^d intersected with the closed ball of radius r about the
/// space's base point (the lattice is anchored at the origin, not the base).
inline PointSet lattice_set(const CoordinateSpace& space, double spacing,
                            double r, std::size_t cell_budget = 8'000'000) {
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw std::invalid_argument("lattice spacing must be positive");
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("lattice radius must be positive");
  const std::size_t dim = space.dimension();
  const Point& base = space.base_point();
  std::vector<long> lo(dim), hi(dim);
  double cells = 1.0;
  for (std::size_t c = 0; c < dim; ++c) {
    lo[c] = static_cast<long>(std::ceil((base[c] - r) / spacing));
    hi[c] = static_cast<long>(std::floor((base[c] + r) / spacing));
    cells *= static_cast<double>(std::max(0L, hi[c] - lo[c] + 1));
  }
  if (cells > static_cast<double>(cell_budget))
    throw std::invalid_argument("lattice grid exceeds the cell budget");

  std::vector<Point> kept;
  if (cells == 0.0) return PointSet{};
  std::vector<long> index(lo);
  Point node(dim, 0.0);
  for (;;) {
    for (std::size_t c = 0; c < dim; ++c)
      node[c] = static_cast<double>(index[c]) * spacing;
    if (radius(space, node) <= r) kept.push_back(node);
    std::size_t axis = dim;
    while (true) {
      if (axis == 0) return PointSet(std::move(kept));
      --axis;
      if (++index[axis] <= hi[axis]) break;
      index[axis] = lo[axis];
    }
  }
}

/// Seeded uniform cloud in [-extent, extent]^dim.
inline PointSet random_cloud(std::uint64_t seed, int count, int dim,
                             double extent = 1.0) {
  if (count < 0) throw std::invalid_argument("cloud size must be >= 0");
  if (dim < 1) throw std::invalid_argument("cloud dimension must be >= 1");
  if (!(extent > 0.0)) throw std::invalid_argument("extent must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-extent, extent);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Point p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = coord(rng);
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline PointSet empty_point_set() { return PointSet{}; }

/// Name-dispatched generator access, mirroring the CLI-facing vocabulary:
/// boundary-approach, moving-point, lattice, random-cloud, empty.
struct GeneratorParams {
  int index = 1;         // boundary-approach / moving-point
  int length = 1;        // family variants
  double spacing = 1.0;  // lattice
  double radius = 1.0;   // lattice
  std::uint64_t seed = 0;
  int size = 8;  // random-cloud point count
  int dim = 1;   // random-cloud dimension
  double extent = 1.0;
  Point start;
  Point target;
};

inline PointSet generate(const CoordinateSpace& space, const std::string& kind,
                         const GeneratorParams& params) {
  if (kind == "boundary-approach") return boundary_approach_set(params.index);
  if (kind == "moving-point")
    return moving_point_set(params.start, params.target, params.index);
  if (kind == "lattice")
    return lattice_set(space, params.spacing, params.radius);
  if (kind == "random-cloud")
    return random_cloud(params.seed, params.size, params.dim, params.extent);
  if (kind == "empty") return empty_point_set();
  throw std::invalid_argument("unknown generator kind: " + kind);
}

inline std::vector<PointSet> generate_family(const CoordinateSpace& space,
                                             const std::string& kind,
                                             const GeneratorParams& params) {
  if (kind == "boundary-approach")
    return boundary_approach_family(params.length);
  if (kind == "moving-point")
    return moving_point_family(params.start, params.target, params.length);
  if (kind == "lattice" || kind == "random-cloud" || kind == "empty") {
    std::vector<PointSet> family;
    family.reserve(static_cast<std::size_t>(std::max(params.length, 0)));
    for (int i = 1; i <= params.length; ++i) {
      GeneratorParams p = params;
      p.index = i;
      p.seed = params.seed + static_cast<std::uint64_t>(i);
      if (kind == "lattice") p.spacing = params.spacing / i;
      family.push_back(generate(space, kind, p));
    }
    return family;
  }
  throw std::invalid_argument("unknown generator kind: " + kind);
}

}  // namespace chabauty
