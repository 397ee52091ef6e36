#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include <chabauty/generators.hpp>
#include <chabauty/set.hpp>
#include <chabauty/space.hpp>

using namespace chabauty;

TEST_CASE("sets canonicalize: sorted, deduplicated, equality by sequence") {
  const PointSet s({{2.0}, {1.0}, {2.0}, {-3.0}});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Point{-3.0});
  CHECK(s[1] == Point{1.0});
  CHECK(s[2] == Point{2.0});
  CHECK(s == PointSet({{1.0}, {-3.0}, {2.0}}));
  CHECK(s.contains(Point{1.0}));
  CHECK_FALSE(s.contains(Point{1.5}));
  CHECK(PointSet{} == PointSet{});
}

TEST_CASE("set construction rejects non-finite and mixed-dimension points") {
  CHECK_THROWS_AS(PointSet({{std::numeric_limits<double>::quiet_NaN()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{std::numeric_limits<double>::infinity(), 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(PointSet({{1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("truncation keeps exactly the points within the closed ball") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  const PointSet a({{-2.0}, {0.5}, {3.0}});

  CHECK(truncate(line, a, 2.0) == PointSet({{-2.0}, {0.5}}));
  CHECK(truncate(line, a, 3.0) == a);   // R at the max radius keeps everything
  CHECK(truncate(line, a, 100.0) == a);
  CHECK(truncate(line, a, 0.0) == PointSet{});
  CHECK(truncate(line, PointSet{}, 1.0) == PointSet{});

  // closed-ball boundary: a point at radius exactly R stays
  const PointSet boundary({{2.0}});
  CHECK(truncate(line, boundary, 2.0) == boundary);
  CHECK(truncate(line, boundary, 2.0, BallBoundary::open) == PointSet{});

  CHECK_THROWS_AS(truncate(line, a, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(truncate(line, a, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("truncation is monotone, idempotent, and exact at breakpoints") {
  std::mt19937_64 rng(2202);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::uniform_int_distribution<int> size(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const CoordinateSpace space(Norm::euclidean, Point(dim, 0.0));
    std::vector<Point> pts(static_cast<std::size_t>(size(rng)));
    for (auto& p : pts) {
      p.resize(dim);
      for (auto& c : p) c = coord(rng);
    }
    const PointSet a(pts);
    double r1 = std::abs(coord(rng));
    double r2 = std::abs(coord(rng));
    if (r1 > r2) std::swap(r1, r2);

    const PointSet t1 = truncate(space, a, r1);
    const PointSet t2 = truncate(space, a, r2);
    for (const Point& p : t1) REQUIRE(t2.contains(p));  // monotone
    REQUIRE(truncate(space, t1, r1) == t1);             // idempotent

    for (const Point& p : a) {
      const double r = radius(space, p);
      REQUIRE(truncate(space, a, r).contains(p));
      const double delta = 1e-9 * (1.0 + r);
      if (r - delta >= 0.0)
        REQUIRE_FALSE(truncate(space, a, r - delta).contains(p));
    }
  }
}

TEST_CASE("boundary-approach generator emits the 1 + 1/i family") {
  CHECK(boundary_approach_set(4) == PointSet({{1.25, 0.0}}));
  CHECK(boundary_approach_set(1) == PointSet({{2.0, 0.0}}));
  CHECK(boundary_approach_limit() == PointSet({{1.0, 0.0}}));
  const auto family = boundary_approach_family(10);
  REQUIRE(family.size() == 10);
  CHECK(family[3] == boundary_approach_set(4));
  CHECK_THROWS_AS(boundary_approach_set(0), std::invalid_argument);
}

TEST_CASE("lattice generator enumerates spacing * Z^d inside the ball") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  CHECK(lattice_set(line, 1.0, 1.5) == PointSet({{-1.0}, {0.0}, {1.0}}));

  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const PointSet grid = lattice_set(plane, 1.0, 1.0);
  CHECK(grid.size() == 5);  // origin and the four unit neighbors

  // lattice is anchored at the origin, not at the base point
  const CoordinateSpace shifted(Norm::euclidean, Point{0.6});
  CHECK(lattice_set(shifted, 1.0, 0.5) == PointSet({{1.0}}));

  CHECK_THROWS_AS(lattice_set(line, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(lattice_set(line, 1.0, -2.0), std::invalid_argument);
}

TEST_CASE("moving-point and cloud generators are deterministic") {
  CHECK(moving_point_set({4.0, 0.0}, {0.0, 0.0}, 2) == PointSet({{2.0, 0.0}}));
  CHECK(moving_point_set({4.0}, {1.0}, 3) == PointSet({{2.0}}));

  const PointSet cloud1 = random_cloud(99, 64, 2, 5.0);
  const PointSet cloud2 = random_cloud(99, 64, 2, 5.0);
  const PointSet cloud3 = random_cloud(100, 64, 2, 5.0);
  CHECK(cloud1 == cloud2);
  CHECK_FALSE(cloud1 == cloud3);
  CHECK(cloud1.size() == 64);

  CHECK(empty_point_set() == PointSet{});
}

TEST_CASE("generator dispatch covers the named kinds and rejects others") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  GeneratorParams params;
  params.index = 4;
  CHECK(generate(plane, "boundary-approach", params) ==
        boundary_approach_set(4));
  CHECK(generate(plane, "empty", params) == PointSet{});
  params.length = 6;
  CHECK(generate_family(plane, "boundary-approach", params).size() == 6);
  CHECK_THROWS_AS(generate(plane, "spiral", params), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(plane, "spiral", params),
                  std::invalid_argument);
}
