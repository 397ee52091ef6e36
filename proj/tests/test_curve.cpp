#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <chabauty/curve.hpp>
#include <chabauty/generators.hpp>

using namespace chabauty;

namespace {

PointSet random_set(std::mt19937_64& rng, std::size_t dim, int max_size) {
  std::uniform_int_distribution<int> size(0, max_size);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::vector<Point> pts(static_cast<std::size_t>(size(rng)));
  for (auto& p : pts) {
    p.resize(dim);
    for (auto& c : p) c = coord(rng);
  }
  return PointSet(std::move(pts));
}

}  // namespace

TEST_CASE("truncated distance matches hand cases") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const PointSet limit({{1.0, 0.0}});
  for (int i : {1, 2, 10, 1000}) {
    // the motivating counterexample: at R = 1 the near point is invisible
    CHECK(truncated_distance(plane, boundary_approach_set(i), limit, 1.0) ==
          1.0);
  }

  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  const PointSet a({{0.5}});
  const PointSet b({{0.7}});
  CHECK_THAT(truncated_distance(line, a, b, 1.0),
             Catch::Matchers::WithinAbs(0.2, 1e-15));

  for (double r : {0.0, 0.3, 1.0, 7.5})
    CHECK(truncated_distance(line, a, a, r) == 0.0);

  CHECK_THROWS_AS(truncated_distance(line, a, b, -0.5), std::invalid_argument);
}

TEST_CASE("breakpoints are the sorted distinct member radii") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  CHECK(breakpoints(line, PointSet({{1.0}, {2.0}}), PointSet({{1.5}})) ==
        std::vector<double>{1.0, 1.5, 2.0});
  CHECK(breakpoints(line, PointSet{}, PointSet{}).empty());
  CHECK(breakpoints(line, PointSet({{0.0}}), PointSet{}) ==
        std::vector<double>{0.0});
  // shared radii collapse to one breakpoint
  CHECK(breakpoints(line, PointSet({{-2.0}}), PointSet({{2.0}})) ==
        std::vector<double>{2.0});
}

TEST_CASE("distance curve reproduces the hand-built segment tables") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});

  SECTION("boundary-approach instance i = 4") {
    const DistanceCurve curve =
        distance_curve(plane, PointSet({{1.0, 0.0}}), PointSet({{1.25, 0.0}}));
    CHECK(curve.breakpoints == std::vector<double>{1.0, 1.25});
    REQUIRE(curve.segment_values.size() == 3);
    CHECK(curve.segment_values[0] == 0.0);
    CHECK(curve.segment_values[1] == 1.0);
    CHECK(curve.segment_values[2] == 0.25);
  }

  SECTION("equal sets give the zero curve") {
    const PointSet a({{0.5, 0.5}, {-1.0, 2.0}});
    const DistanceCurve curve = distance_curve(plane, a, a);
    for (double v : curve.segment_values) CHECK(v == 0.0);
  }

  SECTION("base-point member produces a zero-width leading segment") {
    const CoordinateSpace line(Norm::euclidean, Point{0.0});
    for (double t : {0.25, 0.5, 1.0}) {
      const DistanceCurve curve =
          distance_curve(line, PointSet({{0.0}}), PointSet({{t}}));
      CHECK(curve.breakpoints == std::vector<double>{0.0, t});
      REQUIRE(curve.segment_values.size() == 3);
      CHECK(curve.segment_values[0] == 0.0);
      CHECK(curve.segment_values[1] == 1.0);
      CHECK(curve.segment_values[2] == t);
    }
  }
}

TEST_CASE("curve invariants hold on random instances") {
  std::mt19937_64 rng(6601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = 1 + t % 2;
    const CoordinateSpace space(Norm::euclidean, Point(dim, 0.0));
    const PointSet a = random_set(rng, dim, 10);
    const PointSet b = random_set(rng, dim, 10);
    const DistanceCurve curve = distance_curve(space, a, b);
    REQUIRE(curve.segment_values.size() == curve.breakpoints.size() + 1);

    for (double v : curve.segment_values) {
      REQUIRE(v >= 0.0);
      REQUIRE(v <= 1.0);
    }

    // last segment is the capped Hausdorff distance of the full sets
    REQUIRE(curve.segment_values.back() ==
            hausdorff(space, a, b).capped(1.0));

    // first segment is zero iff both sets are empty below the first
    // breakpoint (always true by construction; check directly)
    if (!curve.breakpoints.empty() && curve.breakpoints.front() > 0.0) {
      REQUIRE(curve.segment_values.front() == 0.0);
    }

    // sampled piecewise-constancy, 10 interior samples per interval
    const std::size_t m = curve.breakpoints.size();
    for (std::size_t k = 0; k <= m; ++k) {
      const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
      const double hi = k == m ? lo + 2.0 : curve.breakpoints[k];
      if (lo >= hi) continue;
      for (int s = 0; s < 10; ++s) {
        const double r = lo + unit(rng) * (hi - lo);
        if (r >= hi && k < m) continue;
        REQUIRE(truncated_distance(space, a, b, r) == curve.segment_values[k]);
        REQUIRE(curve.value_at(r) == curve.segment_values[k]);
      }
    }
  }
}

TEST_CASE("open and closed truncation conventions integrate identically") {
  std::mt19937_64 rng(6602);
  const Weight w = Weight::exponential(1.0);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 2;
    const CoordinateSpace space(Norm::euclidean, Point(dim, 0.0));
    const PointSet a = random_set(rng, dim, 10);
    const PointSet b = random_set(rng, dim, 10);
    CurveOptions open;
    open.boundary = BallBoundary::open;
    const double closed_integral =
        integrate_curve(distance_curve(space, a, b), w);
    const double open_integral =
        integrate_curve(distance_curve(space, a, b, open), w);
    REQUIRE(closed_integral == open_integral);
  }
}
