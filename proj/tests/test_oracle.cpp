#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include <chabauty/generators.hpp>
#include <chabauty/hausdorff.hpp>
#include <chabauty/oracle.hpp>

using namespace chabauty;

TEST_CASE("epsilon net recovers a singleton within epsilon") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  const SetOracle oracle = oracle_from_set(line, PointSet({{0.0}}));
  const PointSet net = epsilon_net(oracle, line, 1.0, 0.1);
  REQUIRE_FALSE(net.empty());
  const auto gap = hausdorff(line, net, PointSet({{0.0}}));
  REQUIRE_FALSE(gap.infinite);
  CHECK(gap.value <= 0.1);
}

TEST_CASE("epsilon net of the empty oracle is empty") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  CHECK(epsilon_net(empty_oracle(), plane, 2.0, 0.1) == PointSet{});
}

TEST_CASE("epsilon net of the unit circle has symmetric gap <= epsilon") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const SetOracle circle = circle_oracle(plane, {0.0, 0.0}, 1.0);
  const double eps = 0.05;
  const PointSet net = epsilon_net(circle, plane, 2.0, eps);
  REQUIRE_FALSE(net.empty());

  // soundness: every net point is within eps of the circle
  for (const Point& p : net) REQUIRE(circle.nearest_distance(p) <= eps);

  // dense-sample check of the other direction
  for (int k = 0; k < 10000; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / 10000.0;
    const Point on_circle{std::cos(angle), std::sin(angle)};
    const auto nearest = nearest_in(plane, on_circle, net);
    REQUIRE(nearest.has_value());
    REQUIRE(nearest->first <= eps);
  }
}

TEST_CASE("oracle distance fields are 1-Lipschitz on sampled pairs") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const SetOracle circle = circle_oracle(plane, {0.3, -0.2}, 0.8);
  const SetOracle cloud =
      oracle_from_set(plane, random_cloud(31, 20, 2, 1.5));
  std::mt19937_64 rng(2203);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int t = 0; t < 500; ++t) {
    const Point x{coord(rng), coord(rng)};
    const Point y{coord(rng), coord(rng)};
    const double step = plane.distance(x, y) + 1e-12;
    CHECK(std::abs(circle.nearest_distance(x) - circle.nearest_distance(y)) <=
          step);
    CHECK(std::abs(cloud.nearest_distance(x) - cloud.nearest_distance(y)) <=
          step);
  }
}

TEST_CASE("epsilon net enforces budget, reach and argument checks") {
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const SetOracle circle = circle_oracle(plane, {0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(epsilon_net(circle, plane, 2.0, 1e-5), NetBudgetError);
  CHECK_THROWS_AS(epsilon_net(circle, plane, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_net(circle, plane, 0.0, 0.1), std::invalid_argument);

  SetOracle bounded = circle;
  bounded.reach_radius = 1.5;
  CHECK_THROWS_AS(epsilon_net(bounded, plane, 2.0, 0.1),
                  std::invalid_argument);
  CHECK_NOTHROW(epsilon_net(bounded, plane, 1.4, 0.1));
}
