#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <chabauty/generators.hpp>
#include <chabauty/hausdorff.hpp>

using namespace chabauty;

namespace {

PointSet random_set(std::mt19937_64& rng, std::size_t dim, int max_size,
                    double extent = 5.0) {
  std::uniform_int_distribution<int> size(0, max_size);
  std::uniform_real_distribution<double> coord(-extent, extent);
  std::vector<Point> pts(static_cast<std::size_t>(size(rng)));
  for (auto& p : pts) {
    p.resize(dim);
    for (auto& c : p) c = coord(rng);
  }
  return PointSet(std::move(pts));
}

/// Hausdorff value recovered from the neighborhood definition: bisection on
/// eps over "A inside the eps-neighborhood of B and vice versa".
template <MetricSpace S>
double hausdorff_by_bisection(const S& space,
                              const FiniteClosedSet<typename S::point_type>& A,
                              const FiniteClosedSet<typename S::point_type>& B,
                              double hi) {
  auto contained = [&](const auto& inner, const auto& outer, double eps) {
    for (const auto& p : inner)
      if (nearest_in(space, p, outer)->first > eps) return false;
    return true;
  };
  double lo = 0.0;
  if (contained(A, B, 0.0) && contained(B, A, 0.0)) return 0.0;
  for (int iter = 0; iter < 80; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (contained(A, B, mid) && contained(B, A, mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

TEST_CASE("directed Hausdorff matches hand values and conventions") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});

  SECTION("containment gives zero") {
    const PointSet a({{1.0}, {2.0}});
    const PointSet b({{0.0}, {1.0}, {2.0}, {5.0}});
    const auto r = directed_hausdorff(line, a, b);
    CHECK(r.value == 0.0);
    CHECK_FALSE(r.infinite);
  }
  SECTION("max-min over a 2x1 instance") {
    const auto r = directed_hausdorff(line, PointSet({{0.0}, {2.0}}),
                                      PointSet({{1.0}}));
    CHECK(r.value == 1.0);
    REQUIRE(r.witness_a.has_value());
    CHECK((*r.witness_a == Point{0.0} || *r.witness_a == Point{2.0}));
    CHECK(*r.witness_b == Point{1.0});
  }
  SECTION("empty-set conventions") {
    const PointSet a({{0.0}});
    const auto infinite = directed_hausdorff(line, a, PointSet{});
    CHECK(infinite.infinite);
    CHECK_FALSE(infinite.witness_a.has_value());
    const auto vacuous = directed_hausdorff(line, PointSet{}, a);
    CHECK_FALSE(vacuous.infinite);
    CHECK(vacuous.value == 0.0);
  }
}

TEST_CASE("symmetric Hausdorff matches hand values") {
  const CoordinateSpace line(Norm::euclidean, Point{0.0});
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});

  CHECK(hausdorff(line, PointSet({{0.0}}), PointSet({{3.0}})).value == 3.0);

  const PointSet a({{0.0, 0.0}, {1.0, 0.0}});
  const PointSet b({{0.0, 1.0}});
  CHECK(hausdorff(plane, a, b).value == std::sqrt(2.0));

  const PointSet self({{0.25}, {2.0}});
  CHECK(hausdorff(line, self, self).value == 0.0);
  CHECK(hausdorff(line, PointSet{}, PointSet{}).value == 0.0);
  CHECK(hausdorff(line, PointSet{}, PointSet({{0.0}})).infinite);
}

TEST_CASE("Hausdorff is bitwise symmetric and detects equality") {
  std::mt19937_64 rng(4401);
  const CoordinateSpace plane(Norm::chebyshev, Point{0.0, 0.0});
  for (int t = 0; t < 300; ++t) {
    const PointSet a = random_set(rng, 2, 12);
    const PointSet b = random_set(rng, 2, 12);
    const auto ab = hausdorff(plane, a, b);
    const auto ba = hausdorff(plane, b, a);
    REQUIRE(ab.infinite == ba.infinite);
    if (!ab.infinite) REQUIRE(ab.value == ba.value);  // bitwise
    if (!ab.infinite) REQUIRE(((ab.value == 0.0) == (a == b)));
    if (!ab.infinite && !a.empty() && !b.empty()) {
      REQUIRE(ab.witness_a.has_value());
      REQUIRE(a.contains(*ab.witness_a));
      REQUIRE(b.contains(*ab.witness_b));
    }
  }
}

TEST_CASE("Hausdorff triangle inequality with the infinite value absorbing") {
  std::mt19937_64 rng(4402);
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  for (int t = 0; t < 300; ++t) {
    const PointSet a = random_set(rng, 2, 8);
    const PointSet b = random_set(rng, 2, 8);
    const PointSet c = random_set(rng, 2, 8);
    const auto ab = hausdorff(plane, a, b);
    const auto bc = hausdorff(plane, b, c);
    const auto ac = hausdorff(plane, a, c);
    if (ab.infinite || bc.infinite) continue;  // right side infinite: trivial
    REQUIRE_FALSE(ac.infinite);  // finiteness is an emptiness statement
    REQUIRE(ac.value <= ab.value + bc.value + 1e-12);
  }
}

TEST_CASE("bisection over the neighborhood definition agrees with max-min") {
  std::mt19937_64 rng(4403);
  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  for (int t = 0; t < 40; ++t) {
    PointSet a = random_set(rng, 2, 20);
    PointSet b = random_set(rng, 2, 20);
    if (a.empty() || b.empty()) continue;
    const double reference = hausdorff(plane, a, b).value;
    const double bisected = hausdorff_by_bisection(plane, a, b, 40.0);
    REQUIRE_THAT(bisected, Catch::Matchers::WithinAbs(reference, 1e-9));
  }
}

TEST_CASE("accelerated path equals brute force") {
  std::mt19937_64 rng(4404);

  SECTION("exhaustive cross-check on tiny sets") {
    const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
    for (int t = 0; t < 200; ++t) {
      const PointSet a = random_set(rng, 2, 8);
      const PointSet b = random_set(rng, 2, 8);
      const auto fast = hausdorff_accelerated(plane, a, b);
      const auto slow = hausdorff(plane, a, b);
      REQUIRE(fast.infinite == slow.infinite);
      if (!fast.infinite) REQUIRE(fast.value == slow.value);
    }
  }

  SECTION("larger clouds within 1e-12 relative, all norms") {
    for (const Norm norm :
         {Norm::euclidean, Norm::chebyshev, Norm::manhattan}) {
      const CoordinateSpace space(norm, Point{0.0, 0.0});
      for (int t = 0; t < 20; ++t) {
        const PointSet a = random_set(rng, 2, 400);
        const PointSet b = random_set(rng, 2, 400);
        const auto fast = hausdorff_accelerated(space, a, b);
        const auto slow = hausdorff(space, a, b);
        REQUIRE(fast.infinite == slow.infinite);
        if (!fast.infinite)
          REQUIRE_THAT(fast.value, Catch::Matchers::WithinRel(slow.value,
                                                              1e-12));
      }
    }
  }

  SECTION("identical 10^4 clouds sit at distance zero") {
    const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
    const PointSet cloud = random_cloud(5, 10000, 2, 100.0);
    const auto r = hausdorff_accelerated(plane, cloud, cloud);
    CHECK(r.value == 0.0);
  }

  SECTION("witness subsample verification on 10^4 clouds") {
    const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
    const PointSet a = random_cloud(6, 10000, 2, 100.0);
    const PointSet b = random_cloud(7, 10000, 2, 100.0);
    const auto fast = hausdorff_accelerated(plane, a, b);
    REQUIRE_FALSE(fast.infinite);
    REQUIRE(fast.witness_a.has_value());

    // brute force over a subsample containing the witness reproduces the
    // value: the witness realizes it, no subsample point can beat it
    std::vector<Point> sample_a{*fast.witness_a};
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    while (sample_a.size() < 200) sample_a.push_back(a[pick(rng)]);
    const auto dir =
        directed_hausdorff(plane, PointSet(std::move(sample_a)), b);
    const auto full_ab = directed_hausdorff(plane, a, b);
    const auto full_ba = directed_hausdorff(plane, b, a);
    const double reference = std::max(full_ab.value, full_ba.value);
    REQUIRE_THAT(fast.value, Catch::Matchers::WithinRel(reference, 1e-12));
    if (full_ab.value >= full_ba.value)
      REQUIRE_THAT(dir.value, Catch::Matchers::WithinRel(fast.value, 1e-12));
  }

  SECTION("graph spaces fall back to brute force") {
    const GraphSpace graph(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.5}}, 0);
    const VertexSet a({0, 2});
    const VertexSet b({1});
    const auto fast = hausdorff_accelerated(graph, a, b);
    const auto slow = hausdorff(graph, a, b);
    CHECK(fast.value == slow.value);
  }
}
