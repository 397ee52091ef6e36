#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "curve.hpp"
#include "distance.hpp"
#include "set.hpp"
#include "space.hpp"
#include "weight.hpp"

namespace chabauty {

/// Deliberately corrupted evaluation modes for the negative control: a
/// healthy build passes every suite, a faulted run must be caught.
enum class SelfTestFault { none, cap };

struct SelfTestOptions {
  std::uint64_t seed = 0;
  int trials = 200;
  double r_cut = 30.0;
  double quadrature_tol = 1e-9;
  SelfTestFault fault = SelfTestFault::none;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

struct SelfTestReport {
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& s : suites)
      if (s.failures > 0) return false;
    return true;
  }
};

namespace detail {

inline PointSet random_point_set(std::mt19937_64& rng, int dim, int min_size,
                                 int max_size) {
  std::uniform_int_distribution<int> size_dist(min_size, max_size);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  const int size = size_dist(rng);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    Point p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = coord(rng);
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline void note_failure(SuiteResult& suite, int trial,
                         const std::string& what) {
  ++suite.failures;
  if (suite.first_failure.empty())
    suite.first_failure = "trial " + std::to_string(trial) + ": " + what;
}

}  // namespace detail

/// Seeded property suites over the whole pipeline. Identical options give a
/// byte-identical report.
inline SelfTestReport run_selftest(const SelfTestOptions& options = {}) {
  SelfTestReport report;
  const Weight unit = Weight::exponential(1.0);
  const double fault_cap = options.fault == SelfTestFault::cap ? 2.0 : 1.0;

  {  // metric axioms on random finite-set triples in R^1 and R^2
    SuiteResult suite;
    suite.name = "metric-axioms";
    std::mt19937_64 rng(options.seed * 6364136223846793005ULL + 1);
    for (int t = 0; t < options.trials; ++t) {
      suite.trials++;
      const int dim = 1 + (t % 2);
      const CoordinateSpace space(Norm::euclidean,
                                  Point(static_cast<std::size_t>(dim), 0.0));
      const PointSet a = detail::random_point_set(rng, dim, 0, 12);
      const PointSet b = detail::random_point_set(rng, dim, 0, 12);
      const PointSet c = detail::random_point_set(rng, dim, 0, 12);
      if (chabauty_distance(space, a, a, unit) != 0.0) {
        detail::note_failure(suite, t, "d(A,A) != 0");
        continue;
      }
      const double dab = chabauty_distance(space, a, b, unit);
      const double dba = chabauty_distance(space, b, a, unit);
      if (dab != dba) {
        detail::note_failure(suite, t, "symmetry not bitwise");
        continue;
      }
      if (!(a == b) && !(dab > 0.0)) {
        detail::note_failure(suite, t, "distinct sets at distance 0");
        continue;
      }
      const double dbc = chabauty_distance(space, b, c, unit);
      const double dac = chabauty_distance(space, a, c, unit);
      if (dac > dab + dbc + 1e-9)
        detail::note_failure(suite, t, "triangle inequality violated");
    }
    report.suites.push_back(std::move(suite));
  }

  {  // curve segments really are the sampled truncated distance
    SuiteResult suite;
    suite.name = "piecewise-constancy";
    std::mt19937_64 rng(options.seed * 6364136223846793005ULL + 2);
    std::uniform_real_distribution<double> unit_draw(0.0, 1.0);
    for (int t = 0; t < options.trials; ++t) {
      suite.trials++;
      const int dim = 1 + (t % 2);
      const CoordinateSpace space(Norm::euclidean,
                                  Point(static_cast<std::size_t>(dim), 0.0));
      const PointSet a = detail::random_point_set(rng, dim, 0, 10);
      const PointSet b = detail::random_point_set(rng, dim, 0, 10);
      const DistanceCurve curve = distance_curve(space, a, b);
      bool bad = false;
      const std::size_t m = curve.breakpoints.size();
      for (std::size_t k = 0; k <= m && !bad; ++k) {
        const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
        const double hi = k == m ? lo + 3.0 : curve.breakpoints[k];
        if (lo >= hi) continue;
        for (int s = 0; s < 3; ++s) {
          const double r = lo + unit_draw(rng) * (hi - lo);
          if (r >= hi && k < m) continue;  // stay inside the segment
          if (truncated_distance(space, a, b, r) != curve.segment_values[k]) {
            bad = true;
            break;
          }
        }
      }
      if (bad) detail::note_failure(suite, t, "sampled d_R != segment value");
    }
    report.suites.push_back(std::move(suite));
  }

  {  // numerical route agrees with the exact route
    SuiteResult suite;
    suite.name = "exact-vs-quadrature";
    std::mt19937_64 rng(options.seed * 6364136223846793005ULL + 3);
    const int quad_trials = std::max(1, options.trials / 10);
    for (int t = 0; t < quad_trials; ++t) {
      suite.trials++;
      const int dim = 1 + (t % 2);
      const CoordinateSpace space(Norm::euclidean,
                                  Point(static_cast<std::size_t>(dim), 0.0));
      const PointSet a = detail::random_point_set(rng, dim, 0, 10);
      const PointSet b = detail::random_point_set(rng, dim, 0, 10);
      const double exact = chabauty_distance(space, a, b, unit);
      const QuadratureDistance quad = chabauty_distance_quadrature(
          space, a, b, unit, options.r_cut, options.quadrature_tol);
      if (std::abs(exact - quad.value) > quad.error_bound)
        detail::note_failure(suite, t, "exact vs quadrature beyond bound");
    }
    report.suites.push_back(std::move(suite));
  }

  {  // cap: d <= W(0) everywhere, attained by {0} vs {1}
    SuiteResult suite;
    suite.name = "cap";
    std::mt19937_64 rng(options.seed * 6364136223846793005ULL + 4);
    const CoordinateSpace line(Norm::euclidean, Point{0.0});
    const Weight faster = Weight::exponential(2.0);
    CurveOptions curve_options;
    curve_options.cap = fault_cap;
    auto capped_distance = [&](const CoordinateSpace& space, const PointSet& x,
                               const PointSet& y, const Weight& w) {
      return integrate_curve(distance_curve(space, x, y, curve_options), w);
    };
    for (int t = 0; t < options.trials; ++t) {
      suite.trials++;
      if (t == 0) {
        const double attained =
            capped_distance(line, PointSet({{0.0}}), PointSet({{1.0}}), unit);
        if (std::abs(attained - 1.0) > 1e-12) {
          detail::note_failure(suite, t, "d({0},{1}) != 1");
          continue;
        }
      }
      const int dim = 1 + (t % 2);
      const CoordinateSpace space(Norm::euclidean,
                                  Point(static_cast<std::size_t>(dim), 0.0));
      const PointSet a = detail::random_point_set(rng, dim, 0, 10);
      const PointSet b = detail::random_point_set(rng, dim, 0, 10);
      if (capped_distance(space, a, b, unit) > unit.total() + 1e-12 ||
          capped_distance(space, a, b, faster) > faster.total() + 1e-12)
        detail::note_failure(suite, t, "distance above W(0)");
    }
    report.suites.push_back(std::move(suite));
  }

  {  // d(empty, A) = W(min radius of A)
    SuiteResult suite;
    suite.name = "empty-set-formula";
    std::mt19937_64 rng(options.seed * 6364136223846793005ULL + 5);
    const PointSet none;
    for (int t = 0; t < options.trials; ++t) {
      suite.trials++;
      const int dim = 1 + (t % 2);
      const CoordinateSpace space(Norm::euclidean,
                                  Point(static_cast<std::size_t>(dim), 0.0));
      if (t == 0 && chabauty_distance(space, none, none, unit) != 0.0) {
        detail::note_failure(suite, t, "d(empty, empty) != 0");
        continue;
      }
      const PointSet a = detail::random_point_set(rng, dim, 1, 12);
      const double expected = unit.tail(*min_radius(space, a));
      if (std::abs(chabauty_distance(space, none, a, unit) - expected) > 1e-12)
        detail::note_failure(suite, t, "d(empty, A) != W(min radius)");
    }
    report.suites.push_back(std::move(suite));
  }

  return report;
}

}  // namespace chabauty
