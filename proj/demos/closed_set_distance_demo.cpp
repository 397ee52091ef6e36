// Walkthrough of the library on the motivating example: a point sliding down
// onto the unit circle. The truncated distance at the circle's radius never
// moves, the integrated distance still sees the convergence.

#include <cstdio>

#include <chabauty/chabauty.hpp>

int main() {
  using namespace chabauty;

  const CoordinateSpace plane(Norm::euclidean, Point{0.0, 0.0});
  const PointSet limit = boundary_approach_limit();  // {(1, 0)}

  std::printf("  i   d_R at R=1    d(A_i, limit)\n");
  for (int i : {1, 4, 16, 64, 256, 1024}) {
    const PointSet a = boundary_approach_set(i);  // {(1 + 1/i, 0)}
    std::printf("%5d   %8.4f     %.8f\n", i,
                truncated_distance(plane, a, limit, 1.0),
                chabauty_distance(plane, a, limit));
  }

  const PointSet a4 = boundary_approach_set(4);
  const DistanceCurve curve = distance_curve(plane, a4, limit);
  std::printf("\ncurve for i = 4:\n");
  for (std::size_t k = 0; k <= curve.breakpoints.size(); ++k) {
    const double lo = k == 0 ? 0.0 : curve.breakpoints[k - 1];
    if (k == curve.breakpoints.size())
      std::printf("  [%g, inf)  ->  %g\n", lo, curve.segment_values[k]);
    else
      std::printf("  [%g, %g)  ->  %g\n", lo, curve.breakpoints[k],
                  curve.segment_values[k]);
  }

  const auto report = analyze(plane, boundary_approach_family(1000), limit);
  std::printf("\nconvergence verdict over 1000 terms: %s\n",
              to_string(report.verdict).c_str());
  return 0;
}
