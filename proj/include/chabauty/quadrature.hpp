#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace chabauty {

struct QuadratureOptions {
  double tolerance = 1e-9;
  /// Subdivision bottoms out here regardless of the Richardson estimate,
  /// which localizes jump discontinuities to (b-a) * 2^-max_depth.
  int max_depth = 52;
  /// Hard cap on integrand evaluations; exceeding it throws. Unreachable for
  /// piecewise-constant integrands (jumps cost ~2*max_depth evaluations each).
  std::size_t max_evaluations = 5'000'000;
  /// The interval is pre-split into this many equal panels before adaptivity,
  /// so that several jumps rarely share one panel.
  int initial_panels = 8;
};

struct QuadratureOutcome {
  double value = 0.0;
  double error_estimate = 0.0;  // accumulated Richardson estimates
  std::size_t evaluations = 0;
};

class QuadratureBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive Simpson on [a, b] with Richardson acceptance and the accepted
/// estimate's fourth-order correction term folded in.
template <typename F>
QuadratureOutcome adaptive_simpson(F&& f, double a, double b,
                                   const QuadratureOptions& options = {}) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < a)
    throw std::invalid_argument("quadrature needs finite bounds with a <= b");
  if (!(options.tolerance > 0.0))
    throw std::invalid_argument("quadrature tolerance must be positive");

  QuadratureOutcome outcome;
  if (a == b) return outcome;

  auto eval = [&](double x) {
    if (++outcome.evaluations > options.max_evaluations)
      throw QuadratureBudgetError("quadrature evaluation budget exhausted");
    return f(x);
  };

  struct Frame {
    double a, b, fa, fm, fb, whole, tol;
    int depth;
  };

  auto simpson = [](double lo, double hi, double flo, double fmid, double fhi) {
    return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  };

  auto recurse = [&](auto&& self, const Frame& fr) -> double {
    const double m = 0.5 * (fr.a + fr.b);
    const double lm = 0.5 * (fr.a + m);
    const double rm = 0.5 * (m + fr.b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(fr.a, m, fr.fa, flm, fr.fm);
    const double right = simpson(m, fr.b, fr.fm, frm, fr.fb);
    const double refined = left + right;
    const double delta = refined - fr.whole;
    if (fr.depth >= options.max_depth || std::abs(delta) <= 15.0 * fr.tol) {
      outcome.error_estimate += std::abs(delta) / 15.0;
      return refined + delta / 15.0;
    }
    const double half_tol = 0.5 * fr.tol;
    double sum = self(self, Frame{fr.a, m, fr.fa, flm, fr.fm, left, half_tol,
                                  fr.depth + 1});
    sum += self(self,
                Frame{m, fr.b, fr.fm, frm, fr.fb, right, half_tol, fr.depth + 1});
    return sum;
  };

  const int panels = std::max(1, options.initial_panels);
  const double width = (b - a) / panels;
  double total = 0.0;
  double left_edge = a;
  double f_left = eval(left_edge);
  for (int k = 0; k < panels; ++k) {
    const double right_edge = k + 1 == panels ? b : a + (k + 1) * width;
    const double mid = 0.5 * (left_edge + right_edge);
    const double f_mid = eval(mid);
    const double f_right = eval(right_edge);
    const double whole = simpson(left_edge, right_edge, f_left, f_mid, f_right);
    const double panel_tol =
        options.tolerance * ((right_edge - left_edge) / (b - a));
    total += recurse(recurse, Frame{left_edge, right_edge, f_left, f_mid,
                                    f_right, whole, panel_tol, 0});
    left_edge = right_edge;
    f_left = f_right;
  }
  outcome.value = total;
  return outcome;
}

}  // namespace chabauty
