#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "distance.hpp"
#include "hausdorff.hpp"
#include "set.hpp"
#include "space.hpp"
#include "weight.hpp"

namespace chabauty {

/// Outcome of one of the two convergence conditions. A witness is attached
/// when the condition fails: for condition 1 the offending (index, tail
/// point), for condition 2 the offending (limit point, index).
template <typename P>
struct ConditionCheck {
  bool ok = true;
  std::optional<std::size_t> witness_index;
  std::optional<P> witness_point;
  /// Worst violation distance seen (meaningful when !ok and finite).
  double max_violation = 0.0;
  /// A required distance was against an empty set.
  bool violation_infinite = false;
};

/// Condition 1 surrogate: every tail point must lie within tol of the limit
/// set. This strengthens "accumulation points of the sequence lie in the
/// limit" to a pointwise statement that finite data can check.
///
/// Points beyond window_radius are exempt: a sequence escaping to infinity
/// accumulates nowhere, so its far tail points witness nothing. Callers of
/// analyze() get a window matched to the metric (see ConvergenceConfig);
/// the raw check defaults to no window.
template <MetricSpace S>
ConditionCheck<typename S::point_type> check_condition1(
    const S& space,
    const std::vector<FiniteClosedSet<typename S::point_type>>& sequence,
    const FiniteClosedSet<typename S::point_type>& limit,
    std::size_t tail_start, double tol,
    double window_radius = std::numeric_limits<double>::infinity()) {
  if (sequence.empty()) throw std::invalid_argument("empty sequence");
  if (tail_start >= sequence.size())
    throw std::invalid_argument("tail_start beyond the sequence");
  ConditionCheck<typename S::point_type> check;
  for (std::size_t i = tail_start; i < sequence.size(); ++i) {
    for (const auto& x : sequence[i]) {
      if (radius(space, x) > window_radius) continue;
      const auto nearest = nearest_in(space, x, limit);
      const bool infinite = !nearest.has_value();
      if (!infinite && nearest->first <= tol) continue;
      if (check.ok) {
        check.ok = false;
        check.witness_index = i;
        check.witness_point = x;
      }
      if (infinite)
        check.violation_infinite = true;
      else
        check.max_violation = std::max(check.max_violation, nearest->first);
    }
  }
  return check;
}

/// Condition 2 surrogate: every limit point must be within tol of every tail
/// set (finite stand-in for "each limit point is approximated by a sequence
/// of members"). Vacuously true for an empty limit. Limit points beyond
/// window_radius are exempt, mirroring condition 1.
template <MetricSpace S>
ConditionCheck<typename S::point_type> check_condition2(
    const S& space,
    const std::vector<FiniteClosedSet<typename S::point_type>>& sequence,
    const FiniteClosedSet<typename S::point_type>& limit,
    std::size_t tail_start, double tol,
    double window_radius = std::numeric_limits<double>::infinity()) {
  if (sequence.empty()) throw std::invalid_argument("empty sequence");
  if (tail_start >= sequence.size())
    throw std::invalid_argument("tail_start beyond the sequence");
  ConditionCheck<typename S::point_type> check;
  for (const auto& x : limit) {
    if (radius(space, x) > window_radius) continue;
    for (std::size_t i = tail_start; i < sequence.size(); ++i) {
      const auto nearest = nearest_in(space, x, sequence[i]);
      const bool infinite = !nearest.has_value();
      if (!infinite && nearest->first <= tol) continue;
      if (check.ok) {
        check.ok = false;
        check.witness_index = i;
        check.witness_point = x;
      }
      if (infinite)
        check.violation_infinite = true;
      else
        check.max_violation = std::max(check.max_violation, nearest->first);
    }
  }
  return check;
}

enum class Verdict { converges, diverges, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::converges: return "converges";
    case Verdict::diverges: return "diverges";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ConvergenceConfig {
  /// First index of the tail under scrutiny; defaults to mid-sequence.
  std::optional<std::size_t> tail_start;
  /// Pointwise tolerance for the two conditions.
  double tol = 1e-2;
  /// The final integrated distance must sit below this for `converges`.
  double d_threshold = 1e-3;
  Weight weight = Weight::exponential(1.0);
  /// Condition checks ignore points farther out than this. By default it is
  /// derived from the weight as the radius where the remaining tail mass
  /// drops to d_threshold: beyond it the metric itself cannot tell sets
  /// apart at the d_threshold level, so points there must not block a
  /// verdict (an escaping sequence converges to the empty set).
  std::optional<double> window_radius;
  /// A failing condition only counts as stable when the worst violation on
  /// a later tail is at least this fraction of the first tail's; violations
  /// that shrink look like a family still approaching its limit.
  double stability_ratio = 0.75;
  /// Below this many sets any verdict would be noise.
  std::size_t min_length = 4;
};

template <typename P>
struct ConvergenceReport {
  ConditionCheck<P> condition1;
  ConditionCheck<P> condition2;
  std::vector<double> d_values;  // d(C_i, limit) for every index
  Verdict verdict = Verdict::inconclusive;
  std::size_t tail_start = 0;     // as resolved
  double window_radius = 0.0;     // as resolved
};

namespace detail {

template <typename P>
bool violation_persists(const ConditionCheck<P>& first,
                        const ConditionCheck<P>& later, double ratio) {
  if (later.ok) return false;
  if (later.violation_infinite) return true;
  if (first.violation_infinite) return false;  // infinite collapsed to finite
  return later.max_violation >= ratio * first.max_violation;
}

}  // namespace detail

/// Runs both condition surrogates and the integrated distances, then rules:
///   converges    both conditions pass and the last d-value is below
///                d_threshold;
///   diverges     a condition fails and keeps failing, undiminished, on a
///                later tail (a stable witness);
///   inconclusive everything else; finite data cannot decide a limit
///                statement, and short or borderline inputs land here.
template <MetricSpace S>
ConvergenceReport<typename S::point_type> analyze(
    const S& space,
    const std::vector<FiniteClosedSet<typename S::point_type>>& sequence,
    const FiniteClosedSet<typename S::point_type>& limit,
    const ConvergenceConfig& config = {}) {
  using P = typename S::point_type;
  const std::size_t n = sequence.size();
  if (n == 0) throw std::invalid_argument("empty sequence");

  ConvergenceReport<P> report;
  report.tail_start = config.tail_start.value_or(n / 2);
  if (report.tail_start >= n)
    throw std::invalid_argument("tail_start beyond the sequence");
  report.window_radius = config.window_radius.value_or(
      config.weight.inverse_tail(config.d_threshold));

  report.condition1 = check_condition1(space, sequence, limit,
                                       report.tail_start, config.tol,
                                       report.window_radius);
  report.condition2 = check_condition2(space, sequence, limit,
                                       report.tail_start, config.tol,
                                       report.window_radius);
  report.d_values.reserve(n);
  for (const auto& set : sequence)
    report.d_values.push_back(
        chabauty_distance(space, set, limit, config.weight));

  if (n < config.min_length) {
    report.verdict = Verdict::inconclusive;
    return report;
  }

  if (report.condition1.ok && report.condition2.ok) {
    report.verdict = report.d_values.back() < config.d_threshold
                         ? Verdict::converges
                         : Verdict::inconclusive;
    return report;
  }

  const std::size_t later_tail =
      report.tail_start + (n - report.tail_start) / 2;
  if (later_tail == report.tail_start || later_tail >= n) {
    report.verdict = Verdict::inconclusive;
    return report;
  }
  bool stable = false;
  if (!report.condition1.ok) {
    const auto again = check_condition1(space, sequence, limit, later_tail,
                                        config.tol, report.window_radius);
    stable = stable || detail::violation_persists(report.condition1, again,
                                                  config.stability_ratio);
  }
  if (!stable && !report.condition2.ok) {
    const auto again = check_condition2(space, sequence, limit, later_tail,
                                        config.tol, report.window_radius);
    stable = stable || detail::violation_persists(report.condition2, again,
                                                  config.stability_ratio);
  }
  report.verdict = stable ? Verdict::diverges : Verdict::inconclusive;
  return report;
}

}  // namespace chabauty
