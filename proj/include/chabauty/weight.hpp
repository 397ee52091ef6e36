#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace chabauty {

/// Positive integrable weight w on [0, inf) together with its exact tail
/// integral W(R) = integral of w over [R, inf).
///
/// The piecewise integration behind the metric needs exact interval masses
/// W(R0) - W(R1), so every Weight must supply W in closed form; purely
/// pointwise weights are not representable here on purpose. Masses are
/// evaluated cancellation-free: the exponential family uses
/// W(R0) * (1 - e^{-a (R1-R0)}) via expm1 instead of subtracting two
/// near-equal tails.
///
/// Two kinds:
///  - exponential(a):  w(R) = e^{-a R},  W(R) = e^{-a R} / a
///  - tabulated: piecewise-constant positive values on [0, b_m) given by
///    knots b_1 < ... < b_m, continued past b_m by an exponential tail so
///    that w stays positive and integrable everywhere.
class Weight {
 public:
  enum class Kind { exponential, tabulated };

  static Weight exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
      throw std::invalid_argument("exponential weight rate must be positive");
    Weight w;
    w.kind_ = Kind::exponential;
    w.rate_ = rate;
    return w;
  }

  /// values[j] is w on [knots[j-1], knots[j]) with knots[-1] := 0; past the
  /// last knot w decays as values.back() * e^{-tail_rate (R - last knot)}.
  static Weight tabulated(std::vector<double> knots,
                          std::vector<double> values, double tail_rate) {
    if (knots.empty() || knots.size() != values.size())
      throw std::invalid_argument(
          "tabulated weight needs matching nonempty knots and values");
    if (!(tail_rate > 0.0) || !std::isfinite(tail_rate))
      throw std::invalid_argument("tabulated weight tail rate must be positive");
    double prev = 0.0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
      if (!(knots[i] > prev) || !std::isfinite(knots[i]))
        throw std::invalid_argument(
            "tabulated weight knots must be strictly increasing and positive");
      if (!(values[i] > 0.0) || !std::isfinite(values[i]))
        throw std::invalid_argument("tabulated weight values must be positive");
      prev = knots[i];
    }
    Weight w;
    w.kind_ = Kind::tabulated;
    w.rate_ = tail_rate;
    w.knots_ = std::move(knots);
    w.values_ = std::move(values);
    // Tails at the knots, innermost last: W(b_m) = v_m / a, then
    // W(b_{j-1}) = W(b_j) + v_j (b_j - b_{j-1}).
    w.knot_tails_.assign(w.knots_.size(), 0.0);
    w.knot_tails_.back() = w.values_.back() / w.rate_;
    for (std::size_t j = w.knots_.size() - 1; j-- > 0;)
      w.knot_tails_[j] =
          w.knot_tails_[j + 1] + w.values_[j + 1] * (w.knots_[j + 1] - w.knots_[j]);
    return w;
  }

  Kind kind() const { return kind_; }

  double evaluate(double R) const {
    if (kind_ == Kind::exponential) return std::exp(-rate_ * R);
    const std::size_t seg = segment(R);
    if (seg == knots_.size())
      return values_.back() * std::exp(-rate_ * (R - knots_.back()));
    return values_[seg];
  }

  /// W(R), strictly decreasing to 0.
  double tail(double R) const {
    if (kind_ == Kind::exponential) return std::exp(-rate_ * R) / rate_;
    const std::size_t seg = segment(R);
    if (seg == knots_.size())
      return knot_tails_.back() * std::exp(-rate_ * (R - knots_.back()));
    return knot_tails_[seg] + values_[seg] * (knots_[seg] - R);
  }

  /// W(0): the total mass, and the cap on any distance built from this
  /// weight (1 for the default e^{-R}).
  double total() const { return tail(0.0); }

  /// Exact mass of [r0, r1] (r1 may be +inf), cancellation-free.
  double interval_mass(double r0, double r1) const {
    if (!(r0 >= 0.0) || r1 < r0)
      throw std::invalid_argument("interval mass needs 0 <= r0 <= r1");
    if (std::isinf(r1)) return tail(r0);
    if (kind_ == Kind::exponential)
      return tail(r0) * -std::expm1(-rate_ * (r1 - r0));
    // Piecewise decomposition; each piece is exact in its own closed form.
    double mass = 0.0;
    double at = r0;
    std::size_t seg = segment(at);
    while (seg < knots_.size() && knots_[seg] < r1) {
      mass += values_[seg] * (knots_[seg] - at);
      at = knots_[seg];
      ++seg;
    }
    if (seg == knots_.size())
      mass += tail(at) * -std::expm1(-rate_ * (r1 - at));
    else
      mass += values_[seg] * (r1 - at);
    return mass;
  }

  /// Smallest R with W(R) <= mass (the radius beyond which the metric can
  /// contribute at most `mass`). +inf when mass <= 0, 0 when mass >= W(0).
  double inverse_tail(double mass) const {
    if (!(mass > 0.0)) return std::numeric_limits<double>::infinity();
    if (mass >= total()) return 0.0;
    if (kind_ == Kind::exponential) return -std::log(rate_ * mass) / rate_;
    if (mass <= knot_tails_.back())
      return knots_.back() - std::log(mass / knot_tails_.back()) / rate_;
    std::size_t seg = 0;
    while (knot_tails_[seg] > mass) ++seg;
    // mass lies between W(b_seg) and W(b_{seg-1}); invert the linear piece.
    return knots_[seg] - (mass - knot_tails_[seg]) / values_[seg];
  }

  /// CLI grammar for the closed-form-exact family: "exp:<rate>".
  static Weight parse(const std::string& text) {
    const std::string prefix = "exp:";
    if (text.rfind(prefix, 0) != 0)
      throw std::invalid_argument("weight spec must look like exp:<rate>");
    const std::string num = text.substr(prefix.size());
    char* end = nullptr;
    const double rate = std::strtod(num.c_str(), &end);
    if (num.empty() || end != num.c_str() + num.size())
      throw std::invalid_argument("cannot parse weight rate: " + num);
    return exponential(rate);
  }

  std::string spec_string() const {
    if (kind_ == Kind::exponential) {
      std::string s = std::to_string(rate_);
      // trim trailing zeros for the common integral rates
      while (s.find('.') != std::string::npos &&
             (s.back() == '0' || s.back() == '.'))
        s.pop_back();
      return "exp:" + s;
    }
    return "tabulated";
  }

 private:
  Weight() = default;

  /// Index of the piecewise segment containing R: j for [b_{j-1}, b_j),
  /// knots_.size() for the exponential tail.
  std::size_t segment(double R) const {
    std::size_t lo = 0;
    while (lo < knots_.size() && knots_[lo] <= R) ++lo;
    return lo;
  }

  Kind kind_ = Kind::exponential;
  double rate_ = 1.0;
  std::vector<double> knots_;
  std::vector<double> values_;
  std::vector<double> knot_tails_;
};

}  // namespace chabauty
