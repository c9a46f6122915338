#include "core/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cx {

double evaluate(const MonicCubic& c, double x) {
  return ((x + c[1]) * x + c[2]) * x + c[3];
}

std::optional<std::array<double, 3>> real_roots(const MonicCubic& c) {
  const double b = c[1];
  const double q = (b * b - 3.0 * c[2]) / 9.0;
  const double r = (b * (2.0 * b * b - 9.0 * c[2]) + 27.0 * c[3]) / 54.0;
  if (!(q > 0.0)) return std::nullopt;

  const double q3 = q * q * q;
  // Allow a double root to slip through rounding; anything clearly beyond is
  // a single real root.
  if (r * r > q3 * (1.0 + 1e-12)) return std::nullopt;

  const double angle = std::acos(std::clamp(r / std::sqrt(q3), -1.0, 1.0));
  const double amplitude = -2.0 * std::sqrt(q);
  const double shift = b / 3.0;
  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;

  std::array<double, 3> roots = {
      amplitude * std::cos(angle / 3.0) - shift,
      amplitude * std::cos(angle / 3.0 + third_turn) - shift,
      amplitude * std::cos(angle / 3.0 - third_turn) - shift,
  };
  for (double& x : roots) {
    const double slope = (3.0 * x + 2.0 * c[1]) * x + c[2];
    if (slope != 0.0) {
      const double step = evaluate(c, x) / slope;
      if (std::isfinite(step)) x -= step;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace cx
