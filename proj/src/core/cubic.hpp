#pragma once

#include <array>
#include <optional>

namespace cx {

/// Coefficients of x^3 + c[1] x^2 + c[2] x + c[3] (c[0] == 1).
using MonicCubic = std::array<double, 4>;

double evaluate(const MonicCubic& c, double x);

/// Three real roots in ascending order, or nullopt when the discriminant says
/// there are fewer. Trigonometric (casus irreducibilis) form followed by one
/// Newton step per root.
std::optional<std::array<double, 3>> real_roots(const MonicCubic& c);

}  // namespace cx
