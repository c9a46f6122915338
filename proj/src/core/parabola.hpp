#pragma once

#include <compare>

#include "core/projective.hpp"

namespace cx {

/// A regular conic tangent to the line at infinity x0 = 0.
///
/// The stored matrix is oriented so that p11 + p22 > 0, which makes the
/// quadratic form negative exactly on the (convex) interior. The parameter is
/// the focus-directrix distance; apex and opening direction are recovered from
/// the matrix entries.
class Parabola {
 public:
  /// Throws NotAParabola unless is_parabola(c).
  static Parabola from_conic(const ConicMatrix& c);

  const ConicMatrix& conic() const noexcept { return conic_; }
  double parameter() const noexcept { return parameter_; }
  const Point2& apex() const noexcept { return apex_; }
  /// Unit vector pointing into the unbounded interior.
  const Point2& axis() const noexcept { return axis_; }
  double axis_angle() const;
  Point2 focus() const { return apex_ + 0.5 * parameter_ * axis_; }

  /// Boundary point at signed distance r from the axis.
  Point2 point_at(double r) const;

  /// Supremum of normal . x over the closed interior; +inf when the parabola
  /// recedes along a direction with normal . axis >= 0.
  double support(const Point2& normal) const;

  /// offset - support(normal): nonnegative iff the parabola lies in the
  /// half-plane normal . x <= offset, zero when the boundary line is tangent.
  double gap(const Point2& normal, double offset) const {
    return offset - support(normal);
  }

  /// u^T adj(P) u; positive for lines missing the parabola, zero for tangents.
  double dual_form(const HomLine& u) const;
  /// dual_form scaled by ||adj(P)||_F ||u||^2.
  double relative_dual_form(const HomLine& u) const;

 private:
  Parabola(ConicMatrix conic, double parameter, Point2 apex, Point2 axis)
      : conic_(std::move(conic)), parameter_(parameter), apex_(apex), axis_(axis) {}

  ConicMatrix conic_;
  double parameter_;
  Point2 apex_;
  Point2 axis_;
};

bool is_parabola(const ConicMatrix& c);

/// Focus-directrix distance of a parabola matrix. Throws NotAParabola.
double parameter(const ConicMatrix& c);

/// Square of parameter(), evaluated without the absolute value and root.
double squared_parameter(const ConicMatrix& c);

/// Parameters equal within 1e-9 * max(p1, p2) compare equivalent.
std::weak_ordering compare_size(const Parabola& p1, const Parabola& p2);

/// Parabola with the given apex opening toward axis_angle. Throws
/// NonpositiveParameter for p <= 0.
Parabola parabola_from_apex(const Point2& apex, double axis_angle, double p);

}  // namespace cx
