#pragma once

#include <Eigen/Dense>

namespace cx {

using Point2 = Eigen::Vector2d;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

/// Scale-invariant regularity threshold on |det m| / ||m||_F^3.
inline constexpr double kSingularThreshold = 1e-10;

/// Point of the real projective plane, [x0, x1, x2] with x0 = 0 at infinity.
class HomPoint {
 public:
  explicit HomPoint(const Vector3& coords);
  HomPoint(double x0, double x1, double x2) : HomPoint(Vector3(x0, x1, x2)) {}

  static HomPoint from_cartesian(const Point2& p) { return HomPoint(1.0, p.x(), p.y()); }

  const Vector3& coords() const noexcept { return coords_; }
  bool is_finite() const noexcept;
  Point2 cartesian() const;

 private:
  Vector3 coords_;
};

/// Line u0 x0 + u1 x1 + u2 x2 = 0.
class HomLine {
 public:
  explicit HomLine(const Vector3& coords);
  HomLine(double u0, double u1, double u2) : HomLine(Vector3(u0, u1, u2)) {}

  /// The Euclidean line normal . x = offset.
  static HomLine from_equation(const Point2& normal, double offset) {
    return HomLine(-offset, normal.x(), normal.y());
  }
  static HomLine at_infinity() { return HomLine(1.0, 0.0, 0.0); }

  const Vector3& coords() const noexcept { return coords_; }

 private:
  Vector3 coords_;
};

/// Symmetric 3x3 matrix describing a primal or dual conic up to scale.
/// Stored unnormalized; use the scale-invariant helpers for comparisons.
class ConicMatrix {
 public:
  explicit ConicMatrix(const Matrix3& m);

  const Matrix3& matrix() const noexcept { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  double form(const Vector3& x) const { return x.dot(m_ * x); }
  double frobenius() const { return m_.norm(); }
  /// |det| / ||m||_F^3, invariant under rescaling.
  double regularity() const;
  bool is_regular() const { return regularity() >= kSingularThreshold; }

  ConicMatrix scaled(double s) const { return ConicMatrix(s * m_); }

 private:
  Matrix3 m_;
};

Matrix3 adjugate(const Matrix3& m);

HomLine polar(const ConicMatrix& c, const HomPoint& p);
HomPoint pole(const ConicMatrix& c, const HomLine& u);
ConicMatrix dualize(const ConicMatrix& c);

/// Returns +-c such that the quadratic form is negative at the witness.
ConicMatrix normalize_interior(const ConicMatrix& c, const HomPoint& witness);
bool is_interior(const ConicMatrix& c, const HomPoint& p);
ConicMatrix pencil_blend(const ConicMatrix& c0, const ConicMatrix& c1, double t);

// Scale-invariant comparisons: both arguments are divided by their norm and
// the sign that minimizes the distance is chosen.
double projective_distance(const Vector3& a, const Vector3& b);
double projective_distance(const Matrix3& a, const Matrix3& b);

}  // namespace cx
