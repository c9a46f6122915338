#include "core/parabola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace cx {

namespace {

// Matrix oriented so that p11 + p22 > 0.
Matrix3 oriented(const ConicMatrix& c) {
  const Matrix3& m = c.matrix();
  return m(1, 1) + m(2, 2) < 0.0 ? Matrix3(-m) : m;
}

// The parameter formula has a companion obtained by swapping the roles of x1
// and x2. The x1 form degenerates to 0/0 when p11 = p12 = 0 (axis along x1),
// so the row with the larger diagonal entry is used.
struct ParameterTerms {
  double numerator;  // signed
  double reference;  // magnitude of the cancelling products
  double denominator;
};

ParameterTerms parameter_terms(const Matrix3& m) {
  if (std::abs(m(1, 1)) >= std::abs(m(2, 2))) {
    const double a = m(0, 1) * m(1, 2);
    const double b = m(0, 2) * m(1, 1);
    return {a - b, std::abs(a) + std::abs(b),
            (m(1, 1) + m(2, 2)) * std::hypot(m(1, 1), m(1, 2))};
  }
  const double a = m(0, 2) * m(1, 2);
  const double b = m(0, 1) * m(2, 2);
  return {a - b, std::abs(a) + std::abs(b),
          (m(1, 1) + m(2, 2)) * std::hypot(m(1, 2), m(2, 2))};
}

bool tangent_to_infinity(const Matrix3& m) {
  const double scale = std::max({std::abs(m(1, 1)), std::abs(m(2, 2)), std::abs(m(1, 2))});
  if (scale == 0.0) return false;
  return std::abs(m(1, 1) * m(2, 2) - m(1, 2) * m(1, 2)) <= 1e-9 * scale * scale;
}

bool nondegenerate(const Matrix3& m) {
  const ParameterTerms terms = parameter_terms(m);
  return terms.reference > 0.0 && std::abs(terms.numerator) > 1e-10 * terms.reference;
}

}  // namespace

bool is_parabola(const ConicMatrix& c) {
  const Matrix3 m = oriented(c);
  return tangent_to_infinity(m) && nondegenerate(m);
}

double parameter(const ConicMatrix& c) {
  if (!is_parabola(c)) fail(ErrorCode::NotAParabola, "parameter: matrix is not a regular parabola");
  const ParameterTerms terms = parameter_terms(oriented(c));
  return std::abs(terms.numerator) / terms.denominator;
}

double squared_parameter(const ConicMatrix& c) {
  if (!is_parabola(c)) fail(ErrorCode::NotAParabola, "squared_parameter: matrix is not a regular parabola");
  const Matrix3 m = oriented(c);
  const double tr = m(1, 1) + m(2, 2);
  if (std::abs(m(1, 1)) >= std::abs(m(2, 2))) {
    const double num = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    return num * num / (tr * tr * (m(1, 1) * m(1, 1) + m(1, 2) * m(1, 2)));
  }
  const double num = m(0, 2) * m(1, 2) - m(0, 1) * m(2, 2);
  return num * num / (tr * tr * (m(1, 2) * m(1, 2) + m(2, 2) * m(2, 2)));
}

Parabola Parabola::from_conic(const ConicMatrix& c) {
  if (!is_parabola(c)) fail(ErrorCode::NotAParabola, "matrix is not a regular parabola");
  const Matrix3 m = oriented(c);
  const double p = cx::parameter(c);
  const double trace = m(1, 1) + m(2, 2);

  // The quadratic block is trace * n n^T with n normal to the axis.
  Point2 n = std::abs(m(1, 1)) >= std::abs(m(2, 2)) ? Point2(m(1, 1), m(1, 2))
                                                    : Point2(m(1, 2), m(2, 2));
  n.normalize();
  const Point2 linear(m(0, 1), m(0, 2));
  Point2 axis(-n.y(), n.x());
  if (linear.dot(axis) > 0.0) axis = -axis;

  const double along_normal = -linear.dot(n) / trace;
  const double along_axis = (m(0, 0) / trace - along_normal * along_normal) / (2.0 * p);
  const Point2 apex = along_normal * n + along_axis * axis;
  return Parabola(ConicMatrix(m), p, apex, axis);
}

double Parabola::axis_angle() const { return std::atan2(axis_.y(), axis_.x()); }

Point2 Parabola::point_at(double r) const {
  const Point2 across(-axis_.y(), axis_.x());
  return apex_ + (r * r / (2.0 * parameter_)) * axis_ + r * across;
}

double Parabola::support(const Point2& normal) const {
  const double along = normal.dot(axis_);
  if (!(along < 0.0)) return std::numeric_limits<double>::infinity();
  const double across = normal.x() * -axis_.y() + normal.y() * axis_.x();
  return normal.dot(apex_) + parameter_ * across * across / (-2.0 * along);
}

double Parabola::dual_form(const HomLine& u) const {
  const Vector3& c = u.coords();
  return c.dot(adjugate(conic_.matrix()) * c);
}

double Parabola::relative_dual_form(const HomLine& u) const {
  const Matrix3 adj = adjugate(conic_.matrix());
  const Vector3& c = u.coords();
  return c.dot(adj * c) / (adj.norm() * c.squaredNorm());
}

std::weak_ordering compare_size(const Parabola& p1, const Parabola& p2) {
  const double a = p1.parameter();
  const double b = p2.parameter();
  if (std::abs(a - b) <= 1e-9 * std::max(a, b)) return std::weak_ordering::equivalent;
  return a < b ? std::weak_ordering::less : std::weak_ordering::greater;
}

Parabola parabola_from_apex(const Point2& apex, double axis_angle, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    fail(ErrorCode::NonpositiveParameter, "parabola_from_apex: parameter must be positive");
  }
  const Point2 axis(std::cos(axis_angle), std::sin(axis_angle));
  const Point2 across(-axis.y(), axis.x());
  // (across . (x - apex))^2 - 2 p axis . (x - apex) in homogeneous form.
  const Vector3 across_form(-across.dot(apex), across.x(), across.y());
  const Vector3 axis_form(-axis.dot(apex), axis.x(), axis.y());
  const Vector3 e0(1.0, 0.0, 0.0);
  const Matrix3 m = across_form * across_form.transpose() -
                    p * (e0 * axis_form.transpose() + axis_form * e0.transpose());
  return Parabola::from_conic(ConicMatrix(m));
}

}  // namespace cx
