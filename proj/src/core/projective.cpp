#include "core/projective.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace cx {

namespace {

void require_regular(const ConicMatrix& c, const char* op) {
  if (!c.is_regular()) {
    fail(ErrorCode::SingularConic,
         std::string(op) + ": conic is singular (|det|/||m||^3 = " +
             std::to_string(c.regularity()) + ")");
  }
}

}  // namespace

HomPoint::HomPoint(const Vector3& coords) : coords_(coords) {
  if (!coords_.allFinite() || coords_.isZero(0.0)) {
    fail(ErrorCode::InvalidArgument, "homogeneous point must be finite and nonzero");
  }
}

bool HomPoint::is_finite() const noexcept {
  return std::abs(coords_[0]) > 1e-300;
}

Point2 HomPoint::cartesian() const {
  if (!is_finite()) fail(ErrorCode::InvalidArgument, "point at infinity has no Cartesian coordinates");
  return {coords_[1] / coords_[0], coords_[2] / coords_[0]};
}

HomLine::HomLine(const Vector3& coords) : coords_(coords) {
  if (!coords_.allFinite() || coords_.isZero(0.0)) {
    fail(ErrorCode::InvalidArgument, "homogeneous line must be finite and nonzero");
  }
}

ConicMatrix::ConicMatrix(const Matrix3& m) {
  if (!m.allFinite()) fail(ErrorCode::InvalidArgument, "conic matrix has non-finite entries");
  const double norm = m.norm();
  if (norm == 0.0) fail(ErrorCode::InvalidArgument, "zero matrix does not represent a conic");
  if ((m - m.transpose()).norm() > 1e-12 * norm) {
    fail(ErrorCode::InvalidArgument, "conic matrix is not symmetric");
  }
  m_ = 0.5 * (m + m.transpose());
}

double ConicMatrix::regularity() const {
  const double n = m_.norm();
  return std::abs(m_.determinant()) / (n * n * n);
}

Matrix3 adjugate(const Matrix3& m) {
  Matrix3 adj;
  adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return adj;
}

HomLine polar(const ConicMatrix& c, const HomPoint& p) {
  require_regular(c, "polar");
  return HomLine(c.matrix() * p.coords());
}

HomPoint pole(const ConicMatrix& c, const HomLine& u) {
  require_regular(c, "pole");
  return HomPoint(adjugate(c.matrix()) * u.coords());
}

ConicMatrix dualize(const ConicMatrix& c) {
  require_regular(c, "dualize");
  return ConicMatrix(adjugate(c.matrix()));
}

ConicMatrix normalize_interior(const ConicMatrix& c, const HomPoint& witness) {
  const Vector3& w = witness.coords();
  const double value = c.form(w);
  if (std::abs(value) <= 1e-10 * c.frobenius() * w.squaredNorm()) {
    fail(ErrorCode::WitnessOnConic, "normalize_interior: witness lies on the conic");
  }
  return value < 0.0 ? c : c.scaled(-1.0);
}

bool is_interior(const ConicMatrix& c, const HomPoint& p) {
  return c.form(p.coords()) < 0.0;
}

ConicMatrix pencil_blend(const ConicMatrix& c0, const ConicMatrix& c1, double t) {
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "pencil_blend: t outside [0,1]");
  const Matrix3 m = (1.0 - t) * c0.matrix() + t * c1.matrix();
  const double ref = std::max(c0.frobenius(), c1.frobenius());
  if (m.norm() <= 1e-14 * ref) fail(ErrorCode::ZeroBlend, "pencil_blend: combination vanishes");
  return ConicMatrix(m);
}

double projective_distance(const Vector3& a, const Vector3& b) {
  const Vector3 an = a.normalized();
  const Vector3 bn = b.normalized();
  return std::min((an - bn).norm(), (an + bn).norm());
}

double projective_distance(const Matrix3& a, const Matrix3& b) {
  const Matrix3 an = a / a.norm();
  const Matrix3 bn = b / b.norm();
  return std::min((an - bn).norm(), (an + bn).norm());
}

}  // namespace cx
