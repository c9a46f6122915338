#include "core/exparabola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "core/error.hpp"

namespace cx {

Vertex opposite(Side side) noexcept {
  switch (side) {
    case Side::AB: return Vertex::C;
    case Side::BC: return Vertex::A;
    case Side::CA: return Vertex::B;
  }
  return Vertex::C;
}

char vertex_name(Vertex v) noexcept {
  switch (v) {
    case Vertex::A: return 'A';
    case Vertex::B: return 'B';
    case Vertex::C: return 'C';
  }
  return '?';
}

const char* side_name(Side s) noexcept {
  switch (s) {
    case Side::AB: return "AB";
    case Side::BC: return "BC";
    case Side::CA: return "CA";
  }
  return "?";
}

namespace {

double cross(const Point2& u, const Point2& v) { return u.x() * v.y() - u.y() * v.x(); }

}  // namespace

Triangle::Triangle(const Point2& a, const Point2& b, const Point2& c) : a_(a), b_(b), c_(c) {
  if (!a.allFinite() || !b.allFinite() || !c.allFinite()) {
    fail(ErrorCode::DegenerateTriangle, "triangle has non-finite coordinates");
  }
  const double d = diameter();
  if (d == 0.0 || area() < 1e-6 * d * d) {
    fail(ErrorCode::DegenerateTriangle, "triangle is degenerate (area/diameter^2 < 1e-6)");
  }
}

const Point2& Triangle::vertex(Vertex v) const noexcept {
  switch (v) {
    case Vertex::A: return a_;
    case Vertex::B: return b_;
    case Vertex::C: return c_;
  }
  return a_;
}

double Triangle::diameter() const noexcept {
  return std::max({(b_ - a_).norm(), (c_ - b_).norm(), (a_ - c_).norm()});
}

double Triangle::area() const noexcept { return 0.5 * std::abs(cross(b_ - a_, c_ - a_)); }

CanonicalFrame::CanonicalFrame(double a1, double b1, double c2)
    : CanonicalFrame(a1, b1, c2, Point2::Zero(), Point2::UnitX(), Point2::UnitY()) {}

CanonicalFrame::CanonicalFrame(double a1, double b1, double c2, const Point2& origin,
                               const Point2& e1, const Point2& e2)
    : a1_(a1), b1_(b1), c2_(c2), origin_(origin), e1_(e1), e2_(e2) {
  if (!(a1 < b1) || !(c2 > 0.0)) {
    fail(ErrorCode::DegenerateTriangle, "canonical frame requires a1 < b1 and c2 > 0");
  }
}

Point2 CanonicalFrame::to_frame(const Point2& world) const {
  const Point2 d = world - origin_;
  return {d.dot(e1_), d.dot(e2_)};
}

Point2 CanonicalFrame::to_world(const Point2& local) const {
  return origin_ + local.x() * e1_ + local.y() * e2_;
}

Matrix3 CanonicalFrame::world_to_frame() const {
  Matrix3 t;
  t << 1.0, 0.0, 0.0,
       -e1_.dot(origin_), e1_.x(), e1_.y(),
       -e2_.dot(origin_), e2_.x(), e2_.y();
  return t;
}

ConicMatrix CanonicalFrame::conic_to_world(const ConicMatrix& local) const {
  const Matrix3 t = world_to_frame();
  return ConicMatrix(t.transpose() * local.matrix() * t);
}

ConicMatrix CanonicalFrame::conic_to_frame(const ConicMatrix& world) const {
  // The inverse motion: x_world = S x_frame.
  Matrix3 s;
  s << 1.0, 0.0, 0.0,
       origin_.x(), e1_.x(), e2_.x(),
       origin_.y(), e1_.y(), e2_.y();
  return ConicMatrix(s.transpose() * world.matrix() * s);
}

CanonicalFrame canonical_frame(const Triangle& t, Side side) {
  const Point2* p = nullptr;
  const Point2* q = nullptr;
  const Point2* r = nullptr;
  switch (side) {
    case Side::AB: p = &t.A(); q = &t.B(); r = &t.C(); break;
    case Side::BC: p = &t.B(); q = &t.C(); r = &t.A(); break;
    case Side::CA: p = &t.C(); q = &t.A(); r = &t.B(); break;
  }
  const Point2 e1 = (*q - *p).normalized();
  const Point2 foot = *p + (*r - *p).dot(e1) * e1;
  const Point2 height = *r - foot;
  const double c2 = height.norm();
  if (!(c2 > 0.0)) fail(ErrorCode::DegenerateTriangle, "vertex lies on the opposite side line");
  const Point2 e2 = height / c2;
  return CanonicalFrame((*p - foot).dot(e1), (*q - foot).dot(e1), c2, foot, e1, e2);
}

ConicMatrix pencil_dual(const CanonicalFrame& f, double lambda) {
  const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
  const double s = lambda - a1 - b1;
  Matrix3 d;
  d << 0.0, s, c2,
       s, -2.0 * a1 * b1, c2 * lambda,
       c2, c2 * lambda, 0.0;
  return ConicMatrix(d);
}

Parabola pencil_parabola(const CanonicalFrame& f, double lambda) {
  const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
  const double tol = 1e-9 * (b1 - a1);
  if (std::abs(lambda - a1) <= tol || std::abs(lambda - b1) <= tol) {
    fail(ErrorCode::SingularPencilMember, "pencil member at lambda = a1 or b1 is a double line");
  }
  const double s = lambda - a1 - b1;
  const double k = lambda * lambda - (a1 + b1) * lambda + 2.0 * a1 * b1;
  Matrix3 p;
  p << -c2 * lambda * lambda, c2 * lambda, k,
       c2 * lambda, -c2, s,
       k, s, -s * s / c2;
  return Parabola::from_conic(ConicMatrix(p));
}

double pencil_denominator(const CanonicalFrame& f, double lambda) {
  const double s = lambda - f.a1() - f.b1();
  return s * s + f.c2() * f.c2();
}

double pencil_squared_parameter(const CanonicalFrame& f, double lambda) {
  const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
  const double den = pencil_denominator(f, lambda);
  const double num = 2.0 * c2 * c2 * (b1 - lambda) * (a1 - lambda);
  return num * num / (den * den * den);
}

MonicCubic extremum_cubic(const CanonicalFrame& f) {
  const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
  return {1.0, -(a1 + b1), -a1 * a1 + a1 * b1 - b1 * b1 - 2.0 * c2 * c2,
          a1 * (a1 * a1 + c2 * c2) + b1 * (b1 * b1 + c2 * c2)};
}

namespace {

struct SideSolution {
  CanonicalFrame frame;
  std::array<double, 3> roots;
  double lambda;
};

SideSolution solve_side(const Triangle& t, Side side) {
  const CanonicalFrame frame = canonical_frame(t, side);
  const auto roots = real_roots(extremum_cubic(frame));
  if (!roots) {
    fail(ErrorCode::NumericalRootFailure,
         std::string("extremum cubic for side ") + side_name(side) + " lacks three real roots");
  }
  std::optional<double> inside;
  int count = 0;
  for (double r : *roots) {
    if (r > frame.a1() && r < frame.b1()) {
      inside = r;
      ++count;
    }
  }
  if (count != 1) {
    fail(ErrorCode::NumericalRootFailure,
         std::string("expected exactly one root between the endpoints of side ") + side_name(side));
  }
  return {frame, *roots, *inside};
}

// Abscissa where a world-coordinate parabola touches the frame's x-axis.
double touch_abscissa(const CanonicalFrame& frame, const Parabola& world) {
  const ConicMatrix local = frame.conic_to_frame(world.conic());
  const Vector3 touch = adjugate(local.matrix()) * Vector3(0.0, 0.0, 1.0);
  return touch[1] / touch[0];
}

}  // namespace

std::array<ExparabolaResult, 3> exparabolas(const Triangle& t) {
  constexpr std::array<Side, 3> sides = {Side::AB, Side::BC, Side::CA};
  std::array<std::optional<SideSolution>, 3> solved;
  std::array<std::optional<ExparabolaResult>, 3> results;

  for (std::size_t i = 0; i < sides.size(); ++i) {
    solved[i] = solve_side(t, sides[i]);
    const SideSolution& s = *solved[i];
    const Parabola local = pencil_parabola(s.frame, s.lambda);
    const Parabola world = Parabola::from_conic(s.frame.conic_to_world(local.conic()));
    results[i] = ExparabolaResult{sides[i], opposite(sides[i]), s.lambda, world,
                                  s.frame.to_world(Point2(s.lambda, 0.0)), s.frame};
  }

  // Each parabola must also appear among the exterior roots of the other two
  // frames.
  for (std::size_t i = 0; i < 3; ++i) {
    const SideSolution& s = *solved[i];
    const double width = s.frame.b1() - s.frame.a1();
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double mu = touch_abscissa(s.frame, results[j]->parabola);
      double best = std::numeric_limits<double>::infinity();
      for (double r : s.roots) {
        if (r == s.lambda) continue;
        best = std::min(best, std::abs(r - mu) / std::max(width, std::abs(r)));
      }
      if (!(best <= 1e-6)) {
        fail(ErrorCode::NumericalRootFailure,
             std::string("exparabola of side ") + side_name(sides[j]) +
                 " does not match an exterior root in the frame of side " + side_name(sides[i]));
      }
    }
  }
  return {*results[0], *results[1], *results[2]};
}

}  // namespace cx
