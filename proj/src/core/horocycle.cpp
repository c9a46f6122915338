#include "core/horocycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace cx {

HoroPoint::HoroPoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(x * x + y * y < 1.0)) {
    fail(ErrorCode::InvalidArgument, "hyperbolic point must lie strictly inside the unit disk");
  }
}

Horocycle::Horocycle(double theta, double a) : theta_(theta), a_(a) {
  if (!std::isfinite(theta) || !(a > 0.0 && a < 1.0)) {
    fail(ErrorCode::InvalidArgument, "horocycle size must lie in (0, 1)");
  }
}

Point2 Horocycle::ideal_point() const { return {std::cos(theta_), std::sin(theta_)}; }

Point2 Horocycle::center() const { return (1.0 - a_ * a_) * ideal_point(); }

namespace {

// Coordinates in the frame where the ideal point sits at (0, 1).
Point2 to_upright(double theta, const Point2& p) {
  const double psi = theta - 0.5 * std::numbers::pi;
  const double c = std::cos(psi);
  const double s = std::sin(psi);
  return {c * p.x() + s * p.y(), -s * p.x() + c * p.y()};
}

}  // namespace

ConicMatrix horocycle_matrix(const Horocycle& h) {
  const double s = h.a() * h.a();
  Matrix3 e;
  e << 1.0 - 2.0 * s, 0.0, s - 1.0,
       0.0, s, 0.0,
       s - 1.0, 0.0, 1.0;
  const double psi = h.theta() - 0.5 * std::numbers::pi;
  const double c = std::cos(psi);
  const double sn = std::sin(psi);
  Matrix3 t;
  t << 1.0, 0.0, 0.0,
       0.0, c, sn,
       0.0, -sn, c;
  return ConicMatrix(t.transpose() * e * t);
}

bool contains(const Horocycle& h, const HoroPoint& p) {
  // Points within rounding of the boundary are not interior.
  const ConicMatrix m = horocycle_matrix(h);
  return m.form(p.homogeneous().coords()) < -1e-12 * m.frobenius();
}

double min_size_for_point(double theta, const HoroPoint& p) {
  const Point2 q = to_upright(theta, p.cartesian());
  const double gap = 1.0 - q.y();
  return std::sqrt(gap * gap / (2.0 - 2.0 * q.y() - q.x() * q.x()));
}

double common_interior_radicand(double a, double omega) {
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  return 2.0 * a * a - a * a * c * c - s * s;
}

IntersectionPoints intersection_points(double a, double omega) {
  const double radicand = common_interior_radicand(a, omega);
  if (!(radicand > 0.0)) {
    fail(ErrorCode::NoCommonInterior, "horocycles have no common interior points");
  }
  const double c = std::cos(omega);
  const double s = std::sin(omega);
  const double root = a * std::sqrt(radicand);
  const double den = a * a * s * s + c * c;
  const double base = c - a * a * c;
  return {(base - root) / den, (base + root) / den};
}

Horocycle lemma_shrink_unchecked(double a, double omega) {
  if (!(a > 0.0 && a < 1.0)) fail(ErrorCode::PreconditionViolation, "size must lie in (0, 1)");
  if (!(common_interior_radicand(a, omega) > 0.0)) {
    fail(ErrorCode::PreconditionViolation, "horocycles have no common interior points");
  }
  // For omega > pi/2 a half-turn maps the pair onto the one at pi - omega,
  // so the shrunk horocycle touches N at the bottom and passes through U.
  if (omega > 0.5 * std::numbers::pi) {
    const double upper = intersection_points(a, omega).upper;
    return Horocycle(-0.5 * std::numbers::pi, std::sqrt(0.5 * (1.0 + upper)));
  }
  const double lower = intersection_points(a, omega).lower;
  return Horocycle(0.5 * std::numbers::pi, std::sqrt(0.5 * (1.0 - lower)));
}

Horocycle lemma_shrink(double a, double omega) {
  if (!(a < kCriticalSize)) fail(ErrorCode::PreconditionViolation, "lemma requires a < 2^{-1/2}");
  return lemma_shrink_unchecked(a, omega);
}

double lemma_q(double a, double t) {
  const double t2 = t * t;
  return (t2 * t2 + 6.0 * t2 + 1.0) * a * a - 4.0 * t2;
}

double lemma_lhs(double a, double t) {
  return a * (t * t + 1.0) * std::sqrt(lemma_q(a, t));
}

double lemma_rhs(double a, double t) {
  const double a2 = a * a;
  const double t2 = t * t;
  const double k = 2.0 * a2 - 1.0;
  return 2.0 - 3.0 * a2 - a2 * t2 * t2 - 2.0 * k * k * t2;
}

double lemma_factored_difference(double a, double t) {
  const double a2 = a * a;
  const double t2 = t * t;
  return 4.0 * (1.0 - a2) * (2.0 * a2 * t2 + 1.0) *
         (4.0 * a2 * t2 + (t2 - 1.0) * (t2 - 1.0)) * (2.0 * a2 - 1.0);
}

double lens_form0(double x, double y, double a, double t) {
  const double a2 = a * a;
  const double t2 = t * t;
  const double w = t2 + 2.0 * t * x + 1.0;
  return (4.0 * a2 * t2 + t2 * t2 - 2.0 * t2 + 1.0) * y * y -
         2.0 * (t2 - 1.0) * (a2 - 1.0) * w * y +
         ((t2 - 1.0) * (t2 - 1.0) * x * x - (4.0 * t2 * t + 4.0 * t) * x -
          2.0 * (t2 + 1.0) * (t2 + 1.0)) * a2 +
         w * w;
}

double lens_form1(double x, double y, double a, double t) {
  const double a2 = a * a;
  const double t2 = t * t;
  const double w = t2 - 2.0 * t * x + 1.0;
  return (4.0 * a2 * t2 + t2 * t2 - 2.0 * t2 + 1.0) * y * y -
         2.0 * (t2 - 1.0) * (a2 - 1.0) * w * y +
         ((t2 - 1.0) * (t2 - 1.0) * x * x + (4.0 * t2 * t + 4.0 * t) * x -
          2.0 * (t2 + 1.0) * (t2 + 1.0)) * a2 +
         w * w;
}

double lemma_k(double x, double y, double a, double t) {
  const double a2 = a * a;
  const double t2 = t * t;
  const double r2 = x * x + y * y - 1.0;
  const double ym = (y - 1.0) * (y - 1.0);
  return r2 * ((x * x + 2.0 * y - 2.0) * a2 - x * x - y * y + 1.0) * t2 * t2 -
         4.0 * r2 * ym * (a2 - 0.5) * t2 -
         ym * (y * y + (2.0 * a2 - 2.0) * y + 1.0 + (x * x - 2.0) * a2);
}

LemmaIdentityReport verify_lemma_identities(double a, double t) {
  if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::PreconditionViolation, "requires 0 < t < 1");
  if (!(a > 0.0 && a < kCriticalSize)) fail(ErrorCode::PreconditionViolation, "requires 0 < a < 2^{-1/2}");
  const double q = lemma_q(a, t);
  if (!(q > 0.0)) fail(ErrorCode::PreconditionViolation, "requires q > 0 (common interior points)");

  LemmaIdentityReport r;
  r.a = a;
  r.t = t;
  r.q = q;
  r.lhs = lemma_lhs(a, t);
  r.rhs = lemma_rhs(a, t);
  r.rhs_positive = r.rhs > 0.0;
  r.inequality_holds = r.lhs < r.rhs;

  r.rhs_at_one = lemma_rhs(a, 1.0);
  r.rhs_at_one_expected = 4.0 * a * a * (1.0 - 2.0 * a * a);
  r.rhs_at_one_rel_error = std::abs(r.rhs_at_one - r.rhs_at_one_expected) / std::abs(r.rhs_at_one_expected);

  r.difference = r.lhs * r.lhs - r.rhs * r.rhs;
  r.difference_factored = lemma_factored_difference(a, t);
  r.difference_rel_error = std::abs(r.difference - r.difference_factored) / std::abs(r.difference_factored);

  r.rhs_decreasing = true;
  double previous = lemma_rhs(a, 0.0);
  for (int i = 1; i <= 64; ++i) {
    const double value = lemma_rhs(a, static_cast<double>(i) / 64.0);
    if (!(value < previous)) r.rhs_decreasing = false;
    previous = value;
  }

  const double lower = intersection_points(a, 2.0 * std::atan(t)).lower;
  r.size_decreases = 2.0 * a * a + lower - 1.0 > 0.0;

  r.passed = r.rhs_positive && r.inequality_holds && r.rhs_at_one_rel_error <= 1e-12 &&
             r.difference_rel_error <= 1e-10 && r.rhs_decreasing && r.size_decreases &&
             r.difference < 0.0;
  return r;
}

namespace {

struct Box {
  double x0, x1, y0, y1;
};

Box ellipse_box(const Horocycle& h) {
  const Point2 u = h.ideal_point();
  const Point2 tangent(-u.y(), u.x());
  const double a = h.a();
  const double b = a * a;
  const Point2 c = h.center();
  const double hx = std::sqrt(a * a * tangent.x() * tangent.x() + b * b * u.x() * u.x());
  const double hy = std::sqrt(a * a * tangent.y() * tangent.y() + b * b * u.y() * u.y());
  return {c.x() - hx, c.x() + hx, c.y() - hy, c.y() + hy};
}

}  // namespace

ContainmentReport verify_containment_implication(double a, double t, std::size_t samples,
                                                 std::uint64_t seed, unsigned threads) {
  if (!(a > 0.0 && a < 1.0)) fail(ErrorCode::PreconditionViolation, "requires 0 < a < 1");
  if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::PreconditionViolation, "requires 0 < t < 1");

  ContainmentReport report;
  report.a = a;
  report.t = t;
  report.samples = samples;
  report.lemma_applies = a < kCriticalSize;
  report.min_k = std::numeric_limits<double>::infinity();

  const double omega = 2.0 * std::atan(t);
  if (!(common_interior_radicand(a, omega) > 0.0)) return report;

  const double half_pi = 0.5 * std::numbers::pi;
  const Horocycle h0(half_pi + omega, a);
  const Horocycle h1(half_pi - omega, a);
  const Horocycle shrunk = lemma_shrink_unchecked(a, omega);
  report.shrunk_size = shrunk.a();
  const Matrix3 m0 = horocycle_matrix(h0).matrix();
  const Matrix3 m1 = horocycle_matrix(h1).matrix();
  const Matrix3 mh = horocycle_matrix(shrunk).matrix();

  const Box b0 = ellipse_box(h0);
  const Box b1 = ellipse_box(h1);
  const Box box{std::max({b0.x0, b1.x0, -1.0}), std::min({b0.x1, b1.x1, 1.0}),
                std::max({b0.y0, b1.y0, -1.0}), std::min({b0.y1, b1.y1, 1.0})};

  constexpr std::size_t chunk = 8192;
  const std::size_t chunks = (samples + chunk - 1) / chunk;
  std::vector<ContainmentReport> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    ContainmentReport& part = partial[c];
    part.min_k = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(mix_seed(seed, c));
    std::uniform_real_distribution<double> ux(box.x0, box.x1);
    std::uniform_real_distribution<double> uy(box.y0, box.y1);
    const std::size_t count = std::min(chunk, samples - c * chunk);
    for (std::size_t i = 0; i < count; ++i) {
      const double x = ux(rng);
      const double y = uy(rng);
      if (!(x * x + y * y < 1.0)) continue;
      const Vector3 p(1.0, x, y);
      const bool poly_inside = lens_form0(x, y, a, t) < 0.0 && lens_form1(x, y, a, t) < 0.0;
      const bool matrix_inside = p.dot(m0 * p) < 0.0 && p.dot(m1 * p) < 0.0;
      if (poly_inside != matrix_inside) ++part.form_mismatches;
      if (!poly_inside) continue;
      ++part.lens_points;
      const double k = lemma_k(x, y, a, t);
      part.min_k = std::min(part.min_k, k);
      if (!(k > 0.0)) ++part.k_violations;
      if (!(p.dot(mh * p) < 0.0)) ++part.containment_violations;
    }
  });
  for (const ContainmentReport& part : partial) {
    report.lens_points += part.lens_points;
    report.k_violations += part.k_violations;
    report.containment_violations += part.containment_violations;
    report.form_mismatches += part.form_mismatches;
    report.min_k = std::min(report.min_k, part.min_k);
  }
  return report;
}

}  // namespace cx
