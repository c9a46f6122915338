#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/horocycle.hpp"

using namespace cx;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::VerificationFailure;
}

double form_at(const Horocycle& h, const Point2& p) {
  return horocycle_matrix(h).form(Vector3(1.0, p.x(), p.y()));
}

}  // namespace

TEST(HoroPoint, MustLieInsideDisk) {
  EXPECT_NO_THROW(HoroPoint(0.5, 0.5));
  EXPECT_EQ(code_of([] { HoroPoint(1.0, 0.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { HoroPoint(0.8, 0.8); }), ErrorCode::InvalidArgument);
}

TEST(Horocycle, SizeRange) {
  EXPECT_EQ(code_of([] { Horocycle(0.0, 0.0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { Horocycle(0.0, 1.0); }), ErrorCode::InvalidArgument);
  const Horocycle h(kHalfPi, 0.5);
  EXPECT_NEAR(h.center().y(), 0.75, 1e-15);
}

TEST(HorocycleMatrix, Examples) {
  Matrix3 expected;
  expected << 0.5, 0.0, -0.75, 0.0, 0.25, 0.0, -0.75, 0.0, 1.0;
  EXPECT_LE((horocycle_matrix(Horocycle(kHalfPi, 0.5)).matrix() - expected).norm(), 1e-15);

  for (double a : {0.2, 0.5, 0.9}) {
    const Horocycle h(kHalfPi, a);
    EXPECT_NEAR(form_at(h, {0.0, 1.0 - 2.0 * a * a}), 0.0, 1e-14);
    EXPECT_NEAR(form_at(h, {0.0, 1.0}), 0.0, 1e-14);
  }
  const Horocycle right(0.0, 0.4);
  EXPECT_NEAR(form_at(right, {1.0, 0.0}), 0.0, 1e-14);
  EXPECT_LT(form_at(right, right.center()), 0.0);
}

TEST(HorocycleMatrix, EllipseAxesAndHyperosculation) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> size(0.05, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const Horocycle h(ang(rng), size(rng));
    const ConicMatrix m = horocycle_matrix(h);
    EXPECT_TRUE(m.is_regular());
    const Point2 u = h.ideal_point();
    const Point2 v(-u.y(), u.x());
    const double a = h.a();
    const double scale = m.frobenius();
    // Vertices of the ellipse with semi-axes a (tangential) and a^2 (radial).
    for (const Point2& p : {Point2(h.center() + a * v), Point2(h.center() - a * v), Point2(h.center() - a * a * u),
                            Point2(h.center() + a * a * u)}) {
      EXPECT_NEAR(m.form(Vector3(1.0, p.x(), p.y())) / scale, 0.0, 1e-12);
    }
    // Only the ideal point is shared with the unit circle: every other circle
    // point is outside.
    for (int k = 1; k < 64; ++k) {
      const double phi = h.theta() + 2.0 * std::numbers::pi * k / 64.0;
      EXPECT_GT(m.form(Vector3(1.0, std::cos(phi), std::sin(phi))), 0.0);
    }
  }
}

TEST(Contains, Examples) {
  EXPECT_FALSE(contains(Horocycle(kHalfPi, kCriticalSize), HoroPoint(0.0, 0.0)));
  EXPECT_TRUE(contains(Horocycle(kHalfPi, 0.9), HoroPoint(0.0, 0.0)));
  EXPECT_FALSE(contains(Horocycle(kHalfPi, 0.3), HoroPoint(0.0, -0.5)));
}

TEST(MinSizeForPoint, Examples) {
  for (double theta : {0.0, 1.0, -2.5}) EXPECT_NEAR(min_size_for_point(theta, HoroPoint(0.0, 0.0)), kCriticalSize, 1e-16);
  for (double r : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(min_size_for_point(kHalfPi, HoroPoint(0.0, r)), std::sqrt((1.0 - r) / 2.0), 1e-15);
    EXPECT_NEAR(min_size_for_point(kHalfPi, HoroPoint(0.0, -r)), std::sqrt((1.0 + r) / 2.0), 1e-15);
  }
}

TEST(MinSizeForPoint, BisectionConsistency) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> rad(0.0, 0.95);
  for (int i = 0; i < 10000; ++i) {
    const double phi = ang(rng);
    const double r = rad(rng);
    const HoroPoint p(r * std::cos(phi), r * std::sin(phi));
    const double theta = ang(rng);
    // Smallest containing size by bisection on contains().
    double lo = 1e-9, hi = 1.0 - 1e-12;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      (contains(Horocycle(theta, mid), p) ? hi : lo) = mid;
    }
    EXPECT_NEAR(min_size_for_point(theta, p), hi, 1e-9);
  }
}

TEST(IntersectionPoints, Examples) {
  for (double a : {0.3, 0.6, 0.9}) {
    const IntersectionPoints lu = intersection_points(a, 0.0);
    EXPECT_NEAR(lu.lower, 1.0 - 2.0 * a * a, 1e-15);
    EXPECT_NEAR(lu.upper, 1.0, 1e-15);
  }
  EXPECT_EQ(code_of([] { intersection_points(0.3, 1.0); }), ErrorCode::NoCommonInterior);
}

TEST(IntersectionPoints, OnBothHorocycles) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> size(0.05, 0.95);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
  int tested = 0;
  while (tested < 1000) {
    const double a = size(rng), w = ang(rng);
    if (!(common_interior_radicand(a, w) > 0.0)) continue;
    ++tested;
    const IntersectionPoints lu = intersection_points(a, w);
    EXPECT_LT(lu.lower, lu.upper);
    for (double y : {lu.lower, lu.upper}) {
      EXPECT_NEAR(form_at(Horocycle(kHalfPi + w, a), {0.0, y}), 0.0, 1e-10);
      EXPECT_NEAR(form_at(Horocycle(kHalfPi - w, a), {0.0, y}), 0.0, 1e-10);
    }
  }
  const IntersectionPoints lu = intersection_points(0.5, 0.2);
  EXPECT_NEAR(form_at(Horocycle(kHalfPi + 0.2, 0.5), {0.0, lu.lower}), 0.0, 1e-10);
}

TEST(LemmaShrink, Examples) {
  const Horocycle h = lemma_shrink(0.5, 0.2);
  EXPECT_LT(h.a(), 0.5);
  EXPECT_NEAR(h.theta(), kHalfPi, 0.0);
  const ContainmentReport r = verify_containment_implication(0.5, std::tan(0.1), 100000, 1);
  EXPECT_GT(r.lens_points, 0u);
  EXPECT_EQ(r.containment_violations, 0u);

  EXPECT_NEAR(lemma_shrink_unchecked(kCriticalSize, 0.3).a(), kCriticalSize, 1e-12);
  EXPECT_GT(lemma_shrink_unchecked(0.8, 0.2).a(), 0.8);
}

TEST(LemmaShrink, Preconditions) {
  EXPECT_EQ(code_of([] { lemma_shrink(kCriticalSize, 0.1); }), ErrorCode::PreconditionViolation);
  EXPECT_EQ(code_of([] { lemma_shrink(0.8, 0.1); }), ErrorCode::PreconditionViolation);
  EXPECT_EQ(code_of([] { lemma_shrink(0.3, 1.0); }), ErrorCode::PreconditionViolation);
}

TEST(LemmaShrink, ShrinksAndPassesThroughL) {
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> size(0.05, 0.70);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
  int tested = 0;
  while (tested < 1000) {
    const double a = size(rng), w = ang(rng);
    if (!(common_interior_radicand(a, w) > 0.0)) continue;
    ++tested;
    const Horocycle h = lemma_shrink(a, w);
    EXPECT_LT(h.a(), a);
    const IntersectionPoints lu = intersection_points(a, w);
    // Past a right angle the mirrored horocycle goes through U instead.
    EXPECT_NEAR(form_at(h, {0.0, w > kHalfPi ? lu.upper : lu.lower}), 0.0, 1e-12);
  }
}

TEST(LemmaIdentities, Examples) {
  EXPECT_NEAR(lemma_rhs(0.5, 1.0), 0.5, 1e-15);
  const LemmaIdentityReport r = verify_lemma_identities(0.6, 0.4);
  EXPECT_TRUE(r.passed);
  EXPECT_LT(r.difference, 0.0);
  EXPECT_LE(r.difference_rel_error, 1e-10);
  EXPECT_NEAR(r.rhs_at_one, 4.0 * 0.36 * (1.0 - 0.72), 1e-14);
  EXPECT_NEAR(lemma_q(0.5, 0.5), -0.359375, 1e-15);
  EXPECT_EQ(code_of([] { verify_lemma_identities(0.5, 0.5); }), ErrorCode::PreconditionViolation);
  EXPECT_EQ(code_of([] { verify_lemma_identities(0.5, 1.0); }), ErrorCode::PreconditionViolation);
  EXPECT_EQ(code_of([] { verify_lemma_identities(0.75, 0.1); }), ErrorCode::PreconditionViolation);
}

TEST(LemmaIdentities, RandomCasesPass) {
  std::mt19937_64 rng(65);
  std::uniform_real_distribution<double> size(0.05, 0.70);
  std::uniform_real_distribution<double> tt(0.001, 0.999);
  int tested = 0;
  while (tested < 1000) {
    const double a = size(rng), t = tt(rng);
    if (!(lemma_q(a, t) > 0.0)) continue;
    ++tested;
    const LemmaIdentityReport r = verify_lemma_identities(a, t);
    EXPECT_TRUE(r.passed) << "a=" << a << " t=" << t;
  }
}

TEST(LemmaPolynomials, AgreeWithMatrixForms) {
  // The t-forms are positive multiples of the rotated matrix forms.
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> u(-0.99, 0.99);
  std::uniform_real_distribution<double> size(0.1, 0.9);
  std::uniform_real_distribution<double> tt(0.01, 0.99);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng), y = u(rng), a = size(rng), t = tt(rng);
    if (x * x + y * y >= 1.0) continue;
    const double w = 2.0 * std::atan(t);
    const double f0 = form_at(Horocycle(kHalfPi + w, a), {x, y});
    const double f1 = form_at(Horocycle(kHalfPi - w, a), {x, y});
    const double scale = std::pow(1.0 + t * t, 2);
    EXPECT_NEAR(lens_form0(x, y, a, t), scale * f0, 1e-9 * scale);
    EXPECT_NEAR(lens_form1(x, y, a, t), scale * f1, 1e-9 * scale);
  }
}

TEST(ContainmentImplication, NoViolationsBelowCriticalSize) {
  const ContainmentReport r = verify_containment_implication(0.5, 0.2, 100000, 3);
  EXPECT_TRUE(r.lemma_applies);
  EXPECT_GT(r.lens_points, 1000u);
  EXPECT_EQ(r.k_violations, 0u);
  EXPECT_EQ(r.containment_violations, 0u);
  EXPECT_EQ(r.form_mismatches, 0u);
  EXPECT_GT(r.min_k, 0.0);
}

TEST(ContainmentImplication, DeterministicAcrossThreads) {
  const ContainmentReport a = verify_containment_implication(0.6, 0.3, 50000, 9, 1);
  const ContainmentReport b = verify_containment_implication(0.6, 0.3, 50000, 9, 4);
  EXPECT_EQ(a.lens_points, b.lens_points);
  EXPECT_EQ(a.min_k, b.min_k);
}

TEST(ContainmentImplication, EmptyLensAllowed) {
  // a = 0.1 with t = 0.9 leaves no common interior.
  const ContainmentReport r = verify_containment_implication(0.1, 0.9, 1000, 0);
  EXPECT_EQ(r.lens_points, 0u);
  EXPECT_EQ(code_of([] { verify_containment_implication(0.5, 0.0, 10, 0); }), ErrorCode::PreconditionViolation);
}

TEST(SizeComparison, SmallerFitsInsideLarger) {
  // Two horocycles at the same ideal point: the smaller interior lies inside
  // the larger one.
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Horocycle small(kHalfPi, 0.4), large(kHalfPi, 0.6);
  int inside = 0;
  for (int i = 0; i < 100000; ++i) {
    const double x = u(rng), y = u(rng);
    if (x * x + y * y >= 1.0) continue;
    const HoroPoint p(x, y);
    if (!contains(small, p)) continue;
    ++inside;
    EXPECT_TRUE(contains(large, p));
  }
  EXPECT_GT(inside, 100);
}
