#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/exparabola.hpp"
#include "core/max_parabola.hpp"
#include "oracles.hpp"

using namespace cx;

namespace {

Triangle reference_triangle() { return Triangle({-1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}); }

Triangle random_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (;;) {
    const Point2 a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    const double d = std::max({(a - b).norm(), (b - c).norm(), (c - a).norm()});
    const double area = 0.5 * std::abs((b - a).x() * (c - a).y() - (b - a).y() * (c - a).x());
    if (area > 1e-3 * d * d) return Triangle(a, b, c);
  }
}

CanonicalFrame random_frame(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> h(0.2, 5.0);
  double a1 = u(rng), b1 = u(rng);
  if (a1 > b1) std::swap(a1, b1);
  if (b1 - a1 < 0.1) b1 = a1 + 0.1;
  return CanonicalFrame(a1, b1, h(rng));
}

std::array<HomLine, 3> side_lines(const Triangle& t) {
  const auto line = [](const Point2& p, const Point2& q) {
    const Point2 n = Point2(q.y() - p.y(), p.x() - q.x()).normalized();
    return HomLine::from_equation(n, n.dot(p));
  };
  return {line(t.A(), t.B()), line(t.B(), t.C()), line(t.C(), t.A())};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::VerificationFailure;  // sentinel: nothing thrown
}

}  // namespace

TEST(Triangle, RejectsDegenerate) {
  EXPECT_EQ(code_of([] { Triangle({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}); }), ErrorCode::DegenerateTriangle);
  EXPECT_EQ(code_of([] { Triangle({0.0, 0.0}, {1.0, 0.0}, {0.5, 1e-7}); }), ErrorCode::DegenerateTriangle);
  EXPECT_NO_THROW(Triangle({0.0, 0.0}, {1.0, 0.0}, {0.5, 1e-3}));
}

TEST(CanonicalFrame, Examples) {
  const CanonicalFrame f = canonical_frame(reference_triangle(), Side::AB);
  EXPECT_NEAR(f.a1(), -1.0, 1e-15);
  EXPECT_NEAR(f.b1(), 1.0, 1e-15);
  EXPECT_NEAR(f.c2(), 1.0, 1e-15);

  const Triangle rotated({0.0, -1.0}, {0.0, 1.0}, {-1.0, 0.0});
  const CanonicalFrame g = canonical_frame(rotated, Side::AB);
  EXPECT_NEAR(g.a1(), -1.0, 1e-15);
  EXPECT_NEAR(g.b1(), 1.0, 1e-15);
  EXPECT_NEAR(g.c2(), 1.0, 1e-15);

  const Triangle t({0.0, 0.0}, {4.0, 0.0}, {1.0, 3.0});
  const CanonicalFrame h = canonical_frame(t, Side::AB);
  EXPECT_NEAR(h.a1(), -1.0, 1e-14);
  EXPECT_NEAR(h.b1(), 3.0, 1e-14);
  EXPECT_NEAR(h.c2(), 3.0, 1e-14);
  EXPECT_LE((h.to_world({0.0, 0.0}) - Point2(1.0, 0.0)).norm(), 1e-14);
}

TEST(CanonicalFrame, MapsVerticesForEverySide) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = random_triangle(rng);
    for (Side s : {Side::AB, Side::BC, Side::CA}) {
      const CanonicalFrame f = canonical_frame(t, s);
      const Vertex first = s == Side::AB ? Vertex::A : s == Side::BC ? Vertex::B : Vertex::C;
      const Vertex second = s == Side::AB ? Vertex::B : s == Side::BC ? Vertex::C : Vertex::A;
      const double tol = 1e-12 * t.diameter();
      EXPECT_LE((f.to_frame(t.vertex(first)) - Point2(f.a1(), 0.0)).norm(), tol);
      EXPECT_LE((f.to_frame(t.vertex(second)) - Point2(f.b1(), 0.0)).norm(), tol);
      EXPECT_LE((f.to_frame(t.vertex(opposite(s))) - Point2(0.0, f.c2())).norm(), tol);
      EXPECT_LT(f.a1(), f.b1());
      EXPECT_GT(f.c2(), 0.0);
    }
  }
}

TEST(PencilDual, TangentToSideLines) {
  const CanonicalFrame f(-1.0, 1.0, 1.0);
  for (double lambda : {-3.0, -0.5, 0.0, 0.3, 2.0}) {
    const ConicMatrix d = pencil_dual(f, lambda);
    EXPECT_NEAR(d.form(Vector3(0.0, 0.0, 1.0)), 0.0, 1e-15);  // y = 0
    // c2 x + b1 y = b1 c2 and c2 x + a1 y = a1 c2.
    EXPECT_NEAR(d.form(Vector3(-1.0, 1.0, 1.0)), 0.0, 1e-14);
    EXPECT_NEAR(d.form(Vector3(1.0, 1.0, -1.0)), 0.0, 1e-14);
    if (d.is_regular()) EXPECT_TRUE(is_parabola(dualize(d)));
  }
  Matrix3 expected;
  expected << 0.0, 0.0, 1.0, 0.0, 2.0, 0.0, 1.0, 0.0, 0.0;
  EXPECT_LE((pencil_dual(f, 0.0).matrix() - expected).norm(), 1e-15);
}

TEST(PencilDual, DualizesToPencilParabola) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const CanonicalFrame f = random_frame(rng);
    const double lambda = f.a1() + (f.b1() - f.a1()) * (0.5 + 1.4 * u(rng));
    const ConicMatrix d = pencil_dual(f, lambda);
    if (!d.is_regular() || std::abs(lambda - f.a1()) < 1e-3 || std::abs(lambda - f.b1()) < 1e-3) continue;
    EXPECT_LE(projective_distance(dualize(d).matrix(), pencil_parabola(f, lambda).conic().matrix()), 1e-9);
  }
}

TEST(PencilParabola, WorkedExampleAndTangency) {
  const CanonicalFrame f(-1.0, 1.0, 1.0);
  const Parabola p = pencil_parabola(f, 0.0);
  EXPECT_NEAR(p.parameter(), 2.0, 1e-14);
  // x^2 = -4y is tangent to x + y = 1, x - y = -1 and y = 0.
  const HomLine l1 = HomLine::from_equation(Point2(1.0, 1.0).normalized(), 1.0 / std::sqrt(2.0));
  const HomLine l2 = HomLine::from_equation(Point2(1.0, -1.0).normalized(), -1.0 / std::sqrt(2.0));
  const HomLine l3 = HomLine::from_equation({0.0, 1.0}, 0.0);
  for (const HomLine& l : {l1, l2, l3}) EXPECT_NEAR(p.relative_dual_form(l), 0.0, 1e-12);
  Matrix3 expected;  // x^2 + 4y = 0
  expected << 0.0, 0.0, 2.0, 0.0, 1.0, 0.0, 2.0, 0.0, 0.0;
  EXPECT_LE(projective_distance(p.conic().matrix(), expected), 1e-12);

  const Parabola q = pencil_parabola(f, 0.3);
  EXPECT_NEAR(q.conic().form(Vector3(1.0, 0.3, 0.0)) / q.conic().frobenius(), 0.0, 1e-14);
  EXPECT_NEAR(q.relative_dual_form(l3), 0.0, 1e-12);
}

TEST(PencilParabola, SingularMembers) {
  const CanonicalFrame f(-1.0, 1.0, 1.0);
  EXPECT_EQ(code_of([&] { pencil_parabola(f, -1.0); }), ErrorCode::SingularPencilMember);
  EXPECT_EQ(code_of([&] { pencil_parabola(f, 1.0); }), ErrorCode::SingularPencilMember);
}

TEST(SquaredParameter, Examples) {
  const CanonicalFrame f(-1.0, 1.0, 1.0);
  EXPECT_NEAR(pencil_squared_parameter(f, 0.0), 4.0, 1e-14);
  EXPECT_EQ(pencil_squared_parameter(f, -1.0), 0.0);
  EXPECT_LT(pencil_squared_parameter(f, 1e8), 1e-14);
  EXPECT_LT(pencil_squared_parameter(f, -1e8), 1e-14);
}

TEST(SquaredParameter, MatchesParabolaParameter) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalFrame f = random_frame(rng);
    const double w = f.b1() - f.a1();
    const double lambda = f.a1() + w * (0.5 + 2.0 * u(rng));
    if (std::abs(lambda - f.a1()) < 1e-3 * w || std::abs(lambda - f.b1()) < 1e-3 * w) continue;
    const double p = pencil_parabola(f, lambda).parameter();
    EXPECT_NEAR(pencil_squared_parameter(f, lambda) / (p * p), 1.0, 1e-9);
  }
}

TEST(SquaredParameter, DenominatorPositive) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalFrame f = random_frame(rng);
    for (int k = 0; k < 10; ++k) EXPECT_GT(pencil_denominator(f, u(rng)), 0.0);
  }
}

TEST(ExtremumCubic, WorkedExample) {
  const MonicCubic c = extremum_cubic(CanonicalFrame(-1.0, 1.0, 1.0));
  EXPECT_EQ(c[0], 1.0);
  EXPECT_EQ(c[1], 0.0);
  EXPECT_EQ(c[2], -5.0);
  EXPECT_EQ(c[3], 0.0);
}

TEST(ExtremumCubic, SignIdentity) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalFrame f = random_frame(rng);
    const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
    const MonicCubic e = extremum_cubic(f);
    const double rhs = (b1 * b1 + c2 * c2) * (a1 - b1) * (a1 - b1) * (a1 * a1 + c2 * c2);
    EXPECT_NEAR((evaluate(e, a1) * evaluate(e, b1) + rhs) / rhs, 0.0, 1e-9);
  }
}

TEST(ExtremumCubic, DerivativeIdentityAndStationaryRoots) {
  std::mt19937_64 rng(46);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const CanonicalFrame f = random_frame(rng);
    const double a1 = f.a1(), b1 = f.b1(), c2 = f.c2();
    const double h = 1e-6 * (b1 - a1);
    const auto p2 = [&](double l) { return pencil_squared_parameter(f, l); };
    const MonicCubic e = extremum_cubic(f);

    const double lambda = a1 + (b1 - a1) * (0.5 + 1.5 * u(rng));
    const double den = pencil_denominator(f, lambda);
    const double lhs = oracle::central_difference(p2, lambda, h) * std::pow(den, 4) / (8.0 * std::pow(c2, 4));
    // The derivative carries a minus sign: its numerator is
    // -8 c2^4 (b1 - l)(a1 - l) E(l).
    const double rhs = -(b1 - lambda) * (a1 - lambda) * evaluate(e, lambda);
    EXPECT_NEAR(lhs, rhs, 1e-7 * std::abs(rhs) + 1e-12 * std::pow(b1 - a1, 5));

    const auto roots = real_roots(e);
    ASSERT_TRUE(roots);
    double peak = 0.0;
    for (double r : *roots) peak = std::max(peak, p2(r));
    for (double r : *roots) {
      EXPECT_LE(std::abs(oracle::central_difference(p2, r, h)), 1e-7 * peak);
    }
    int inside = 0;
    for (double r : *roots) inside += (r > a1 && r < b1) ? 1 : 0;
    EXPECT_EQ(inside, 1);
  }
}

TEST(Exparabolas, WorkedExample) {
  const auto ex = exparabolas(reference_triangle());
  EXPECT_EQ(ex[0].side, Side::AB);
  EXPECT_EQ(ex[0].opposite, Vertex::C);
  EXPECT_NEAR(ex[0].lambda, 0.0, 1e-15);
  EXPECT_NEAR(ex[0].parabola.parameter(), 2.0, 1e-12);
  EXPECT_LE(ex[0].tangency.norm(), 1e-15);
  EXPECT_EQ(ex[1].opposite, Vertex::A);
  EXPECT_EQ(ex[2].opposite, Vertex::B);
  EXPECT_NEAR(ex[1].parabola.parameter(), ex[2].parabola.parameter(), 1e-12);
  // Mirror images in the y-axis.
  EXPECT_NEAR(ex[1].parabola.apex().x(), -ex[2].parabola.apex().x(), 1e-12);
  EXPECT_NEAR(ex[1].parabola.apex().y(), ex[2].parabola.apex().y(), 1e-12);
}

TEST(Exparabolas, Equilateral) {
  const Triangle t({0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
  const auto ex = exparabolas(t);
  for (const auto& e : ex) {
    EXPECT_NEAR(e.parabola.parameter(), ex[0].parabola.parameter(), 1e-12);
    EXPECT_NEAR(e.lambda, 0.0, 1e-12);  // the altitude foot is the midpoint
  }
  EXPECT_LE((ex[0].tangency - Point2(0.5, 0.0)).norm(), 1e-12);
}

TEST(Exparabolas, RandomTrianglesInvariants) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = random_triangle(rng);
    const auto ex = exparabolas(t);
    const auto lines = side_lines(t);
    for (const auto& e : ex) {
      for (const HomLine& l : lines) EXPECT_LE(std::abs(e.parabola.relative_dual_form(l)), 1e-9);
      // Region membership: sampled boundary points keep the right signs.
      const auto region = triangle_region(t, e.side);
      for (const HalfPlane& h : region) EXPECT_TRUE(parabola_in_halfplane(e.parabola, h));
      for (int k = 0; k < 50; ++k) {
        const Point2 x = e.parabola.point_at(10.0 * t.diameter() * u(rng));
        for (const HalfPlane& h : region) EXPECT_GE(h.slack(x), -1e-9 * t.diameter());
      }
      // Strict local maximum along the pencil.
      const double eps = 1e-5 * (e.frame.b1() - e.frame.a1());
      const double p2 = pencil_squared_parameter(e.frame, e.lambda);
      EXPECT_LT(pencil_squared_parameter(e.frame, e.lambda - eps), p2);
      EXPECT_LT(pencil_squared_parameter(e.frame, e.lambda + eps), p2);
      EXPECT_NEAR(e.parabola.parameter() * e.parabola.parameter() / p2, 1.0, 1e-9);
    }
  }
}

TEST(Exparabolas, RigidMotionAndScaling) {
  std::mt19937_64 rng(48);
  std::uniform_real_distribution<double> s(0.1, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = random_triangle(rng);
    const oracle::Motion m = oracle::random_motion(rng);
    const double k = s(rng);
    const auto base = exparabolas(t);
    // A reflection reverses orientation but keeps side labels.
    const auto moved = exparabolas(Triangle(m.apply(t.A()), m.apply(t.B()), m.apply(t.C())));
    const auto scaled = exparabolas(Triangle(k * t.A(), k * t.B(), k * t.C()));
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(moved[j].parabola.parameter() / base[j].parabola.parameter(), 1.0, 1e-9);
      EXPECT_NEAR(scaled[j].parabola.parameter() / (k * base[j].parabola.parameter()), 1.0, 1e-9);
    }
  }
}
