#pragma once

#include <array>

#include "core/cubic.hpp"
#include "core/parabola.hpp"
#include "core/projective.hpp"

namespace cx {

enum class Vertex { A, B, C };
enum class Side { AB, BC, CA };

Vertex opposite(Side side) noexcept;
char vertex_name(Vertex v) noexcept;
const char* side_name(Side s) noexcept;

/// Three points in general position. Throws DegenerateTriangle when
/// area / diameter^2 < 1e-6.
class Triangle {
 public:
  Triangle(const Point2& a, const Point2& b, const Point2& c);

  const Point2& A() const noexcept { return a_; }
  const Point2& B() const noexcept { return b_; }
  const Point2& C() const noexcept { return c_; }
  const Point2& vertex(Vertex v) const noexcept;
  double diameter() const noexcept;
  double area() const noexcept;

 private:
  Point2 a_, b_, c_;
};

/// Rigid motion (possibly orientation reversing) taking the endpoints of one
/// side to (a1, 0), (b1, 0) with a1 < b1 and the opposite vertex to (0, c2)
/// with c2 > 0. The origin sits at the foot of the altitude.
class CanonicalFrame {
 public:
  /// Frame with the identity motion, for working directly in canonical
  /// coordinates. Requires a1 < b1 and c2 > 0.
  CanonicalFrame(double a1, double b1, double c2);
  CanonicalFrame(double a1, double b1, double c2, const Point2& origin,
                 const Point2& e1, const Point2& e2);

  double a1() const noexcept { return a1_; }
  double b1() const noexcept { return b1_; }
  double c2() const noexcept { return c2_; }

  Point2 to_frame(const Point2& world) const;
  Point2 to_world(const Point2& local) const;
  /// Homogeneous matrix T with x_frame = T x_world.
  Matrix3 world_to_frame() const;
  ConicMatrix conic_to_world(const ConicMatrix& local) const;
  ConicMatrix conic_to_frame(const ConicMatrix& world) const;

 private:
  double a1_, b1_, c2_;
  Point2 origin_, e1_, e2_;
};

CanonicalFrame canonical_frame(const Triangle& t, Side side);

/// Dual conic D(lambda): every parabola tangent to the three side lines in
/// frame coordinates.
ConicMatrix pencil_dual(const CanonicalFrame& frame, double lambda);

/// Primal member P(lambda), in frame coordinates; touches y = 0 at
/// (lambda, 0). Throws SingularPencilMember at lambda = a1 or b1.
Parabola pencil_parabola(const CanonicalFrame& frame, double lambda);

/// Closed-form squared parameter of P(lambda).
double pencil_squared_parameter(const CanonicalFrame& frame, double lambda);

/// (lambda - a1 - b1)^2 + c2^2, the base of the squared-parameter denominator.
double pencil_denominator(const CanonicalFrame& frame, double lambda);

/// Monic cubic whose roots are the critical points of the squared parameter.
MonicCubic extremum_cubic(const CanonicalFrame& frame);

struct ExparabolaResult {
  Side side;             // side the parabola touches between its endpoints
  Vertex opposite;       // vertex opposite that side
  double lambda;         // tangency abscissa in the side's canonical frame
  Parabola parabola;     // world coordinates
  Point2 tangency;       // world coordinates, on the side segment
  CanonicalFrame frame;
};

/// The three maximal parabolas tangent to all side lines, ordered AB, BC, CA.
std::array<ExparabolaResult, 3> exparabolas(const Triangle& t);

}  // namespace cx
