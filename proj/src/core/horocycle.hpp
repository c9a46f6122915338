#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "core/projective.hpp"

namespace cx {

/// Point of the Cayley-Klein disk (strictly inside the unit circle).
class HoroPoint {
 public:
  HoroPoint(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  Point2 cartesian() const { return {x_, y_}; }
  HomPoint homogeneous() const { return HomPoint(1.0, x_, y_); }

 private:
  double x_, y_;
};

/// Horocycle touching the absolute circle at angle theta; as a Euclidean
/// ellipse it has semi-axes a (tangential) and a^2 (radial). Size is a.
class Horocycle {
 public:
  Horocycle(double theta, double a);

  double theta() const noexcept { return theta_; }
  double a() const noexcept { return a_; }
  Point2 ideal_point() const;
  Point2 center() const;

 private:
  double theta_, a_;
};

inline constexpr double kCriticalSize = 0.70710678118654752440;  // 2^{-1/2}

/// Conic matrix, negative on the interior.
ConicMatrix horocycle_matrix(const Horocycle& h);

/// Open-interior test.
bool contains(const Horocycle& h, const HoroPoint& p);

/// Smallest size of a horocycle with ideal angle theta that has p on or
/// inside it.
double min_size_for_point(double theta, const HoroPoint& p);

/// 2a^2 - a^2 cos^2 w - sin^2 w; the horocycles of size a at pi/2 +- w share
/// interior points iff this is positive.
double common_interior_radicand(double a, double omega);

struct IntersectionPoints {
  double lower;  // L = (0, lower)
  double upper;  // U = (0, upper)
};

/// Intersections of the size-a horocycles at pi/2 + omega and pi/2 - omega.
/// Throws NoCommonInterior.
IntersectionPoints intersection_points(double a, double omega);

/// The horocycle at pi/2 through L that holds the common interior (for
/// omega > pi/2 the mirrored one at -pi/2 through U). Throws
/// PreconditionViolation unless a < 2^{-1/2} with a nonempty common interior.
Horocycle lemma_shrink(double a, double omega);

/// Same construction without the size bound (it still exists above
/// 2^{-1/2}, but is no longer smaller).
Horocycle lemma_shrink_unchecked(double a, double omega);

// Polynomials from the half-angle substitution omega = 2 atan(t).
double lemma_q(double a, double t);
double lemma_lhs(double a, double t);  // a (t^2 + 1) sqrt(q)
double lemma_rhs(double a, double t);  // 2 - 3a^2 - a^2 t^4 - 2 (2a^2 - 1)^2 t^2
double lemma_factored_difference(double a, double t);
double lens_form0(double x, double y, double a, double t);
double lens_form1(double x, double y, double a, double t);
double lemma_k(double x, double y, double a, double t);

struct LemmaIdentityReport {
  double a = 0.0;
  double t = 0.0;
  double q = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool rhs_positive = false;
  bool inequality_holds = false;        // lhs < rhs
  double rhs_at_one = 0.0;
  double rhs_at_one_expected = 0.0;      // 4a^2 (1 - 2a^2)
  double rhs_at_one_rel_error = 0.0;
  double difference = 0.0;               // lhs^2 - rhs^2, expanded
  double difference_factored = 0.0;
  double difference_rel_error = 0.0;
  bool rhs_decreasing = false;           // sampled on (0, 1)
  bool size_decreases = false;           // 2a^2 + l - 1 > 0 at omega = 2 atan t
  bool passed = false;
};

/// Throws PreconditionViolation outside 0 < t < 1, 0 < a < 2^{-1/2}, q > 0.
LemmaIdentityReport verify_lemma_identities(double a, double t);

struct ContainmentReport {
  double a = 0.0;
  double t = 0.0;
  std::size_t samples = 0;
  std::size_t lens_points = 0;          // points meeting both lens inequalities
  std::size_t k_violations = 0;         // k <= 0 on the lens
  std::size_t containment_violations = 0;  // lens point outside int H
  std::size_t form_mismatches = 0;      // polynomial vs matrix sign disagreements
  double min_k = 0.0;
  bool lemma_applies = false;           // a < 2^{-1/2}
  double shrunk_size = 0.0;
};

/// Samples the bounding box of the lens; reproducible for a given seed and
/// independent of the thread count. Throws PreconditionViolation unless
/// 0 < a < 1 and 0 < t < 1.
ContainmentReport verify_containment_implication(double a, double t, std::size_t samples,
                                                 std::uint64_t seed, unsigned threads = 0);

}  // namespace cx
