#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/exparabola.hpp"
#include "core/parabola.hpp"

namespace cx {

/// Closed half-plane normal . x <= offset with a unit normal.
struct HalfPlane {
  HalfPlane(const Point2& normal, double offset);
  /// Rescales an arbitrary nonzero normal (and the offset) to unit length.
  static HalfPlane normalized(const Point2& normal, double offset);

  bool contains(const Point2& x) const { return normal.dot(x) <= offset; }
  double slack(const Point2& x) const { return offset - normal.dot(x); }

  Point2 normal;
  double offset;
};

/// Intersection of half-planes with a certified interior witness. The scale
/// is the width of the square probe box used for the feasibility check and as
/// the reference length for tolerances.
class ConvexRegion {
 public:
  /// Throws NoInscribedParabola when the region has no interior inside the
  /// probe box, InvalidArgument when the list is empty.
  explicit ConvexRegion(std::vector<HalfPlane> halfplanes, double scale = 1e3);

  const std::vector<HalfPlane>& halfplanes() const noexcept { return halfplanes_; }
  const Point2& witness() const noexcept { return witness_; }
  double inradius() const noexcept { return inradius_; }
  double scale() const noexcept { return scale_; }

 private:
  std::vector<HalfPlane> halfplanes_;
  double scale_;
  Point2 witness_;
  double inradius_;
};

/// The three half-planes around a triangle that are negative for `negative`
/// and positive for the other two sides, in the order AB, BC, CA.
std::vector<HalfPlane> triangle_region(const Triangle& t, Side negative);

/// Containment via recession direction, apex and the dual-form sign of the
/// boundary line (tangency counts as contained).
bool parabola_in_halfplane(const Parabola& p, const HalfPlane& h);

/// Open arc (lo, hi) of axis angles along which a parabola can recede inside
/// every half-plane, or nullopt when none exists.
std::optional<std::pair<double, double>> recession_arc(const std::vector<HalfPlane>& halfplanes);

/// Largest parabola with the given axis angle that lies in the region and is
/// tangent to at least three boundary lines.
struct AngleCandidate {
  Point2 apex;
  double parameter;
  std::array<std::size_t, 3> tangent_to;
};
std::optional<AngleCandidate> best_at_angle(const ConvexRegion& region, double axis_angle);

struct Convergence {
  int starts = 0;
  int converged = 0;
  int agreeing_starts = 0;
  double spread = 0.0;        // apex / parameter disagreement among agreeing starts
  double angle_spread = 0.0;  // radians
  bool certified = false;     // spread <= 1e-5 scale and angle_spread <= 1e-5
  bool bimodal = false;       // agreeing starts farther apart than 1e-4 scale
};

struct MaxParabolaSolution {
  Parabola parabola;
  Point2 apex;
  double axis_angle;
  std::vector<std::size_t> active_constraints;
  double min_gap;  // smallest offset - support over all half-planes
  Convergence convergence;
};

struct MaxParabolaOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// Maximal parabola inscribed in the region (contained, tangent to at least
/// three boundary lines). Throws NoInscribedParabola or UnboundedParameter.
MaxParabolaSolution solve_max_parabola(const ConvexRegion& region,
                                       const MaxParabolaOptions& options = {});

}  // namespace cx
