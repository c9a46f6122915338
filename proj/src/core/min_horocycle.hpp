#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core/horocycle.hpp"

namespace cx {

class PointSet {
 public:
  /// Throws InvalidArgument when empty.
  explicit PointSet(std::vector<HoroPoint> points);

  const std::vector<HoroPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<HoroPoint> points_;
};

/// Smallest enclosing size among horocycles with ideal angle theta.
double size_profile(const PointSet& ps, double theta);

struct ProfileSample {
  double theta;
  double a;
};

struct MinHorocycleSolution {
  Horocycle horocycle;
  std::vector<std::size_t> support;
  bool unique = false;
  std::vector<ProfileSample> profile;     // grid samples
  std::vector<ProfileSample> minimizers;  // refined minima within 1e-7 of the best
};

struct MinHorocycleOptions {
  int grid = 720;
  double refine_tol = 1e-12;
  double grid_offset = 0.0;  // radians added to every grid angle
  unsigned threads = 0;
};

MinHorocycleSolution solve_min_horocycle(const PointSet& ps, const MinHorocycleOptions& options = {});

struct SolutionCheck {
  double min_margin = 0.0;           // min over points of a* - min_size
  double min_perturbed_excess = 0.0; // min of profile(theta* + d) - a*
  std::size_t perturbations = 0;
  bool uniqueness_checked = false;
};

/// Enclosure, local optimality under angle perturbations and, for solutions
/// flagged unique, absence of a second grid angle reaching a*. Throws
/// VerificationFailure naming the failed check.
SolutionCheck verify_solution(const PointSet& ps, const MinHorocycleSolution& sol,
                              std::size_t perturbations, std::uint64_t seed);

}  // namespace cx
