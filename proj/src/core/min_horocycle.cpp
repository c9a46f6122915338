#include "core/min_horocycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace cx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  const double w = std::fmod(theta, kTwoPi);
  return w < 0.0 ? w + kTwoPi : w;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

ProfileSample golden_section(const PointSet& ps, double lo, double hi, double tol) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = size_profile(ps, x1);
  double f2 = size_profile(ps, x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = size_profile(ps, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = size_profile(ps, x2);
    }
  }
  const double mid = 0.5 * (lo + hi);
  return {mid, size_profile(ps, mid)};
}

}  // namespace

PointSet::PointSet(std::vector<HoroPoint> points) : points_(std::move(points)) {
  if (points_.empty()) fail(ErrorCode::InvalidArgument, "point set must not be empty");
}

double size_profile(const PointSet& ps, double theta) {
  double a = 0.0;
  for (const HoroPoint& p : ps.points()) a = std::max(a, min_size_for_point(theta, p));
  return a;
}

MinHorocycleSolution solve_min_horocycle(const PointSet& ps, const MinHorocycleOptions& options) {
  if (options.grid < 3) fail(ErrorCode::InvalidArgument, "grid needs at least three samples");
  if (!(options.refine_tol > 0.0)) fail(ErrorCode::InvalidArgument, "refine_tol must be positive");

  const std::size_t n = static_cast<std::size_t>(options.grid);
  const double spacing = kTwoPi / static_cast<double>(n);
  std::vector<ProfileSample> profile(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    const double theta = options.grid_offset + spacing * static_cast<double>(i);
    profile[i] = {theta, size_profile(ps, theta)};
  });

  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = profile[i].a;
    if (f <= profile[(i + n - 1) % n].a && f <= profile[(i + 1) % n].a) brackets.push_back(i);
  }

  std::vector<ProfileSample> refined(brackets.size());
  parallel_for(brackets.size(), options.threads, [&](std::size_t k) {
    const double center = profile[brackets[k]].theta;
    refined[k] = golden_section(ps, center - spacing, center + spacing, options.refine_tol);
  });

  const auto best = std::min_element(refined.begin(), refined.end(),
                                     [](const ProfileSample& l, const ProfileSample& r) { return l.a < r.a; });
  const double a_star = best->a;
  const double theta_star = wrap_angle(best->theta);

  std::vector<ProfileSample> minimizers;
  bool coincide = true;
  for (const ProfileSample& r : refined) {
    if (r.a > a_star + 1e-7) continue;
    if (circular_distance(r.theta, theta_star) > 1e-6) coincide = false;
    minimizers.push_back({wrap_angle(r.theta), r.a});
  }

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (min_size_for_point(theta_star, ps.points()[i]) >= a_star - 1e-8) support.push_back(i);
  }

  MinHorocycleSolution sol{Horocycle(theta_star, a_star), std::move(support), false,
                           std::move(profile), std::move(minimizers)};
  sol.unique = a_star < kCriticalSize - 1e-9 && coincide;
  return sol;
}

SolutionCheck verify_solution(const PointSet& ps, const MinHorocycleSolution& sol,
                              std::size_t perturbations, std::uint64_t seed) {
  const double theta = sol.horocycle.theta();
  const double a_star = sol.horocycle.a();
  SolutionCheck check;
  check.perturbations = perturbations;

  check.min_margin = std::numeric_limits<double>::infinity();
  for (const HoroPoint& p : ps.points()) {
    check.min_margin = std::min(check.min_margin, a_star - min_size_for_point(theta, p));
  }
  if (check.min_margin < -1e-10) {
    fail(ErrorCode::VerificationFailure, "enclosure: a point lies outside the horocycle");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(-6.0, -2.0);
  std::bernoulli_distribution sign(0.5);
  check.min_perturbed_excess = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < perturbations; ++i) {
    const double delta = (sign(rng) ? 1.0 : -1.0) * std::pow(10.0, exponent(rng));
    const double excess = size_profile(ps, theta + delta) - a_star;
    check.min_perturbed_excess = std::min(check.min_perturbed_excess, excess);
    if (excess < -1e-12) {
      fail(ErrorCode::VerificationFailure, "local-optimality: a nearby ideal angle gives a smaller horocycle");
    }
  }

  if (sol.unique) {
    check.uniqueness_checked = true;
    if (!(a_star < kCriticalSize)) {
      fail(ErrorCode::VerificationFailure, "uniqueness: flagged unique at or above 2^{-1/2}");
    }
    const std::size_t n = sol.profile.empty() ? 720 : sol.profile.size();
    const double offset = sol.profile.empty() ? 0.0 : sol.profile.front().theta;
    for (std::size_t i = 0; i < n; ++i) {
      const double grid_theta = offset + kTwoPi * static_cast<double>(i) / static_cast<double>(n);
      if (circular_distance(grid_theta, theta) <= 1e-3) continue;
      if (size_profile(ps, grid_theta) <= a_star + 1e-12) {
        fail(ErrorCode::VerificationFailure, "uniqueness: a second ideal angle encloses at size a*");
      }
    }
  }
  return check;
}

}  // namespace cx
