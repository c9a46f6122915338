#include "core/max_parabola.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace cx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(const Point2& u, const Point2& v) { return u.x() * v.y() - u.y() * v.x(); }

std::optional<Vector3> solve3(const Vector3& r0, const Vector3& r1, const Vector3& r2,
                              const Vector3& rhs) {
  Matrix3 m;
  m.row(0) = r0;
  m.row(1) = r1;
  m.row(2) = r2;
  const double det = m.determinant();
  if (!(std::abs(det) > 1e-12 * r0.norm() * r1.norm() * r2.norm())) return std::nullopt;
  Vector3 x;
  for (int col = 0; col < 3; ++col) {
    Matrix3 k = m;
    k.col(col) = rhs;
    x[col] = k.determinant() / det;
  }
  return x;
}

// Shifts an angle by multiples of 2 pi so it lands nearest to `center`.
double unwrap_near(double angle, double center) {
  return angle + kTwoPi * std::round((center - angle) / kTwoPi);
}

}  // namespace

HalfPlane::HalfPlane(const Point2& n, double d) : normal(n), offset(d) {
  if (!n.allFinite() || !std::isfinite(d)) fail(ErrorCode::InvalidArgument, "half-plane is not finite");
  if (std::abs(n.norm() - 1.0) > 1e-12) {
    fail(ErrorCode::InvalidArgument, "half-plane normal must have unit length");
  }
}

HalfPlane HalfPlane::normalized(const Point2& n, double d) {
  const double len = n.norm();
  if (!(len > 0.0) || !std::isfinite(len)) fail(ErrorCode::InvalidArgument, "half-plane normal must be nonzero");
  return HalfPlane(n / len, d / len);
}

ConvexRegion::ConvexRegion(std::vector<HalfPlane> halfplanes, double scale)
    : halfplanes_(std::move(halfplanes)), scale_(scale) {
  if (halfplanes_.empty()) fail(ErrorCode::InvalidArgument, "region needs at least one half-plane");
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) fail(ErrorCode::InvalidArgument, "probe scale must be positive");

  // Chebyshev centre inside the probe box: maximize r subject to
  // n . x + r <= d. The optimum sits on a vertex, so enumerate them.
  std::vector<Vector3> rows;
  std::vector<double> rhs;
  for (const HalfPlane& h : halfplanes_) {
    rows.emplace_back(h.normal.x(), h.normal.y(), 1.0);
    rhs.push_back(h.offset);
  }
  const double half = 0.5 * scale_;
  for (const auto& [x, y] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
    rows.emplace_back(x, y, 1.0);
    rhs.push_back(half);
  }
  const double tol = 1e-12 * scale_;
  double best_r = -std::numeric_limits<double>::infinity();
  Point2 best_x = Point2::Zero();
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto x = solve3(rows[i], rows[j], rows[k], Vector3(rhs[i], rhs[j], rhs[k]));
        if (!x || (*x)[2] <= best_r) continue;
        bool feasible = true;
        for (std::size_t l = 0; l < n && feasible; ++l) feasible = rows[l].dot(*x) <= rhs[l] + tol;
        if (feasible) {
          best_r = (*x)[2];
          best_x = Point2((*x)[0], (*x)[1]);
        }
      }
    }
  }
  if (!(best_r > 1e-12 * scale_)) {
    fail(ErrorCode::NoInscribedParabola, "region has no interior inside the probe box");
  }
  witness_ = best_x;
  inradius_ = best_r;
}

std::vector<HalfPlane> triangle_region(const Triangle& t, Side negative) {
  std::vector<HalfPlane> out;
  for (Side side : {Side::AB, Side::BC, Side::CA}) {
    const Point2& p = t.vertex(side == Side::AB ? Vertex::A : side == Side::BC ? Vertex::B : Vertex::C);
    const Point2& q = t.vertex(side == Side::AB ? Vertex::B : side == Side::BC ? Vertex::C : Vertex::A);
    const Point2& r = t.vertex(opposite(side));
    const Point2 dir = (q - p).normalized();
    Point2 n(dir.y(), -dir.x());
    if (n.dot(r - p) > 0.0) n = -n;  // positive half-plane holds the opposite vertex
    if (side == negative) n = -n;
    out.emplace_back(n, n.dot(p));
  }
  return out;
}

bool parabola_in_halfplane(const Parabola& p, const HalfPlane& h) {
  if (h.normal.dot(p.axis()) > 1e-12) return false;
  const Point2& apex = p.apex();
  const double tol = 1e-9 * (std::abs(h.offset) + apex.norm() + p.parameter());
  if (h.normal.dot(apex) > h.offset + tol) return false;
  return p.relative_dual_form(HomLine::from_equation(h.normal, h.offset)) >= -1e-9;
}

std::optional<std::pair<double, double>> recession_arc(const std::vector<HalfPlane>& halfplanes) {
  if (halfplanes.empty()) return std::nullopt;
  // Each half-plane admits axis directions in the open half-circle facing
  // away from its normal.
  auto arc_of = [](const HalfPlane& h) {
    const double lo = std::atan2(h.normal.y(), h.normal.x()) + 0.5 * std::numbers::pi;
    return std::pair{lo, lo + std::numbers::pi};
  };
  auto [lo, hi] = arc_of(halfplanes.front());
  for (std::size_t i = 1; i < halfplanes.size(); ++i) {
    auto [l, h] = arc_of(halfplanes[i]);
    const double mid = 0.5 * (l + h);
    const double shifted = unwrap_near(mid, 0.5 * (lo + hi));
    l += shifted - mid;
    h += shifted - mid;
    lo = std::max(lo, l);
    hi = std::min(hi, h);
    if (!(hi - lo > 1e-14)) return std::nullopt;
  }
  const double mid = 0.5 * (lo + hi);
  const double shift = std::remainder(mid, kTwoPi) - mid;
  return std::pair{lo + shift, hi + shift};
}

std::optional<AngleCandidate> best_at_angle(const ConvexRegion& region, double axis_angle) {
  const auto& hp = region.halfplanes();
  const std::size_t m = hp.size();
  if (m < 3) return std::nullopt;
  const Point2 axis(std::cos(axis_angle), std::sin(axis_angle));
  const Point2 across(-axis.y(), axis.x());

  // Containment in h reads n . apex + c p <= d with c = (n.across)^2 / (2 |n.axis|).
  std::vector<Vector3> rows(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double along = hp[i].normal.dot(axis);
    if (!(along < 0.0)) return std::nullopt;
    const double side = hp[i].normal.dot(across);
    rows[i] = Vector3(hp[i].normal.x(), hp[i].normal.y(), side * side / (-2.0 * along));
  }

  // Parabolas touching three lines are vertices of that polyhedron in
  // (apex, p); cubic in m, meant for small regions.
  const double tol = 1e-9 * region.scale();
  std::optional<AngleCandidate> best;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const auto x = solve3(rows[i], rows[j], rows[k],
                              Vector3(hp[i].offset, hp[j].offset, hp[k].offset));
        if (!x || !((*x)[2] > 0.0)) continue;
        if (best && (*x)[2] <= best->parameter) continue;
        bool feasible = true;
        for (std::size_t l = 0; l < m && feasible; ++l) {
          feasible = rows[l].dot(*x) <= hp[l].offset + tol;
        }
        if (feasible) best = AngleCandidate{Point2((*x)[0], (*x)[1]), (*x)[2], {i, j, k}};
      }
    }
  }
  return best;
}

namespace {

struct LocalResult {
  bool converged = false;
  double angle = 0.0;
  AngleCandidate candidate{};
};

// Compass search on the axis angle; the apex and parameter follow from the
// inner vertex enumeration.
LocalResult climb(const ConvexRegion& region, double lo, double hi, double start, double step) {
  auto evaluate = [&](double angle) { return best_at_angle(region, std::clamp(angle, lo, hi)); };
  auto value = [](const std::optional<AngleCandidate>& c) {
    return c ? c->parameter : -std::numeric_limits<double>::infinity();
  };

  double angle = std::clamp(start, lo, hi);
  std::optional<AngleCandidate> current = evaluate(angle);
  for (int iter = 0; iter < 20000 && step > 1e-12; ++iter) {
    const double left = std::clamp(angle - step, lo, hi);
    const double right = std::clamp(angle + step, lo, hi);
    const auto cl = evaluate(left);
    const auto cr = evaluate(right);
    const double v = value(current);
    if (value(cr) > v && value(cr) >= value(cl)) {
      angle = right;
      current = cr;
    } else if (value(cl) > v) {
      angle = left;
      current = cl;
    } else {
      step *= 0.5;
    }
  }
  LocalResult out;
  if (current) {
    out.converged = true;
    out.angle = angle;
    out.candidate = *current;
  }
  return out;
}

double angle_distance(double a, double b) {
  return std::abs(unwrap_near(a, b) - b);
}

}  // namespace

MaxParabolaSolution solve_max_parabola(const ConvexRegion& region, const MaxParabolaOptions& options) {
  const auto& hp = region.halfplanes();
  const double scale = region.scale();
  if (options.starts < 1) fail(ErrorCode::InvalidArgument, "at least one start is required");

  const auto arc = recession_arc(hp);
  if (!arc) {
    fail(ErrorCode::NoInscribedParabola,
         "no axis direction recedes inside every half-plane (e.g. parallel boundaries)");
  }
  if (hp.size() == 1) fail(ErrorCode::UnboundedParameter, "a single half-plane holds parabolas of any size");
  if (hp.size() == 2) {
    if (std::abs(cross(hp[0].normal, hp[1].normal)) > 1e-12) {
      fail(ErrorCode::UnboundedParameter, "a wedge holds parabolas of any size");
    }
    if (std::abs(hp[0].offset - hp[1].offset) <= 1e-12 * scale) {
      fail(ErrorCode::UnboundedParameter, "coincident boundaries bound a half-plane");
    }
    fail(ErrorCode::NoInscribedParabola, "a parabola cannot touch two distinct parallel lines from one side");
  }

  const double margin = 1e-9 * (arc->second - arc->first);
  const double lo = arc->first + margin;
  const double hi = arc->second - margin;
  const double mid = 0.5 * (lo + hi);

  // Seeds: bisectors of inward normal pairs, then stratified random angles.
  std::vector<double> seeds;
  const std::size_t total = static_cast<std::size_t>(options.starts);
  for (std::size_t i = 0; i < hp.size() && seeds.size() < total / 2; ++i) {
    for (std::size_t j = i + 1; j < hp.size() && seeds.size() < total / 2; ++j) {
      const Point2 inward = -(hp[i].normal + hp[j].normal);
      if (inward.norm() < 1e-12) continue;
      const double angle = unwrap_near(std::atan2(inward.y(), inward.x()), mid);
      if (angle > lo && angle < hi) seeds.push_back(angle);
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t strata = total - seeds.size();
  for (std::size_t k = 0; k < strata; ++k) {
    seeds.push_back(lo + (static_cast<double>(k) + unit(rng)) / static_cast<double>(strata) * (hi - lo));
  }

  const double step = (hi - lo) / static_cast<double>(total);
  std::vector<LocalResult> results(seeds.size());
  parallel_for(seeds.size(), options.threads,
               [&](std::size_t i) { results[i] = climb(region, lo, hi, seeds[i], step); });

  const LocalResult* best = nullptr;
  int converged = 0;
  for (const LocalResult& r : results) {
    if (!r.converged) continue;
    ++converged;
    if (!best || r.candidate.parameter > best->candidate.parameter) best = &r;
  }
  if (!best) {
    fail(ErrorCode::NoInscribedParabola, "no contained parabola touches three boundary lines");
  }
  if (best->candidate.parameter > 1e6 * scale) {
    fail(ErrorCode::UnboundedParameter, "parameter exceeds 1e6 * scale");
  }

  Convergence conv;
  conv.starts = static_cast<int>(seeds.size());
  conv.converged = converged;
  const double p_best = best->candidate.parameter;
  for (const LocalResult& r : results) {
    if (!r.converged || r.candidate.parameter < p_best * (1.0 - 1e-8)) continue;
    ++conv.agreeing_starts;
    conv.spread = std::max({conv.spread, (r.candidate.apex - best->candidate.apex).norm(),
                            std::abs(r.candidate.parameter - p_best)});
    conv.angle_spread = std::max(conv.angle_spread, angle_distance(r.angle, best->angle));
  }
  conv.certified = conv.spread <= 1e-5 * scale && conv.angle_spread <= 1e-5;
  conv.bimodal = conv.spread > 1e-4 * scale || conv.angle_spread > 1e-4;

  const Parabola parabola = parabola_from_apex(best->candidate.apex, best->angle, p_best);
  std::vector<std::size_t> active;
  double min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hp.size(); ++i) {
    const double gap = parabola.gap(hp[i].normal, hp[i].offset);
    min_gap = std::min(min_gap, gap);
    if (std::abs(gap) <= 1e-9 * scale) active.push_back(i);
  }
  return MaxParabolaSolution{parabola, best->candidate.apex, std::remainder(best->angle, kTwoPi),
                             std::move(active), min_gap, conv};
}

}  // namespace cx
