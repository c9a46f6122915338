#include "app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>

namespace cx::app {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string pair(const Point2& p) { return num(p.x()) + "," + num(p.y()); }

// Liang-Barsky clip of segment a-b against the viewport.
std::optional<std::pair<Point2, Point2>> clip(const Point2& a, const Point2& b, const Viewport& vp) {
  double t0 = 0.0;
  double t1 = 1.0;
  const Point2 d = b - a;
  const double p[4] = {-d.x(), d.x(), -d.y(), d.y()};
  const double q[4] = {a.x() - vp.xmin, vp.xmax - a.x(), a.y() - vp.ymin, vp.ymax - a.y()};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return std::nullopt;
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      t0 = std::max(t0, r);
    } else {
      t1 = std::min(t1, r);
    }
    if (t0 > t1) return std::nullopt;
  }
  return std::pair{a + t0 * d, a + t1 * d};
}

void refine(const std::function<Point2(double)>& curve, double r0, double r1, const Point2& p0,
            const Point2& p1, double tol, int depth, std::vector<Point2>& out) {
  const double rm = 0.5 * (r0 + r1);
  const Point2 pm = curve(rm);
  const Point2 chord = p1 - p0;
  const double len = chord.norm();
  const double deviation =
      len > 0.0 ? std::abs(chord.x() * (pm - p0).y() - chord.y() * (pm - p0).x()) / len : (pm - p0).norm();
  if (depth > 0 && deviation > tol) {
    refine(curve, r0, rm, p0, pm, tol, depth - 1, out);
    refine(curve, rm, r1, pm, p1, tol, depth - 1, out);
    return;
  }
  out.push_back(p1);
}

}  // namespace

SvgCanvas::SvgCanvas(const Viewport& viewport, double pixels) : viewport_(viewport), pixels_(pixels) {}

void SvgCanvas::add_path(const std::string& d, std::string_view stroke, std::string_view id,
                         double stroke_px, bool dashed) {
  if (d.empty()) return;
  std::string e = "<path id=\"" + std::string(id) + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" +
                  std::string(stroke) + "\" stroke-width=\"" + num(stroke_px) +
                  "\" vector-effect=\"non-scaling-stroke\"";
  if (dashed) e += " stroke-dasharray=\"6 4\"";
  e += "/>";
  elements_.push_back(std::move(e));
}

void SvgCanvas::add_point(const Point2& p, std::string_view fill, std::string_view id) {
  const double r = 4.0 * viewport_.width() / pixels_;
  elements_.push_back("<circle id=\"" + std::string(id) + "\" cx=\"" + num(p.x()) + "\" cy=\"" +
                      num(p.y()) + "\" r=\"" + num(r) + "\" fill=\"" + std::string(fill) + "\"/>");
}

std::string SvgCanvas::str() const {
  const double w = pixels_;
  const double h = pixels_ * viewport_.height() / viewport_.width();
  const double sx = w / viewport_.width();
  const double sy = h / viewport_.height();
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<g transform=\"matrix(" + num(sx) + " 0 0 " + num(-sy) + " " + num(-viewport_.xmin * sx) + " " +
         num(viewport_.ymax * sy) + ")\">\n";
  for (const std::string& e : elements_) out += e + "\n";
  out += "</g>\n</svg>\n";
  return out;
}

std::string parabola_path(const Parabola& p, const Viewport& vp) {
  const Point2 center(0.5 * (vp.xmin + vp.xmax), 0.5 * (vp.ymin + vp.ymax));
  const double diag = std::hypot(vp.width(), vp.height());
  // Every boundary point with |r| >= reach lies outside the viewport.
  const double reach = (p.apex() - center).norm() + diag + 1.0;
  const auto curve = [&p](double r) { return p.point_at(r); };

  std::vector<Point2> pts;
  constexpr int pieces = 64;
  pts.push_back(curve(-reach));
  for (int i = 0; i < pieces; ++i) {
    const double r0 = -reach + 2.0 * reach * i / pieces;
    const double r1 = -reach + 2.0 * reach * (i + 1) / pieces;
    refine(curve, r0, r1, curve(r0), curve(r1), 1e-4 * diag, 12, pts);
  }

  std::string d;
  bool open = false;
  Point2 last = Point2::Zero();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto seg = clip(pts[i - 1], pts[i], vp);
    if (!seg) {
      open = false;
      continue;
    }
    if (!open || (seg->first - last).norm() > 1e-12 * diag) {
      d += (d.empty() ? "M" : " M") + pair(seg->first);
    }
    d += " L" + pair(seg->second);
    last = seg->second;
    open = true;
  }
  return d;
}

std::string ellipse_path(const Point2& center, double rx, double ry, double rotation) {
  const Point2 u(std::cos(rotation), std::sin(rotation));
  const Point2 a = center + rx * u;
  const Point2 b = center - rx * u;
  const std::string arc = "A" + num(rx) + "," + num(ry) + " " + num(rotation * 180.0 / std::numbers::pi) + " 1 0 ";
  return "M" + pair(a) + " " + arc + pair(b) + " " + arc + pair(a) + " Z";
}

std::string horocycle_path(const Horocycle& h) {
  // Semi-axis a along the tangent at the ideal point, a^2 along the radius.
  return ellipse_path(h.center(), h.a(), h.a() * h.a(), h.theta() + 0.5 * std::numbers::pi);
}

std::string line_path(const HalfPlane& h, const Viewport& vp) {
  const Point2 base = h.offset * h.normal;
  const Point2 dir(-h.normal.y(), h.normal.x());
  const double reach = base.norm() + std::hypot(vp.width(), vp.height()) +
                       std::hypot(vp.xmin + vp.xmax, vp.ymin + vp.ymax);
  const auto seg = clip(base - reach * dir, base + reach * dir, vp);
  if (!seg) return {};
  return "M" + pair(seg->first) + " L" + pair(seg->second);
}

}  // namespace cx::app
