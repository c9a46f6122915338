#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/horocycle.hpp"
#include "core/max_parabola.hpp"
#include "core/parabola.hpp"

namespace cx::app {

struct Viewport {
  double xmin = -4.0;
  double xmax = 4.0;
  double ymin = -4.0;
  double ymax = 4.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
};

/// SVG 1.1 document in world coordinates (y up). Every conic and line is one
/// <path>; marked points are <circle> elements.
class SvgCanvas {
 public:
  explicit SvgCanvas(const Viewport& viewport, double pixels = 600.0);

  void add_path(const std::string& d, std::string_view stroke, std::string_view id,
                double stroke_px = 1.5, bool dashed = false);
  void add_point(const Point2& p, std::string_view fill, std::string_view id);
  std::string str() const;

 private:
  Viewport viewport_;
  double pixels_;
  std::vector<std::string> elements_;
};

/// Polyline of the parabola clipped to the viewport; empty if it misses it.
std::string parabola_path(const Parabola& p, const Viewport& viewport);
std::string ellipse_path(const Point2& center, double rx, double ry, double rotation);
std::string horocycle_path(const Horocycle& h);
std::string line_path(const HalfPlane& h, const Viewport& viewport);

}  // namespace cx::app
