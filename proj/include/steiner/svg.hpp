#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steiner/types.hpp"

namespace steiner {

// World-space window shared by every frame of one run.
struct Viewport {
  Point2d min;
  Point2d max;

  // Square window around the body and the centered disc of radius
  // ball_radius, with a margin.
  static Viewport around(const ConvexPolygond& body, double ball_radius, double margin = 0.1);
};

struct SvgLayer {
  const ConvexPolygond* polygon = nullptr;
  std::string stroke;
  std::string fill;
};

// Polygons, the equal-area centered circle, and the symmetry line u^perp
// when a direction is given.
std::string render_svg(const Viewport& view, const std::vector<SvgLayer>& layers, double ball_radius,
                       std::optional<Directiond> direction, const std::string& caption = {});

}  // namespace steiner
