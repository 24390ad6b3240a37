#include "steiner/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace steiner {

namespace {

constexpr double kPixels = 600;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

Viewport Viewport::around(const ConvexPolygond& body, double ball_radius, double margin) {
  Point2d lo = bounding_min(body.vertices()).cwiseMin(Point2d::Constant(-ball_radius));
  Point2d hi = bounding_max(body.vertices()).cwiseMax(Point2d::Constant(ball_radius));
  // Centered square: symmetrals rotate, so leave room in every direction.
  const double half = std::max({lo.cwiseAbs().maxCoeff(), hi.cwiseAbs().maxCoeff(), 1e-9}) * (1 + margin);
  return {Point2d(-half, -half), Point2d(half, half)};
}

std::string render_svg(const Viewport& view, const std::vector<SvgLayer>& layers, double ball_radius,
                       std::optional<Directiond> direction, const std::string& caption) {
  const Point2d span = view.max - view.min;
  const double scale = kPixels / std::max(span.x(), span.y());
  auto px = [&](const Point2d& p) { return num((p.x() - view.min.x()) * scale) + "," + num((view.max.y() - p.y()) * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(span.x() * scale) << "\" height=\""
      << num(span.y() * scale) << "\" viewBox=\"0 0 " << num(span.x() * scale) << " " << num(span.y() * scale)
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<circle cx=\"" << num(-view.min.x() * scale) << "\" cy=\"" << num(view.max.y() * scale) << "\" r=\""
      << num(ball_radius * scale) << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& layer : layers) {
    if (!layer.polygon) continue;
    out << "<polygon points=\"";
    for (std::size_t i = 0; i < layer.polygon->size(); ++i) out << (i ? " " : "") << px((*layer.polygon)[i]);
    out << "\" fill=\"" << (layer.fill.empty() ? "none" : layer.fill) << "\" stroke=\"" << layer.stroke
        << "\" stroke-width=\"1.5\"/>\n";
  }
  if (direction) {
    const Point2d axis = direction->perp().vector() * span.norm();
    out << "<line x1=\"" << num((-axis.x() - view.min.x()) * scale) << "\" y1=\"" << num((view.max.y() + axis.y()) * scale)
        << "\" x2=\"" << num((axis.x() - view.min.x()) * scale) << "\" y2=\"" << num((view.max.y() - axis.y()) * scale)
        << "\" stroke=\"#c33\" stroke-width=\"1\"/>\n";
  }
  if (!caption.empty()) out << "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"13\">" << caption << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace steiner
