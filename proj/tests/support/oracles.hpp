#pragma once

// Slow, independent reference computations. None of these call into the
// library's measurement code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "steiner/types.hpp"

namespace steiner::oracle {

// Inside or on the boundary, from the sign of every edge cross product.
inline bool inside(const std::vector<Point2d>& v, const Point2d& x, double slack = 0) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2d a = v[i], b = v[(i + 1) % v.size()];
    const Point2d e = b - a;
    if ((e.x() * (x.y() - a.y()) - e.y() * (x.x() - a.x())) / e.norm() < -slack) return false;
  }
  return true;
}

struct Estimate {
  double value;
  double standard_error;
};

inline Estimate monte_carlo_area(const std::vector<Point2d>& v, std::size_t samples, std::uint64_t seed) {
  Point2d lo = v.front(), hi = v.front();
  for (const auto& p : v) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(lo.x(), hi.x()), uy(lo.y(), hi.y());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i)
    if (inside(v, Point2d(ux(rng), uy(rng)))) ++hits;
  const double box = (hi - lo).prod();
  const double p = static_cast<double>(hits) / samples;
  return {box * p, box * std::sqrt(p * (1 - p) / samples)};
}

inline double brute_diameter(const std::vector<Point2d>& v) {
  double d = 0;
  for (const auto& a : v)
    for (const auto& b : v) d = std::max(d, (a - b).norm());
  return d;
}

// Points spaced at most `step` apart along the boundary, vertices included.
inline std::vector<Point2d> boundary_samples(const std::vector<Point2d>& v, double step) {
  std::vector<Point2d> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2d a = v[i], b = v[(i + 1) % v.size()];
    const auto k = static_cast<std::size_t>(std::ceil((b - a).norm() / step));
    for (std::size_t j = 0; j < std::max<std::size_t>(k, 1); ++j) out.push_back(a + (b - a) * (double(j) / k));
  }
  return out;
}

// Hausdorff distance between the two sampled boundaries; within `step` of
// the true distance between the polygons' boundaries.
inline double sampled_hausdorff(const std::vector<Point2d>& p, const std::vector<Point2d>& q, double step) {
  const auto sp = boundary_samples(p, step), sq = boundary_samples(q, step);
  auto directed = [](const std::vector<Point2d>& from, const std::vector<Point2d>& to, const std::vector<Point2d>& body) {
    double worst = 0;
    for (const auto& x : from) {
      if (inside(body, x)) continue;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : to) best = std::min(best, (x - y).squaredNorm());
      worst = std::max(worst, std::sqrt(best));
    }
    return worst;
  };
  return std::max(directed(sp, sq, q), directed(sq, sp, p));
}

// Length of {t : point + t * dir inside} by a fine scan over [-reach, reach].
inline double scan_chord(const std::vector<Point2d>& v, const Point2d& point, const Point2d& dir, double reach,
                         std::size_t steps) {
  const double dt = 2 * reach / steps;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < steps; ++i)
    if (inside(v, point + dir * (-reach + (i + 0.5) * dt))) ++hits;
  return hits * dt;
}

inline std::vector<std::uint64_t> trial_division_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Mirror image across the line through the origin orthogonal to u.
inline std::vector<Point2d> reflect_across_perp(const std::vector<Point2d>& v, const Point2d& u) {
  std::vector<Point2d> out;
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(*it - 2 * it->dot(u) * u);
  return out;
}

}  // namespace steiner::oracle
