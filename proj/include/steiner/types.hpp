#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace steiner {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vertex list violates convexity, orientation, or spacing.
class InvalidPolygon : public GeometryError {
 public:
  InvalidPolygon(std::size_t vertex, const std::string& what)
      : GeometryError("vertex " + std::to_string(vertex) + ": " + what), vertex_(vertex) {}
  std::size_t vertex() const { return vertex_; }

 private:
  std::size_t vertex_;
};

class DegenerateBody : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class OriginNotInterior : public GeometryError {
 public:
  OriginNotInterior()
      : GeometryError("origin is not interior to the polygon; ball distance needs the "
                      "polygonal fallback") {}
};

template <typename Scalar>
struct Tolerance {
  // Vertices closer than merge * scale are merged.
  static constexpr Scalar merge = Scalar(1e-12);
  // A turn with cross product at most collinear * scale^2 is dropped.
  static constexpr Scalar collinear = Scalar(1e-12);
  // Default containment slack, relative to scale.
  static constexpr Scalar containment = Scalar(1e-9);
};

template <typename Scalar>
inline Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
inline Scalar wrap_two_pi(Scalar angle) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  Scalar r = std::fmod(angle, two_pi);
  if (r < 0) r += two_pi;
  // fmod of a tiny negative can round up to exactly 2pi
  if (r >= two_pi) r = 0;
  return r;
}

// Unit vector in the plane, held as its counterclockwise angle from +x.
template <typename Scalar>
class Direction {
 public:
  Direction() = default;
  explicit Direction(Scalar angle) : angle_(wrap_two_pi(angle)) {}

  static Direction from_vector(const Point2<Scalar>& v) { return Direction(std::atan2(v.y(), v.x())); }

  Scalar angle() const { return angle_; }
  Point2<Scalar> vector() const { return {std::cos(angle_), std::sin(angle_)}; }
  // u rotated by +pi/2; spans the symmetry line u^perp.
  Direction perp() const { return Direction(angle_ + std::numbers::pi_v<Scalar> / 2); }
  Direction opposite() const { return Direction(angle_ + std::numbers::pi_v<Scalar>); }

  Direction operator+(Scalar delta) const { return Direction(angle_ + delta); }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Scalar angle_ = 0;
};

template <typename Scalar>
Point2<Scalar> bounding_min(const std::vector<Point2<Scalar>>& pts) {
  Point2<Scalar> lo = pts.front();
  for (const auto& p : pts) lo = lo.cwiseMin(p);
  return lo;
}

template <typename Scalar>
Point2<Scalar> bounding_max(const std::vector<Point2<Scalar>>& pts) {
  Point2<Scalar> hi = pts.front();
  for (const auto& p : pts) hi = hi.cwiseMax(p);
  return hi;
}

// Bounding-box diagonal; the length unit for all relative tolerances.
template <typename Scalar>
Scalar bounding_scale(const std::vector<Point2<Scalar>>& pts) {
  if (pts.empty()) return Scalar(0);
  return (bounding_max(pts) - bounding_min(pts)).norm();
}

// Strictly convex polygon with counterclockwise vertices.
//
// The public constructor validates and never alters its input; normalized()
// is the repairing path used after numerical constructions. Both guarantee:
// at least three vertices, consecutive vertices at least merge * scale
// apart, and every turn strictly left by more than collinear * scale^2 with
// total turning 2pi.
template <typename Scalar>
class ConvexPolygon {
 public:
  using Point = Point2<Scalar>;

  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    validate();
    scale_ = bounding_scale(vertices_);
  }

  // Merges near-duplicate vertices and removes collinear (or slightly
  // reflexive) ones until every remaining turn is strictly convex. Net area
  // change is bounded by a single sliver of collinear * scale^2. No vertex
  // moves beyond the larger of the input's origin radius and radius_limit.
  static ConvexPolygon normalized(std::vector<Point> raw, std::optional<Scalar> radius_limit = std::nullopt);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Point edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  Scalar scale() const { return scale_; }

 private:
  struct Trusted {};
  ConvexPolygon(Trusted, std::vector<Point> vertices)
      : vertices_(std::move(vertices)), scale_(bounding_scale(vertices_)) {}

  void validate() const;

  std::vector<Point> vertices_;
  Scalar scale_ = 0;
};

template <typename Scalar>
void ConvexPolygon<Scalar>::validate() const {
  const std::size_t n = vertices_.size();
  if (n < 3) throw InvalidPolygon(n, "a polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i)
    if (!vertices_[i].allFinite()) throw InvalidPolygon(i, "coordinate is not finite");

  const Scalar scale = bounding_scale(vertices_);
  const Scalar merge_tol = Tolerance<Scalar>::merge * scale;
  const Scalar turn_tol = Tolerance<Scalar>::collinear * scale * scale;
  Scalar turning = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = vertices_[(i + n - 1) % n];
    const Point& cur = vertices_[i];
    const Point& next = vertices_[(i + 1) % n];
    if ((next - cur).norm() < merge_tol) throw InvalidPolygon(i, "coincides with the next vertex");
    const Point e0 = cur - prev;
    const Point e1 = next - cur;
    const Scalar c = cross(e0, e1);
    if (c <= turn_tol)
      throw InvalidPolygon(i, c < 0 ? "clockwise turn (vertices must be counterclockwise and convex)"
                                    : "collinear with its neighbours");
    turning += std::atan2(c, e0.dot(e1));
  }
  // All-left turns can still wind twice (a star); require a single revolution.
  if (std::abs(turning - 2 * std::numbers::pi_v<Scalar>) > Scalar(1e-6))
    throw InvalidPolygon(0, "vertex list winds more than once");
}

template <typename Scalar>
ConvexPolygon<Scalar> ConvexPolygon<Scalar>::normalized(std::vector<Point> raw, std::optional<Scalar> radius_limit) {
  const std::size_t n = raw.size();
  if (n < 3) throw DegenerateBody("fewer than 3 vertices");
  const Scalar scale = bounding_scale(raw);
  if (!(scale > 0) || !std::isfinite(scale)) throw DegenerateBody("vertices span no area");
  const Scalar merge_tol = Tolerance<Scalar>::merge * scale;
  const Scalar turn_tol = Tolerance<Scalar>::collinear * scale * scale;
  Scalar norm_limit = 0;
  for (const auto& p : raw) norm_limit = std::max(norm_limit, p.squaredNorm());
  if (radius_limit) norm_limit = std::max(norm_limit, *radius_limit * *radius_limit);

  // Doubly linked ring with a worklist: every change re-examines the
  // neighbours, so one pass reaches the fixed point in O(n).
  std::vector<std::size_t> next(n), prev(n);
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }
  std::vector<std::size_t> work(n);
  for (std::size_t i = 0; i < n; ++i) work[i] = n - 1 - i;
  std::size_t remaining = n;

  auto remove = [&](std::size_t i) {
    alive[i] = 0;
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    --remaining;
    work.push_back(prev[i]);
    work.push_back(next[i]);
  };

  // A near-flat vertex goes either by cutting its corner (loses area) or
  // by merging it with a neighbour at the meeting point of the two outer
  // edge lines (gains area, keeps every edge direction). Picking whichever
  // keeps the running balance nearest zero makes long chains of
  // normalizations area-neutral to within one sliver. Merges never push a
  // vertex past norm_limit.
  Scalar balance = 0;
  struct Merge {
    Point meet;
    Scalar gain;
  };
  // Merge vertices a -> b (consecutive) into the meeting point of lines
  // (before, a) and (b, after).
  auto merge_point = [&](std::size_t before, std::size_t a, std::size_t b, std::size_t after) -> std::optional<Merge> {
    const Point d0 = raw[a] - raw[before];
    const Point d1 = raw[b] - raw[after];
    const Scalar denom = cross<Scalar>(d0, d1);
    if (denom == 0) return std::nullopt;
    const Scalar t = cross<Scalar>(raw[b] - raw[a], d1) / denom;
    const Point meet = raw[a] + t * d0;
    const Scalar s = (meet - raw[b]).dot(d1);
    if (!(t >= 0) || !(s >= 0) || !meet.allFinite()) return std::nullopt;
    if (meet.squaredNorm() > norm_limit) return std::nullopt;
    const Scalar gain = cross<Scalar>(meet - raw[a], raw[b] - raw[a]) / 2;
    if (!(gain >= 0) || gain > turn_tol) return std::nullopt;
    return Merge{meet, gain};
  };

  while (!work.empty() && remaining >= 3) {
    const std::size_t i = work.back();
    work.pop_back();
    if (!alive[i]) continue;
    const Point& cur = raw[i];
    if ((raw[next[i]] - cur).norm() < merge_tol) {
      remove(next[i]);
      work.push_back(i);
      continue;
    }
    const Scalar c = cross<Scalar>(cur - raw[prev[i]], raw[next[i]] - cur);
    if (c > turn_tol) continue;

    const Scalar cut = -c / 2;
    Scalar best = std::abs(balance + cut);
    int choice = 0;  // 0 cut, -1 merge with prev, +1 merge with next
    std::optional<Merge> with_prev, with_next;
    if (c > 0 && remaining >= 5) {
      with_prev = merge_point(prev[prev[i]], prev[i], i, next[i]);
      with_next = merge_point(prev[i], i, next[i], next[next[i]]);
      if (with_prev && std::abs(balance + with_prev->gain) < best) {
        best = std::abs(balance + with_prev->gain);
        choice = -1;
      }
      if (with_next && std::abs(balance + with_next->gain) < best) choice = 1;
    }
    if (choice == 0) {
      balance += cut;
      remove(i);
    } else if (choice == -1) {
      balance += with_prev->gain;
      raw[i] = with_prev->meet;
      remove(prev[i]);
      work.push_back(i);
    } else {
      balance += with_next->gain;
      raw[i] = with_next->meet;
      remove(next[i]);
      work.push_back(i);
    }
  }
  if (remaining < 3) throw DegenerateBody("polygon collapsed below 3 vertices");

  std::size_t start = 0;
  while (!alive[start]) ++start;
  std::vector<Point> out;
  out.reserve(remaining);
  std::size_t i = start;
  do {
    out.push_back(raw[i]);
    i = next[i];
  } while (i != start);
  return ConvexPolygon(Trusted{}, std::move(out));
}

using Directiond = Direction<double>;
using ConvexPolygond = ConvexPolygon<double>;
using Point2d = Point2<double>;

}  // namespace steiner
