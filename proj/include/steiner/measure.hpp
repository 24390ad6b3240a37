#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include <Eigen/Eigenvalues>

#include "steiner/bodies.hpp"
#include "steiner/types.hpp"

namespace steiner {

template <typename Scalar>
Scalar area(const ConvexPolygon<Scalar>& P) {
  // Shoelace about the first vertex keeps the terms small for offset bodies.
  const Point2<Scalar>& o = P[0];
  Scalar twice = 0;
  for (std::size_t i = 1; i + 1 < P.size(); ++i) twice += cross<Scalar>(P[i] - o, P[i + 1] - o);
  return twice / 2;
}

// r_K = max |x| over the body; attained at a vertex.
template <typename Scalar>
Scalar origin_radius(const ConvexPolygon<Scalar>& P) {
  Scalar r2 = 0;
  for (const auto& v : P.vertices()) r2 = std::max(r2, v.squaredNorm());
  return std::sqrt(r2);
}

// Largest vertex distance by rotating calipers over antipodal pairs.
template <typename Scalar>
Scalar diameter(const ConvexPolygon<Scalar>& P) {
  const std::size_t n = P.size();
  Scalar best = 0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2<Scalar> e = P.edge(i);
    // advance j while its outgoing edge still moves away from edge i
    for (std::size_t guard = 0; guard < n && cross<Scalar>(e, P.edge(j)) > 0; ++guard) j = (j + 1) % n;
    best = std::max({best, (P.vertex(i) - P.vertex(j)).squaredNorm(), (P.vertex(i + 1) - P.vertex(j)).squaredNorm()});
  }
  return std::sqrt(best);
}

template <typename Scalar>
Scalar support(const ConvexPolygon<Scalar>& P, const Direction<Scalar>& u) {
  const Point2<Scalar> d = u.vector();
  Scalar h = -std::numeric_limits<Scalar>::infinity();
  for (const auto& v : P.vertices()) h = std::max(h, v.dot(d));
  return h;
}

template <typename Scalar>
Scalar segment_distance(const Point2<Scalar>& x, const Point2<Scalar>& a, const Point2<Scalar>& b) {
  const Point2<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  Scalar t = len2 > 0 ? (x - a).dot(ab) / len2 : Scalar(0);
  t = std::clamp(t, Scalar(0), Scalar(1));
  return (a + t * ab - x).norm();
}

// Euclidean distance from x to the polygon (0 inside).
template <typename Scalar>
Scalar point_distance(const ConvexPolygon<Scalar>& P, const Point2<Scalar>& x) {
  const std::size_t n = P.size();
  bool inside = true;
  for (std::size_t i = 0; i < n && inside; ++i)
    if (cross<Scalar>(P.edge(i), x - P[i]) < 0) inside = false;
  if (inside) return 0;
  Scalar d = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < n; ++i) d = std::min(d, segment_distance<Scalar>(x, P[i], P.vertex(i + 1)));
  return d;
}

// sup over P of the distance to Q. Distance to a convex set is convex, so
// the sup sits at a vertex of P.
template <typename Scalar>
Scalar directed_hausdorff(const ConvexPolygon<Scalar>& P, const ConvexPolygon<Scalar>& Q) {
  Scalar d = 0;
  for (const auto& v : P.vertices()) d = std::max(d, point_distance(Q, v));
  return d;
}

template <typename Scalar>
Scalar hausdorff(const ConvexPolygon<Scalar>& P, const ConvexPolygon<Scalar>& Q) {
  return std::max(directed_hausdorff(P, Q), directed_hausdorff(Q, P));
}

// Smallest distance from the origin to an edge line; negative or zero when
// the origin is not strictly inside.
template <typename Scalar>
Scalar origin_inradius(const ConvexPolygon<Scalar>& P) {
  Scalar d = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < P.size(); ++i) {
    const Point2<Scalar> e = P.edge(i);
    d = std::min(d, cross<Scalar>(e, -P[i]) / e.norm());
  }
  return d;
}

// Hausdorff distance to a centered ball via support functions:
// sup_u |h_P(u) - r| = max(r_P - r, r - min_u h_P(u)). Throws
// OriginNotInterior when min_u h_P(u) is not the edge-line distance.
template <typename Scalar>
Scalar hausdorff_to_ball(const ConvexPolygon<Scalar>& P, const CenteredBall<Scalar>& B) {
  const Scalar inner = origin_inradius(P);
  if (!(inner > 0)) throw OriginNotInterior();
  return std::max({origin_radius(P) - B.radius, B.radius - inner, Scalar(0)});
}

// Length of the intersection of the line with P.
template <typename Scalar>
Scalar chord_length(const ConvexPolygon<Scalar>& P, const Line<Scalar>& line) {
  const Point2<Scalar> d = line.direction.vector();
  Scalar lo = -std::numeric_limits<Scalar>::infinity();
  Scalar hi = std::numeric_limits<Scalar>::infinity();
  for (std::size_t i = 0; i < P.size(); ++i) {
    // inside half-plane: cross(e, x - v) >= 0 with x = p + t d
    const Point2<Scalar> e = P.edge(i);
    const Scalar c0 = cross<Scalar>(e, line.point - P[i]);
    const Scalar c1 = cross<Scalar>(e, d);
    if (c1 == 0) {
      if (c0 < 0) return 0;
    } else if (c1 > 0) {
      lo = std::max(lo, -c0 / c1);
    } else {
      hi = std::min(hi, -c0 / c1);
    }
  }
  return std::max(Scalar(0), hi - lo);
}

// Every vertex of Q within tol of P.
template <typename Scalar>
bool contains(const ConvexPolygon<Scalar>& P, const ConvexPolygon<Scalar>& Q, Scalar tol) {
  for (const auto& v : Q.vertices())
    if (point_distance(P, v) > tol) return false;
  return true;
}

template <typename Scalar>
bool contains(const ConvexPolygon<Scalar>& P, const ConvexPolygon<Scalar>& Q) {
  return contains(P, Q, Tolerance<Scalar>::containment * std::max(P.scale(), Q.scale()));
}

// Regular n-gon inscribed in the ball, first vertex on +x.
template <typename Scalar>
ConvexPolygon<Scalar> polygonize(const CenteredBall<Scalar>& B, std::size_t n) {
  if (n < 3) throw DegenerateBody("polygonization needs at least 3 vertices");
  if (!(B.radius > 0)) throw DegenerateBody("cannot polygonize a ball of radius 0");
  std::vector<Point2<Scalar>> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar t = 2 * std::numbers::pi_v<Scalar> * Scalar(k) / Scalar(n);
    v[k] = B.radius * Point2<Scalar>(std::cos(t), std::sin(t));
  }
  return ConvexPolygon<Scalar>::normalized(std::move(v));
}

// Affine image of the regular n-gon: inscribed, vertices at equal
// parameter steps, first vertex on the major axis.
template <typename Scalar>
ConvexPolygon<Scalar> polygonize(const CenteredEllipse<Scalar>& E, std::size_t n) {
  if (n < 3) throw DegenerateBody("polygonization needs at least 3 vertices");
  Eigen::SelfAdjointEigenSolver<Matrix2<Scalar>> eig(E.form());
  // ascending eigenvalues: column 0 is the major axis
  const Matrix2<Scalar> axes = eig.eigenvectors();
  const Scalar major = 1 / std::sqrt(eig.eigenvalues()(0));
  const Scalar minor = 1 / std::sqrt(eig.eigenvalues()(1));
  Point2<Scalar> e0 = axes.col(0), e1 = axes.col(1);
  if (cross<Scalar>(e0, e1) < 0) e1 = -e1;
  std::vector<Point2<Scalar>> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar t = 2 * std::numbers::pi_v<Scalar> * Scalar(k) / Scalar(n);
    v[k] = major * std::cos(t) * e0 + minor * std::sin(t) * e1;
  }
  return ConvexPolygon<Scalar>::normalized(std::move(v));
}

// Rhombus of the given area whose long diagonal is the segment.
template <typename Scalar>
ConvexPolygon<Scalar> polygonize(const CenteredSegment<Scalar>& S, Scalar area) {
  if (!(S.length > 0)) throw DegenerateBody("cannot thicken a zero-length segment");
  if (!(area > 0)) throw DegenerateBody("rhombus area must be positive");
  const Point2<Scalar> along = S.direction.vector() * (S.length / 2);
  const Point2<Scalar> across = S.direction.perp().vector() * (area / S.length);
  return ConvexPolygon<Scalar>({along, across, -along, -across});
}

// Andrew's monotone chain; collinear points are dropped.
template <typename Scalar>
ConvexPolygon<Scalar> convex_hull(std::vector<Point2<Scalar>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  if (pts.size() < 3) throw DegenerateBody("hull needs at least 3 points");
  std::vector<Point2<Scalar>> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross<Scalar>(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross<Scalar>(hull[k - 1] - hull[k - 2], pts[i - 1] - hull[k - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return ConvexPolygon<Scalar>::normalized(std::move(hull));
}

// Inner approximation with at most max_vertices vertices: repeatedly drops
// the vertex whose removal loses the least area. Dropping vertices of a
// convex polygon keeps it convex.
template <typename Scalar>
ConvexPolygon<Scalar> decimate(const ConvexPolygon<Scalar>& P, std::size_t max_vertices) {
  const std::size_t n = P.size();
  if (n <= max_vertices) return P;
  if (max_vertices < 3) throw DegenerateBody("decimation target below 3 vertices");

  std::vector<std::size_t> next(n), prev(n), version(n, 0);
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    next[i] = (i + 1) % n;
    prev[i] = (i + n - 1) % n;
  }
  auto loss = [&](std::size_t i) { return cross<Scalar>(P[i] - P[prev[i]], P[next[i]] - P[i]); };

  struct Entry {
    Scalar loss;
    std::size_t index;
    std::size_t version;
    bool operator>(const Entry& o) const { return loss > o.loss || (loss == o.loss && index > o.index); }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (std::size_t i = 0; i < n; ++i) heap.push({loss(i), i, 0});

  std::size_t remaining = n;
  while (remaining > max_vertices) {
    const Entry top = heap.top();
    heap.pop();
    if (!alive[top.index] || top.version != version[top.index]) continue;
    const std::size_t i = top.index;
    alive[i] = 0;
    next[prev[i]] = next[i];
    prev[next[i]] = prev[i];
    --remaining;
    for (std::size_t j : {prev[i], next[i]}) heap.push({loss(j), j, ++version[j]});
  }
  std::vector<Point2<Scalar>> out;
  out.reserve(remaining);
  std::size_t start = 0;
  while (!alive[start]) ++start;
  std::size_t i = start;
  do {
    out.push_back(P[i]);
    i = next[i];
  } while (i != start);
  return ConvexPolygon<Scalar>::normalized(std::move(out));
}

// hausdorff_to_ball when the origin is interior, otherwise the vertex-exact
// distance to an inscribed n-gon of the ball.
template <typename Scalar>
Scalar ball_distance(const ConvexPolygon<Scalar>& P, const CenteredBall<Scalar>& B, std::size_t fallback_vertices = 4096) {
  if (origin_inradius(P) > 0) return hausdorff_to_ball(P, B);
  return hausdorff(P, polygonize(B, fallback_vertices));
}

}  // namespace steiner
