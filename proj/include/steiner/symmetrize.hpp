#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "steiner/bodies.hpp"
#include "steiner/measure.hpp"
#include "steiner/types.hpp"

namespace steiner {

namespace detail {

// Orthonormal frame with u as the vertical axis: x runs along u^perp
// (u rotated by -pi/2), y along u. Rows of a proper rotation.
template <typename Scalar>
struct SymmetryFrame {
  Point2<Scalar> across;  // x axis
  Point2<Scalar> along;   // y axis (= u)

  explicit SymmetryFrame(const Direction<Scalar>& u) {
    along = u.vector();
    across = Point2<Scalar>(along.y(), -along.x());
  }
  Point2<Scalar> to_frame(const Point2<Scalar>& p) const { return {across.dot(p), along.dot(p)}; }
  Point2<Scalar> from_frame(const Point2<Scalar>& q) const { return q.x() * across + q.y() * along; }
  Matrix2<Scalar> rotation() const {
    Matrix2<Scalar> r;
    r.row(0) = across.transpose();
    r.row(1) = along.transpose();
    return r;
  }
};

// Piecewise-linear y(x) along a chain with nondecreasing x, queried at
// ascending x with a persistent cursor.
template <typename Scalar>
class ChainCursor {
 public:
  explicit ChainCursor(const std::vector<Point2<Scalar>>& chain) : chain_(chain) {}

  Scalar at(Scalar x) {
    if (chain_.size() == 1) return chain_[0].y();
    while (k_ + 2 < chain_.size() && chain_[k_ + 1].x() < x) ++k_;
    const auto& a = chain_[k_];
    const auto& b = chain_[k_ + 1];
    const Scalar dx = b.x() - a.x();
    if (!(dx > 0)) return x <= a.x() ? a.y() : b.y();
    const Scalar t = std::clamp((x - a.x()) / dx, Scalar(0), Scalar(1));
    return a.y() + t * (b.y() - a.y());
  }

 private:
  const std::vector<Point2<Scalar>>& chain_;
  std::size_t k_ = 0;
};

}  // namespace detail

// Steiner symmetral of a convex polygon in direction u.
//
// In the frame where u is vertical, the chord length w(x) is concave and
// piecewise linear with breakpoints at vertex abscissae; the symmetral is
// the polygon through (x_j, +-w(x_j)/2). Abscissae closer than
// merge * scale are treated as one breakpoint carrying the largest width.
template <typename Scalar>
ConvexPolygon<Scalar> steiner_symmetral(const ConvexPolygon<Scalar>& P, const Direction<Scalar>& u) {
  using Point = Point2<Scalar>;
  const detail::SymmetryFrame<Scalar> frame(u);
  const std::size_t n = P.size();
  std::vector<Point> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = frame.to_frame(P[i]);

  auto left_low = [](const Point& a, const Point& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); };
  auto right_low = [](const Point& a, const Point& b) { return a.x() > b.x() || (a.x() == b.x() && a.y() < b.y()); };
  auto right_high = [](const Point& a, const Point& b) { return a.x() > b.x() || (a.x() == b.x() && a.y() > b.y()); };
  auto left_high = [](const Point& a, const Point& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() > b.y()); };
  auto extreme = [&](auto better) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (better(q[i], q[best])) best = i;
    return best;
  };
  const std::size_t lower_begin = extreme(left_low), lower_end = extreme(right_low);
  const std::size_t upper_begin = extreme(right_high), upper_end = extreme(left_high);

  // Counterclockwise from the lower-left vertex walks the lower chain.
  auto walk = [&](std::size_t from, std::size_t to) {
    std::vector<Point> chain;
    for (std::size_t i = from;; i = (i + 1) % n) {
      chain.push_back(q[i]);
      if (i == to) break;
    }
    return chain;
  };
  std::vector<Point> lower = walk(lower_begin, lower_end);
  std::vector<Point> upper = walk(upper_begin, upper_end);
  std::reverse(upper.begin(), upper.end());
  // Rounding can nudge a near-vertical edge backwards; keep x monotone.
  for (auto* chain : {&lower, &upper})
    for (std::size_t i = 1; i < chain->size(); ++i) (*chain)[i].x() = std::max((*chain)[i].x(), (*chain)[i - 1].x());

  const Scalar x_min = q[lower_begin].x();
  const Scalar x_max = q[lower_end].x();
  std::vector<Scalar> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = std::clamp(q[i].x(), x_min, x_max);
  std::sort(xs.begin(), xs.end());

  const Scalar merge_tol = Tolerance<Scalar>::merge * P.scale();
  detail::ChainCursor<Scalar> lo(lower), hi(upper);
  std::vector<Scalar> bx, bw;
  bx.reserve(n);
  bw.reserve(n);
  for (std::size_t i = 0; i < n;) {
    const Scalar cluster_start = xs[i];
    Scalar best_x = xs[i];
    Scalar best_w = -1;
    for (; i < n && xs[i] - cluster_start <= merge_tol; ++i) {
      const Scalar w = hi.at(xs[i]) - lo.at(xs[i]);
      if (w > best_w) {
        best_w = w;
        best_x = xs[i];
      }
    }
    bx.push_back(best_x);
    bw.push_back(std::max(best_w, Scalar(0)));
  }

  const std::size_t m = bx.size();
  std::vector<Point> out;
  out.reserve(2 * m);
  for (std::size_t j = 0; j < m; ++j) out.push_back(frame.from_frame(Point(bx[j], -bw[j] / 2)));
  for (std::size_t j = m; j-- > 0;) out.push_back(frame.from_frame(Point(bx[j], bw[j] / 2)));
  ConvexPolygon<Scalar> sym = ConvexPolygon<Scalar>::normalized(std::move(out), origin_radius(P));

  // Remove the normalization residual with a scaling about the origin,
  // which keeps the symmetry line fixed.
  const Scalar target = area(P), got = area(sym);
  if (got == target) return sym;
  const Scalar s = std::sqrt(target / got);
  std::vector<Point> scaled = sym.vertices();
  for (auto& v : scaled) v *= s;
  return ConvexPolygon<Scalar>(std::move(scaled));
}

// A centered segment symmetrizes to its orthogonal projection on u^perp,
// except when it is parallel to u, where every chord is already centered.
template <typename Scalar>
CenteredSegment<Scalar> steiner_symmetral(const CenteredSegment<Scalar>& S, const Direction<Scalar>& u) {
  const Point2<Scalar> d = S.direction.vector();
  const Point2<Scalar> axis = u.perp().vector();
  const Scalar projected = std::abs(d.dot(axis));
  if (std::abs(cross<Scalar>(d, u.vector())) <= Scalar(1e-15)) return S;
  return CenteredSegment<Scalar>(u.perp(), S.length * projected);
}

// In the u-frame the chord over x is centered at y = -Bx/C; the shear that
// recenters it maps the form (A, B, C) to (A - B^2/C, 0, C).
template <typename Scalar>
CenteredEllipse<Scalar> steiner_symmetral(const CenteredEllipse<Scalar>& E, const Direction<Scalar>& u) {
  const Matrix2<Scalar> rot = detail::SymmetryFrame<Scalar>(u).rotation();
  const Matrix2<Scalar> local = rot * E.form() * rot.transpose();
  const Scalar a = local(0, 0), b = local(0, 1), c = local(1, 1);
  Matrix2<Scalar> sym = Matrix2<Scalar>::Zero();
  sym(0, 0) = a - b * b / c;
  sym(1, 1) = c;
  CenteredEllipse<Scalar> out(rot.transpose() * sym * rot);
  assert(std::abs(out.determinant() - E.determinant()) <= Scalar(1e-9) * E.determinant());
  return out;
}

template <typename Scalar>
struct EllipseAxes {
  Scalar semi_major;
  Scalar semi_minor;
  Scalar orientation;  // major-axis angle in [0, pi); 0 for a circle
};

template <typename Scalar>
EllipseAxes<Scalar> ellipse_axes(const CenteredEllipse<Scalar>& E) {
  Eigen::SelfAdjointEigenSolver<Matrix2<Scalar>> eig(E.form());
  const auto& lambda = eig.eigenvalues();
  EllipseAxes<Scalar> axes{1 / std::sqrt(lambda(0)), 1 / std::sqrt(lambda(1)), 0};
  if (lambda(1) - lambda(0) > Scalar(1e-12) * lambda(1)) {
    const Point2<Scalar> v = eig.eigenvectors().col(0);
    Scalar phi = std::atan2(v.y(), v.x());
    if (phi < 0) phi += std::numbers::pi_v<Scalar>;
    if (phi >= std::numbers::pi_v<Scalar>) phi -= std::numbers::pi_v<Scalar>;
    axes.orientation = phi;
  }
  return axes;
}

}  // namespace steiner
