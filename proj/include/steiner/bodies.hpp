#pragma once

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "steiner/types.hpp"

namespace steiner {

// {t * direction : |t| <= length / 2}
template <typename Scalar>
struct CenteredSegment {
  Direction<Scalar> direction;
  Scalar length = 0;

  CenteredSegment() = default;
  CenteredSegment(Direction<Scalar> dir, Scalar len) : direction(dir), length(len) {
    if (!(len >= 0)) throw DegenerateBody("segment length must be nonnegative");
  }

  Point2<Scalar> endpoint() const { return direction.vector() * (length / 2); }
};

template <typename Scalar>
struct CenteredBall {
  Scalar radius = 0;

  CenteredBall() = default;
  explicit CenteredBall(Scalar r) : radius(r) {
    if (!(r >= 0)) throw DegenerateBody("ball radius must be nonnegative");
  }

  Scalar area() const { return std::numbers::pi_v<Scalar> * radius * radius; }
};

// Radius of the centered disc with the given area.
template <typename Scalar>
Scalar volume_radius(Scalar area) {
  return std::sqrt(area / std::numbers::pi_v<Scalar>);
}

template <typename Scalar>
struct Line {
  Point2<Scalar> point = Point2<Scalar>::Zero();
  Direction<Scalar> direction;
};

// {x : x^T M x <= 1} with M symmetric positive definite, M = [[A, B], [B, C]].
template <typename Scalar>
class CenteredEllipse {
 public:
  using Matrix = Matrix2<Scalar>;

  explicit CenteredEllipse(const Matrix& form) : form_((form + form.transpose()) / 2) {
    if (!(form_(0, 0) > 0) || !(determinant() > 0))
      throw DegenerateBody("ellipse form must be positive definite");
  }

  CenteredEllipse(Scalar a, Scalar b, Scalar c) : CenteredEllipse((Matrix() << a, b, b, c).finished()) {}

  // Semi-axis `major` along `orientation`, `minor` perpendicular to it.
  static CenteredEllipse from_axes(Scalar major, Scalar minor, Scalar orientation) {
    if (!(major > 0) || !(minor > 0)) throw DegenerateBody("semi-axes must be positive");
    Matrix rot;
    rot << std::cos(orientation), -std::sin(orientation), std::sin(orientation), std::cos(orientation);
    const Matrix diag = Eigen::Vector<Scalar, 2>(1 / (major * major), 1 / (minor * minor)).asDiagonal();
    return CenteredEllipse(rot * diag * rot.transpose());
  }

  static CenteredEllipse circle(Scalar radius) { return from_axes(radius, radius, 0); }

  const Matrix& form() const { return form_; }
  Scalar A() const { return form_(0, 0); }
  Scalar B() const { return form_(0, 1); }
  Scalar C() const { return form_(1, 1); }
  Scalar determinant() const { return A() * C() - B() * B(); }
  Scalar area() const { return std::numbers::pi_v<Scalar> / std::sqrt(determinant()); }

 private:
  Matrix form_;
};

using CenteredSegmentd = CenteredSegment<double>;
using CenteredBalld = CenteredBall<double>;
using CenteredEllipsed = CenteredEllipse<double>;
using Lined = Line<double>;

}  // namespace steiner
