#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steiner/measure.hpp"
#include "steiner/symmetrize.hpp"
#include "support/oracles.hpp"
#include "support/random_bodies.hpp"

using namespace steiner;
using std::numbers::pi;

TEST_SUITE("symmetrize") {

TEST_CASE("symmetric square is a fixed point") {
  const ConvexPolygond square({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  const ConvexPolygond S = steiner_symmetral(square, Directiond(pi / 2));
  CHECK(hausdorff(S, square) <= 1e-15);
  CHECK(S.size() == 4);
}

TEST_CASE("triangle width interpolates linearly") {
  const ConvexPolygond tri({{0, -1}, {1, -1}, {0, 1}});
  const ConvexPolygond S = steiner_symmetral(tri, Directiond(pi / 2));
  const ConvexPolygond expected({{0, -1}, {1, 0}, {0, 1}});
  CHECK(S.size() == 3);
  CHECK(hausdorff(S, expected) <= 1e-15);
}

TEST_CASE("vertical end edges stay as two vertices") {
  const ConvexPolygond rect({{0, 0}, {2, 0}, {2, 1}, {0, 1}});
  const ConvexPolygond S = steiner_symmetral(rect, Directiond(pi / 2));
  CHECK(S.size() == 4);
  CHECK(hausdorff(S, ConvexPolygond({{0, -0.5}, {2, -0.5}, {2, 0.5}, {0, 0.5}})) <= 1e-15);
}

TEST_CASE("random polygon invariants") {
  testing::Rng rng(20);
  for (int trial = 0; trial < 300; ++trial) {
    const ConvexPolygond P = testing::random_body(rng);
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    const ConvexPolygond S = steiner_symmetral(P, u);
    const double scale = P.scale();

    CHECK(std::abs(area(S) - area(P)) <= 1e-9 * area(P));
    const ConvexPolygond mirror(oracle::reflect_across_perp(S.vertices(), u.vector()));
    CHECK(hausdorff(S, mirror) <= 1e-9 * scale);
    CHECK(hausdorff(steiner_symmetral(S, u), S) <= 1e-9 * scale);
    CHECK(diameter(S) <= diameter(P) + 1e-9);
    CHECK(origin_radius(S) <= origin_radius(P) + 1e-9);
    // u and -u give the same symmetral
    CHECK(hausdorff(steiner_symmetral(P, u.opposite()), S) <= 1e-9 * scale);
  }
}

TEST_CASE("chords parallel to u keep their length") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexPolygond P = testing::random_body(rng, 24);
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    const ConvexPolygond S = steiner_symmetral(P, u);
    const Point2d across = u.perp().vector();
    const double lo = -support(P, u.perp().opposite()), hi = support(P, u.perp());
    for (int k = 1; k < 10; ++k) {
      const double s = lo + (hi - lo) * k / 10.0;
      const double before = chord_length(P, Lined{s * across, u});
      const double after = chord_length(S, Lined{s * across, u});
      CHECK(after == doctest::Approx(before).epsilon(1e-9).scale(P.scale()));
      // centered on u^perp
      const Point2d base = s * across, up = u.vector();
      const double margin = 1e-7 * P.scale(), h = after / 2;
      if (h > margin) {
        CHECK(oracle::inside(S.vertices(), base + (h - margin) * up));
        CHECK(oracle::inside(S.vertices(), base - (h - margin) * up));
      }
      CHECK_FALSE(oracle::inside(S.vertices(), base + (h + margin) * up));
      CHECK_FALSE(oracle::inside(S.vertices(), base - (h + margin) * up));
    }
  }
}

TEST_CASE("monotone under inclusion") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pair = testing::random_nested_pair(rng);
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    const ConvexPolygond outer = steiner_symmetral(pair.outer, u);
    const ConvexPolygond inner = steiner_symmetral(pair.inner, u);
    CHECK(contains(outer, inner, 1e-9 * pair.outer.scale()));
  }
}

TEST_CASE("distance to a ball never grows") {
  testing::Rng rng(23);
  int checked = 0;
  while (checked < 200) {
    const ConvexPolygond P = testing::random_polygon(rng, 40, 0.1);
    const CenteredBalld B(volume_radius(area(P)));
    if (!(origin_inradius(P) > 0)) continue;
    const double before = hausdorff_to_ball(P, B);
    if (!(before < B.radius)) continue;
    const ConvexPolygond S = steiner_symmetral(P, Directiond(testing::uniform(rng, 0, 2 * pi)));
    CHECK(hausdorff_to_ball(S, B) <= before + 1e-9);
    ++checked;
  }
}

TEST_CASE("segment symmetral") {
  const CenteredSegmentd vertical(Directiond(pi / 2), 1.0);
  const Directiond u(std::sqrt(2.0) / 2);
  const CenteredSegmentd s = steiner_symmetral(vertical, u);
  CHECK(s.length == doctest::Approx(0.76024459707563).epsilon(1e-12));
  CHECK(s.direction.angle() == doctest::Approx(u.perp().angle()));

  // already on u^perp
  const CenteredSegmentd flat(Directiond(0), 2.0);
  CHECK(steiner_symmetral(flat, Directiond(pi / 2)).length == doctest::Approx(2.0));
  // parallel to u
  const CenteredSegmentd along = steiner_symmetral(vertical, Directiond(pi / 2));
  CHECK(along.length == 1.0);
  CHECK(along.direction == vertical.direction);
}

TEST_CASE("cigar long diagonal follows the segment symmetral") {
  const CenteredSegmentd segment(Directiond(pi / 2), 1.0);
  ConvexPolygond body = polygonize(segment, 0.1);
  CenteredSegmentd ell = segment;
  testing::Rng rng(24);
  for (int step = 0; step < 20; ++step) {
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    body = steiner_symmetral(body, u);
    ell = steiner_symmetral(ell, u);
    CHECK(contains(body, polygonize(ell, 1e-9 * ell.length * ell.length)));
    CHECK(diameter(body) >= ell.length - 1e-9);
  }
  // one step on the rhombus itself is exact: its long diagonal projects
  const Directiond u(1.0);
  const ConvexPolygond once = steiner_symmetral(polygonize(segment, 0.1), u);
  CHECK(support(once, u.perp()) * 2 == doctest::Approx(steiner_symmetral(segment, u).length).epsilon(1e-9));
}

TEST_CASE("ellipse symmetral") {
  const CenteredEllipsed aligned = CenteredEllipsed::from_axes(3, 1, 0);
  const CenteredEllipsed same = steiner_symmetral(aligned, Directiond(pi / 2));
  CHECK((same.form() - aligned.form()).norm() <= 1e-15);

  const CenteredEllipsed circle = CenteredEllipsed::circle(2);
  CHECK((steiner_symmetral(circle, Directiond(0.7)).form() - circle.form()).norm() <= 1e-15);

  testing::Rng rng(25);
  const CenteredEllipsed tilted = CenteredEllipsed::from_axes(3, 1, 0.3);
  const ConvexPolygond poly = polygonize(tilted, 4096);
  for (int trial = 0; trial < 10; ++trial) {
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    const CenteredEllipsed E = steiner_symmetral(tilted, u);
    CHECK(std::abs(E.determinant() - tilted.determinant()) <= 1e-9 * tilted.determinant());
    // off-diagonal vanishes in the u-frame
    const Point2d a = u.perp().vector(), b = u.vector();
    CHECK(std::abs(a.dot(E.form() * b)) <= 1e-12);
    const ConvexPolygond polygonal = steiner_symmetral(poly, u);
    CHECK(hausdorff(polygonal, polygonize(E, 4096)) <= 1e-3);
  }
}

TEST_CASE("ellipse axes") {
  const auto d = ellipse_axes(CenteredEllipsed(0.25, 0, 1));
  CHECK(d.semi_major == doctest::Approx(2));
  CHECK(d.semi_minor == doctest::Approx(1));
  CHECK(d.orientation == 0);

  const auto c = ellipse_axes(CenteredEllipsed::circle(1.5));
  CHECK(c.semi_major == doctest::Approx(1.5));
  CHECK(c.semi_minor == doctest::Approx(1.5));
  CHECK(c.orientation == 0);

  testing::Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const double phi = testing::uniform(rng, -10, 10);
    const auto axes = ellipse_axes(CenteredEllipsed::from_axes(3, 1, phi));
    const double expected = std::fmod(std::fmod(phi, pi) + pi, pi);
    double gap = std::abs(axes.orientation - expected);
    gap = std::min(gap, pi - gap);
    CHECK(gap <= 1e-12);
    CHECK(axes.semi_major == doctest::Approx(3).epsilon(1e-13));
    CHECK(axes.semi_minor == doctest::Approx(1).epsilon(1e-13));
  }
}

}
