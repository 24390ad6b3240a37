#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steiner/measure.hpp"
#include "support/oracles.hpp"
#include "support/random_bodies.hpp"

using namespace steiner;
using std::numbers::pi;

namespace {

const ConvexPolygond kSquare({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
const ConvexPolygond kTriangle({{0, 0}, {1, 0}, {0, 1}});

ConvexPolygond rotated_list(const ConvexPolygond& P, std::size_t shift) {
  std::vector<Point2d> v;
  for (std::size_t i = 0; i < P.size(); ++i) v.push_back(P.vertex(i + shift));
  return ConvexPolygond(v);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("area") {
  CHECK(area(kTriangle) == doctest::Approx(0.5));
  CHECK(area(kSquare) == doctest::Approx(4));

  testing::Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const ConvexPolygond P = testing::random_polygon(rng, 32);
    const auto mc = oracle::monte_carlo_area(P.vertices(), 200000, 1000 + trial);
    CHECK(std::abs(area(P) - mc.value) <= 3 * mc.standard_error + 1e-12);
  }
}

TEST_CASE("origin radius") {
  CHECK(origin_radius(kSquare) == doctest::Approx(std::sqrt(2.0)));
  CHECK(origin_radius(kTriangle) == doctest::Approx(1));
  const double eps = 0.05;
  CHECK(origin_radius(ConvexPolygond({{0.5, 0}, {0, eps}, {-0.5, 0}, {0, -eps}})) == doctest::Approx(0.5));
}

TEST_CASE("diameter") {
  CHECK(diameter(kSquare) == doctest::Approx(2 * std::sqrt(2.0)));
  CHECK(diameter(ConvexPolygond({{0.5, 0}, {0, 0.05}, {-0.5, 0}, {0, -0.05}})) == doctest::Approx(1));
  CHECK(diameter(polygonize(CenteredBalld(1), 6)) == doctest::Approx(2));

  testing::Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const ConvexPolygond P = testing::random_body(rng);
    CHECK(diameter(P) == doctest::Approx(oracle::brute_diameter(P.vertices())).epsilon(1e-14));
  }
}

TEST_CASE("support") {
  CHECK(support(kSquare, Directiond(0)) == doctest::Approx(1));
  CHECK(support(kSquare, Directiond(pi / 4)) == doctest::Approx(std::sqrt(2.0)));

  testing::Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexPolygond P = testing::random_body(rng);
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    const double width = support(P, u) + support(P, u.opposite());
    CHECK(support(P, u) >= -support(P, u.opposite()));
    CHECK(width <= diameter(P) + 1e-12);
  }
}

TEST_CASE("measurements ignore where the vertex list starts") {
  testing::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexPolygond P = testing::random_body(rng);
    const ConvexPolygond Q = rotated_list(P, 1 + trial % (P.size() - 1));
    const Directiond u(testing::uniform(rng, 0, 2 * pi));
    CHECK(area(Q) == doctest::Approx(area(P)).epsilon(1e-13));
    CHECK(diameter(Q) == doctest::Approx(diameter(P)).epsilon(1e-14));
    CHECK(origin_radius(Q) == origin_radius(P));
    CHECK(support(Q, u) == support(P, u));
  }
}

TEST_CASE("hausdorff") {
  CHECK(hausdorff(kSquare, kSquare) == 0);
  const ConvexPolygond unit({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const ConvexPolygond shifted({{0.3, 0}, {1.3, 0}, {1.3, 1}, {0.3, 1}});
  CHECK(hausdorff(unit, shifted) == doctest::Approx(0.3));

  testing::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const ConvexPolygond P = testing::random_body(rng, 16), Q = testing::random_body(rng, 16);
    const double step = 2e-3;
    CHECK(std::abs(hausdorff(P, Q) - oracle::sampled_hausdorff(P.vertices(), Q.vertices(), step)) <= step);
  }
}

TEST_CASE("hausdorff is a metric") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const ConvexPolygond P = testing::random_body(rng), Q = testing::random_body(rng), R = testing::random_body(rng);
    CHECK(hausdorff(P, Q) == hausdorff(Q, P));
    CHECK(hausdorff(P, R) <= hausdorff(P, Q) + hausdorff(Q, R) + 1e-12);
    CHECK(hausdorff(P, rotated_list(P, 1)) == 0);
    CHECK(hausdorff(P, Q) > 0);
  }
}

TEST_CASE("hausdorff to a centered ball") {
  CHECK(hausdorff_to_ball(kSquare, CenteredBalld(1)) == doctest::Approx(std::sqrt(2.0) - 1));

  const double r = 0.7;
  const ConvexPolygond fine = polygonize(CenteredBalld(r), 4096);
  CHECK(hausdorff_to_ball(fine, CenteredBalld(r)) <= r * (1 - std::cos(pi / 4096)) + 1e-15);

  testing::Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexPolygond P = testing::random_polygon(rng, 24, 0.1);
    if (!(origin_inradius(P) > 0)) continue;
    const double rp = origin_radius(P);
    // against its own circumball: the inner term alone
    CHECK(hausdorff_to_ball(P, CenteredBalld(rp)) == doctest::Approx(rp - origin_inradius(P)).epsilon(1e-14));
    const double sampled = oracle::sampled_hausdorff(P.vertices(), polygonize(CenteredBalld(rp), 4096).vertices(), 1e-3);
    CHECK(std::abs(hausdorff_to_ball(P, CenteredBalld(rp)) - sampled) <= 1e-3 + rp * (1 - std::cos(pi / 4096)));
    // against the polygonal ball, up to the inscribed-polygon sagitta
    const double radius = testing::uniform(rng, 0.2, 1.5);
    const double exact = hausdorff_to_ball(P, CenteredBalld(radius));
    const double polygonal = hausdorff(P, polygonize(CenteredBalld(radius), 4096));
    CHECK(std::abs(exact - polygonal) <= radius * (1 - std::cos(pi / 4096)) + 1e-12);
  }
}

TEST_CASE("hausdorff to ball needs the origin inside") {
  const ConvexPolygond off({{1, 1}, {2, 1}, {1, 2}});
  CHECK_THROWS_AS(hausdorff_to_ball(off, CenteredBalld(1)), OriginNotInterior);
  CHECK(ball_distance(off, CenteredBalld(1)) == doctest::Approx(hausdorff(off, polygonize(CenteredBalld(1), 4096))));
}

TEST_CASE("chord length") {
  CHECK(chord_length(kSquare, Lined{Point2d(0, 0), Directiond(0)}) == doctest::Approx(2));
  CHECK(chord_length(kSquare, Lined{Point2d(0, 2), Directiond(0)}) == 0);
  CHECK(chord_length(kSquare, Lined{Point2d(0, 1), Directiond(0)}) == doctest::Approx(2));

  testing::Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexPolygond P = testing::random_body(rng, 24);
    const Lined line{Point2d(testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)),
                     Directiond(testing::uniform(rng, 0, 2 * pi))};
    const double reach = 4, steps = 400000;
    const double scanned = oracle::scan_chord(P.vertices(), line.point, line.direction.vector(), reach, steps);
    CHECK(std::abs(chord_length(P, line) - scanned) <= 2 * (2 * reach / steps) + 1e-12);
    CHECK(chord_length(P, line) <= diameter(P) + 1e-12);
  }
}

TEST_CASE("contains") {
  const ConvexPolygond half({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
  CHECK(contains(kSquare, half));
  CHECK_FALSE(contains(half, kSquare));
  CHECK(contains(kSquare, kSquare));

  testing::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pair = testing::random_nested_pair(rng);
    CHECK(contains(pair.outer, pair.inner));
    const double tol = 1e-9 * pair.outer.scale();
    if (contains(pair.inner, pair.outer, tol)) CHECK(hausdorff(pair.inner, pair.outer) <= tol);
  }
}

TEST_CASE("polygonize") {
  const ConvexPolygond square = polygonize(CenteredBalld(1), 4);
  CHECK(square.size() == 4);
  for (const auto& v : square.vertices()) CHECK(v.norm() == doctest::Approx(1));
  CHECK(area(square) == doctest::Approx(2));

  const ConvexPolygond cigar = polygonize(CenteredSegmentd(Directiond(pi / 2), 1.0), 0.1);
  CHECK(area(cigar) == doctest::Approx(0.1));
  CHECK(diameter(cigar) == doctest::Approx(1));
  CHECK(diameter(rotated_list(cigar, 1)) == doctest::Approx(1));
  CHECK(support(cigar, Directiond(0)) == doctest::Approx(0.1));  // short diagonal 0.2

  const ConvexPolygond ellipse = polygonize(CenteredEllipsed::from_axes(2, 1, 0), 4096);
  CHECK(std::abs(area(ellipse) - 2 * pi) <= 1e-5);
  CHECK(area(ellipse) < 2 * pi);

  CHECK_THROWS_AS(polygonize(CenteredSegmentd(Directiond(0), 0.0), 0.1), DegenerateBody);
  CHECK_THROWS_AS(polygonize(CenteredBalld(1), 2), DegenerateBody);
}

TEST_CASE("convex hull and decimate") {
  const ConvexPolygond hull = convex_hull<double>({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 0}});
  CHECK(hull.size() == 4);
  CHECK(area(hull) == doctest::Approx(4));

  const ConvexPolygond disc = polygonize(CenteredBalld(1), 1000);
  const ConvexPolygond small = decimate(disc, 64);
  CHECK(small.size() <= 64);
  CHECK(contains(disc, small));
  CHECK(area(small) > 0.99 * area(disc));
}

}
