#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "hoctop/errors.hpp"
#include "hoctop/geometry.hpp"

using namespace hoctop;
using Rational = boost::multiprecision::cpp_rational;

namespace {

int sign(const Rational& r) { return r.sign(); }

Rational q(double v) { return Rational(v); }

int orient_rational(const Point2& a, const Point2& b, const Point2& c) {
  return sign((q(a.x) - q(c.x)) * (q(b.y) - q(c.y)) - (q(a.y) - q(c.y)) * (q(b.x) - q(c.x)));
}

int incircle_rational(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const Rational adx = q(a.x) - q(d.x), ady = q(a.y) - q(d.y);
  const Rational bdx = q(b.x) - q(d.x), bdy = q(b.y) - q(d.y);
  const Rational cdx = q(c.x) - q(d.x), cdy = q(c.y) - q(d.y);
  const Rational al = adx * adx + ady * ady, bl = bdx * bdx + bdy * bdy, cl = cdx * cdx + cdy * cdy;
  return sign(al * (bdx * cdy - bdy * cdx) + bl * (cdx * ady - cdy * adx) + cl * (adx * bdy - ady * bdx));
}

int dot_rational(const Point2& a, const Point2& b, const Point2& c) {
  return sign((q(a.x) - q(c.x)) * (q(b.x) - q(c.x)) + (q(a.y) - q(c.y)) * (q(b.y) - q(c.y)));
}

// Points on a circle, rounded to doubles and nudged by a few ulps: the
// floating-point incircle determinant is dominated by rounding error here.
Point2 near_circle(std::mt19937_64& rng, double cx, double cy, double r) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_int_distribution<int> ulps(-3, 3);
  const double t = angle(rng);
  double x = cx + r * std::cos(t), y = cy + r * std::sin(t);
  for (int k = ulps(rng); k != 0; k += (k > 0 ? -1 : 1)) x = std::nextafter(x, k > 0 ? 1e300 : -1e300);
  for (int k = ulps(rng); k != 0; k += (k > 0 ? -1 : 1)) y = std::nextafter(y, k > 0 ? 1e300 : -1e300);
  return {x, y};
}

}  // namespace

TEST_CASE("orient2d on simple triangles") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == Orientation::CCW);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == Orientation::CW);
  CHECK(orient2d({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  CHECK(orient2d({0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}) == Orientation::Collinear);
}

TEST_CASE("in_circumcircle on the unit circle") {
  const Point2 a{1, 0}, b{0, 1}, c{-1, 0};
  CHECK(in_circumcircle(a, b, c, {0, 0}) == CircleSide::Inside);
  CHECK(in_circumcircle(a, b, c, {2, 0}) == CircleSide::Outside);
  CHECK(in_circumcircle(a, b, c, {0, -1}) == CircleSide::On);
  // orientation of abc does not matter
  CHECK(in_circumcircle(c, b, a, {0, 0}) == CircleSide::Inside);
  CHECK_THROWS_AS(in_circumcircle({0, 0}, {1, 1}, {2, 2}, {0, 1}), DegenerateTriangle);
}

TEST_CASE("predicate symmetries on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
    CHECK(orient2d_sign(a, b, c) == orient2d_sign(b, c, a));
    CHECK(orient2d_sign(a, b, c) == -orient2d_sign(b, a, c));
    if (orient2d_sign(a, b, c) != 0) {
      CHECK(in_circumcircle(a, b, c, d) == in_circumcircle(b, c, a, d));
      CHECK(in_circumcircle(a, b, c, d) == in_circumcircle(b, a, c, d));
    }
  }
}

TEST_CASE("orient2d agrees with exact rationals near degeneracy") {
  // Shewchuk's classic stress pattern: a tiny grid of points near the line y = x.
  const Point2 b{12, 12}, c{24, 24};
  const double step = std::ldexp(1.0, -53);
  int mismatches = 0;
  for (int i = 0; i < 256; ++i) {
    for (int j = 0; j < 256; ++j) {
      const Point2 a{0.5 + i * step, 0.5 + j * step};
      mismatches += orient2d_sign(a, b, c) != orient_rational(a, b, c);
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("incircle, dot and length comparisons agree with exact rationals on 1e5 near-degenerate quadruples") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  std::uniform_real_distribution<double> radius(1e-3, 1e3);
  int incircle_mismatch = 0, orient_mismatch = 0, dot_mismatch = 0, length_mismatch = 0;
  for (int i = 0; i < 100000; ++i) {
    const double cx = u(rng), cy = u(rng), r = radius(rng);
    const Point2 a = near_circle(rng, cx, cy, r), b = near_circle(rng, cx, cy, r);
    const Point2 c = near_circle(rng, cx, cy, r), d = near_circle(rng, cx, cy, r);
    incircle_mismatch += incircle_sign(a, b, c, d) != incircle_rational(a, b, c, d);
    // d sits on the segment ab up to rounding
    const Point2 m{a.x + 0.5 * (b.x - a.x), a.y + 0.5 * (b.y - a.y)};
    orient_mismatch += orient2d_sign(a, b, m) != orient_rational(a, b, m);
    // the angle at a point on the circle subtending a diameter is right
    const Point2 opposite{2 * cx - a.x, 2 * cy - a.y};
    dot_mismatch += dot_sign(a, opposite, b) != dot_rational(a, opposite, b);
    const Rational la = (q(a.x) - q(cx)) * (q(a.x) - q(cx)) + (q(a.y) - q(cy)) * (q(a.y) - q(cy));
    const Rational lb = (q(b.x) - q(cx)) * (q(b.x) - q(cx)) + (q(b.y) - q(cy)) * (q(b.y) - q(cy));
    length_mismatch += compare_squared_lengths(a, {cx, cy}, b, {cx, cy}) != sign(la - lb);
  }
  CHECK(incircle_mismatch == 0);
  CHECK(orient_mismatch == 0);
  CHECK(dot_mismatch == 0);
  CHECK(length_mismatch == 0);
}

TEST_CASE("circumradius and acuteness") {
  CHECK(circumradius({0, 0}, {2, 0}, {1, std::sqrt(3.0)}) == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(circumradius({0, 0}, {2, 0}, {0, 2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(circumradius({0, 0}, {1, 1}, {3, 3}), DegenerateTriangle);

  CHECK(is_acute({0, 0}, {2, 0}, {1, std::sqrt(3.0)}));
  CHECK_FALSE(is_acute({0, 0}, {2, 0}, {0, 2}));  // right angle
  CHECK_FALSE(is_acute({0, 0}, {4, 0}, {1, 0.5}));
  CHECK_THROWS_AS(is_acute({0, 0}, {1, 0}, {2, 0}), DegenerateTriangle);
}

TEST_CASE("finite coordinates") {
  CHECK(is_finite({1, 2}));
  CHECK_FALSE(is_finite({std::nan(""), 0}));
  CHECK_FALSE(is_finite({0, INFINITY}));
}
