#include "hoctop/errors.hpp"
#include "hoctop/geometry.hpp"

#include <cmath>
#include <limits>

#include "expansion.hpp"

namespace hoctop {
namespace {

using detail::Expansion;

constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;
constexpr double kSquaredLengthErrBound = 8.0 * kEpsilon;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
  const Expansion acx = Expansion::difference(a.x, c.x);
  const Expansion acy = Expansion::difference(a.y, c.y);
  const Expansion bcx = Expansion::difference(b.x, c.x);
  const Expansion bcy = Expansion::difference(b.y, c.y);
  return (acx * bcy - acy * bcx).sign();
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const Expansion adx = Expansion::difference(a.x, d.x);
  const Expansion ady = Expansion::difference(a.y, d.y);
  const Expansion bdx = Expansion::difference(b.x, d.x);
  const Expansion bdy = Expansion::difference(b.y, d.y);
  const Expansion cdx = Expansion::difference(c.x, d.x);
  const Expansion cdy = Expansion::difference(c.y, d.y);
  const Expansion alift = adx * adx + ady * ady;
  const Expansion blift = bdx * bdx + bdy * bdy;
  const Expansion clift = cdx * cdx + cdy * cdy;
  const Expansion det = alift * (bdx * cdy - bdy * cdx) + blift * (cdx * ady - cdy * adx) +
                        clift * (adx * bdy - ady * bdx);
  return det.sign();
}

int dot_exact(const Point2& a, const Point2& b, const Point2& c) {
  const Expansion acx = Expansion::difference(a.x, c.x);
  const Expansion acy = Expansion::difference(a.y, c.y);
  const Expansion bcx = Expansion::difference(b.x, c.x);
  const Expansion bcy = Expansion::difference(b.y, c.y);
  return (acx * bcx + acy * bcy).sign();
}

Expansion squared_length_exact(const Point2& p, const Point2& q) {
  const Expansion dx = Expansion::difference(p.x, q.x);
  const Expansion dy = Expansion::difference(p.y, q.y);
  return dx * dx + dy * dy;
}

void require_triangle(const Point2& a, const Point2& b, const Point2& c) {
  if (orient2d_sign(a, b, c) == 0) throw DegenerateTriangle("collinear triangle vertices");
}

}  // namespace

bool is_finite(const Point2& p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

int orient2d_sign(const Point2& a, const Point2& b, const Point2& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(det);
  }
  const double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return sign_of(det);
  return orient2d_exact(a, b, c);
}

Orientation orient2d(const Point2& a, const Point2& b, const Point2& c) {
  return static_cast<Orientation>(orient2d_sign(a, b, c));
}

int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double adx = a.x - d.x, ady = a.y - d.y;
  const double bdx = b.x - d.x, bdy = b.y - d.y;
  const double cdx = c.x - d.x, cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady, adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy, bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double errbound = kIccErrBound * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);
  return incircle_exact(a, b, c, d);
}

CircleSide in_circumcircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const int o = orient2d_sign(a, b, c);
  if (o == 0) throw DegenerateTriangle("circle through collinear points");
  const int s = incircle_sign(a, b, c, d) * o;
  if (s > 0) return CircleSide::Inside;
  if (s < 0) return CircleSide::Outside;
  return CircleSide::On;
}

int dot_sign(const Point2& a, const Point2& b, const Point2& c) {
  const double t1 = (a.x - c.x) * (b.x - c.x);
  const double t2 = (a.y - c.y) * (b.y - c.y);
  const double dot = t1 + t2;
  const double errbound = kCcwErrBound * (std::abs(t1) + std::abs(t2));
  if (dot > errbound || -dot > errbound) return sign_of(dot);
  return dot_exact(a, b, c);
}

int compare_squared_lengths(const Point2& p, const Point2& q, const Point2& r, const Point2& s) {
  const double l1 = squared_distance(p, q);
  const double l2 = squared_distance(r, s);
  const double diff = l1 - l2;
  const double errbound = kSquaredLengthErrBound * (l1 + l2);
  if (diff > errbound || -diff > errbound) return sign_of(diff);
  return (squared_length_exact(p, q) - squared_length_exact(r, s)).sign();
}

double circumradius(const Point2& a, const Point2& b, const Point2& c) {
  require_triangle(a, b, c);
  const double twice_area =
      std::abs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  return distance(a, b) * distance(b, c) * distance(c, a) / (2.0 * twice_area);
}

bool is_acute(const Point2& a, const Point2& b, const Point2& c) {
  require_triangle(a, b, c);
  return dot_sign(b, c, a) > 0 && dot_sign(c, a, b) > 0 && dot_sign(a, b, c) > 0;
}

double squared_distance(const Point2& a, const Point2& b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double distance(const Point2& a, const Point2& b) noexcept { return std::sqrt(squared_distance(a, b)); }

}  // namespace hoctop
