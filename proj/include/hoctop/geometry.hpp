#pragma once

#include <compare>
#include <ostream>

namespace hoctop {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  /// Lexicographic (x, then y).
  friend auto operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

bool is_finite(const Point2& p) noexcept;

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class CircleSide { Inside, On, Outside };

// All predicates below decide exactly: a floating-point filter answers when
// its error bound allows, otherwise the determinant is re-evaluated with
// nonoverlapping floating-point expansions.

Orientation orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Exact sign of the orientation determinant, +1 for counter-clockwise.
int orient2d_sign(const Point2& a, const Point2& b, const Point2& c);

/// Exact sign of the incircle determinant for (a, b, c) taken in the given
/// order: positive when d is inside and a, b, c are counter-clockwise.
int incircle_sign(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Classifies d against the circle through a, b, c (either orientation).
/// Throws DegenerateTriangle when a, b, c are collinear.
CircleSide in_circumcircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Exact sign of (a - c) . (b - c); positive iff the angle at c is acute.
int dot_sign(const Point2& a, const Point2& b, const Point2& c);

/// Exact sign of |p - q|^2 - |r - s|^2.
int compare_squared_lengths(const Point2& p, const Point2& q, const Point2& r, const Point2& s);

/// Radius of the circle through a, b, c as |ab| |bc| |ca| / (4 area).
/// Throws DegenerateTriangle when a, b, c are collinear.
double circumradius(const Point2& a, const Point2& b, const Point2& c);

/// True iff every angle is strictly below 90 degrees; right triangles are not
/// acute. Throws DegenerateTriangle when a, b, c are collinear.
bool is_acute(const Point2& a, const Point2& b, const Point2& c);

double distance(const Point2& a, const Point2& b) noexcept;
double squared_distance(const Point2& a, const Point2& b) noexcept;

}  // namespace hoctop
