#pragma once

#include "boxdot/rational.hpp"

#include <compare>
#include <vector>

namespace boxdot {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

/// Lexicographic (x, then y) order; this is the vertex order behind every
/// edge key and tie-break in the traversal.
bool lex_less(const Point& a, const Point& b);

struct Vec2 {
  Rational x;
  Rational y;

  bool is_zero() const { return x == 0 && y == 0; }
};

inline Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

Rational cross(const Vec2& a, const Vec2& b);
Rational dot(const Vec2& a, const Vec2& b);

enum class Orientation { CCW, CW, COLLINEAR };

/// Sign of the exact cross product (b-a) x (c-a).
Orientation orientation(const Point& a, const Point& b, const Point& c);

Rational squared_distance(const Point& p, const Point& q);

/// Strict circular order of directions, counterclockwise starting at `ref`.
/// Same-ray ties are broken by increasing squared length (nearer first).
/// Pure orientation/quadrant arithmetic, no trigonometry.
bool ccw_less(const Vec2& ref, const Vec2& u, const Vec2& v);

/// Sort `targets` counterclockwise around `origin` starting at direction
/// `ref`. Throws Error(TargetEqualsOrigin) if a target coincides with origin.
std::vector<Point> ccw_order_around(const Point& origin, const Vec2& ref,
                                    std::vector<Point> targets);

/// Membership in the cone with apex b swept counterclockwise from ray b->a
/// to ray b->c; ray b->a included, ray b->c excluded. Coinciding rays make a
/// zero-angle cone that is exactly the ray through a.
/// Throws Error(DegenerateApex) if a == b, c == b, or p == b.
bool cone_contains(const Point& a, const Point& b, const Point& c, const Point& p);

/// True iff q lies on the closed segment [a, b].
bool point_on_segment(const Point& a, const Point& b, const Point& q);

/// True iff segments [a,b] and [c,d] have a common point that is interior
/// to at least one of them (a shared endpoint alone does not count).
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace boxdot
