#include "boxdot/geometry.hpp"

#include "boxdot/errors.hpp"

#include <algorithm>

namespace boxdot {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  Rational s = cross(b - a, c - a);
  if (s > 0) return Orientation::CCW;
  if (s < 0) return Orientation::CW;
  return Orientation::COLLINEAR;
}

Rational squared_distance(const Point& p, const Point& q) {
  Vec2 d = p - q;
  return d.x * d.x + d.y * d.y;
}

namespace {

// Angular class of u measured from ref: 0 = same ray, 1 = open halfplane on
// the counterclockwise side, 2 = opposite ray, 3 = open clockwise side.
int angular_class(const Vec2& ref, const Vec2& u) {
  Rational c = cross(ref, u);
  if (c > 0) return 1;
  if (c < 0) return 3;
  return dot(ref, u) > 0 ? 0 : 2;
}

}  // namespace

bool ccw_less(const Vec2& ref, const Vec2& u, const Vec2& v) {
  int cu = angular_class(ref, u);
  int cv = angular_class(ref, v);
  if (cu != cv) return cu < cv;
  if (cu == 1 || cu == 3) {
    Rational s = cross(u, v);
    if (s > 0) return true;
    if (s < 0) return false;
  }
  // same ray: nearer first
  return dot(u, u) < dot(v, v);
}

std::vector<Point> ccw_order_around(const Point& origin, const Vec2& ref,
                                    std::vector<Point> targets) {
  for (const Point& t : targets)
    if (t == origin) raise(Errc::TargetEqualsOrigin, "target coincides with origin");
  std::stable_sort(targets.begin(), targets.end(),
                   [&](const Point& s, const Point& t) {
                     return ccw_less(ref, s - origin, t - origin);
                   });
  return targets;
}

namespace {

bool on_ray(const Vec2& ray, const Vec2& v) {
  return cross(ray, v) == 0 && dot(ray, v) > 0;
}

}  // namespace

bool cone_contains(const Point& a, const Point& b, const Point& c, const Point& p) {
  Vec2 u = a - b;
  Vec2 w = c - b;
  Vec2 v = p - b;
  if (u.is_zero() || w.is_zero() || v.is_zero())
    raise(Errc::DegenerateApex, "cone_contains requires a, c, p distinct from apex b");
  if (on_ray(u, v)) return true;   // supporting ray through a, included
  if (on_ray(w, v)) return false;  // supporting ray through c, excluded
  Rational uw = cross(u, w);
  if (uw > 0) return cross(u, v) > 0 && cross(v, w) > 0;
  if (uw < 0) return cross(u, v) > 0 || cross(v, w) > 0;
  // u, w collinear: coinciding rays form the zero-angle cone (just the ray,
  // already handled), opposite rays a half-plane.
  if (dot(u, w) > 0) return false;
  return cross(u, v) > 0;
}

bool point_on_segment(const Point& a, const Point& b, const Point& q) {
  if (orientation(a, b, q) != Orientation::COLLINEAR) return false;
  const Rational& lox = a.x < b.x ? a.x : b.x;
  const Rational& hix = a.x < b.x ? b.x : a.x;
  const Rational& loy = a.y < b.y ? a.y : b.y;
  const Rational& hiy = a.y < b.y ? b.y : a.y;
  return lox <= q.x && q.x <= hix && loy <= q.y && q.y <= hiy;
}

namespace {

bool strictly_inside(const Point& s, const Point& t, const Point& q) {
  return q != s && q != t && point_on_segment(s, t, q);
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  Orientation o1 = orientation(a, b, c);
  Orientation o2 = orientation(a, b, d);
  Orientation o3 = orientation(c, d, a);
  Orientation o4 = orientation(c, d, b);
  if (o1 != Orientation::COLLINEAR && o2 != Orientation::COLLINEAR &&
      o3 != Orientation::COLLINEAR && o4 != Orientation::COLLINEAR) {
    return o1 != o2 && o3 != o4;
  }
  if (o1 == Orientation::COLLINEAR && strictly_inside(a, b, c)) return true;
  if (o2 == Orientation::COLLINEAR && strictly_inside(a, b, d)) return true;
  if (o3 == Orientation::COLLINEAR && strictly_inside(c, d, a)) return true;
  if (o4 == Orientation::COLLINEAR && strictly_inside(c, d, b)) return true;
  return false;
}

}  // namespace boxdot
