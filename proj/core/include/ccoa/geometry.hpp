#pragma once

#include <cstdint>
#include <vector>

#include "ccoa/relation.hpp"

namespace ccoa {

/// Integer grid point; north = +y, east = +x. Coordinates are expected to
/// stay within |c| <= 1e6 so cross products fit comfortably in 64 bits.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  constexpr bool operator==(const Point&) const = default;
};

/// Point assigned to each variable, indexed by variable.
using PointAssignment = std::vector<Point>;

constexpr int sign(std::int64_t v) { return (v > 0) - (v < 0); }

/// Cardinal direction of p relative to s.
constexpr CdaAtom cda_of(Point p, Point s) {
  constexpr CdaAtom by_sign[3][3] = {
      // sx = -1: sy = -1, 0, 1
      {CdaAtom::SW, CdaAtom::We, CdaAtom::NW},
      {CdaAtom::So, CdaAtom::Eq, CdaAtom::No},
      {CdaAtom::SE, CdaAtom::Ea, CdaAtom::NE}};
  return by_sign[sign(p.x - s.x) + 1][sign(p.y - s.y) + 1];
}

/// Relative orientation of c with respect to parent a and reference b.
/// "Left" is a positive cross product (b - a) x (c - a).
constexpr RoaAtom roa_of(Point a, Point b, Point c) {
  if (a == b) return c == a ? RoaAtom::de : RoaAtom::dd;
  const std::int64_t dx = b.x - a.x, dy = b.y - a.y;
  const std::int64_t ex = c.x - a.x, ey = c.y - a.y;
  const std::int64_t cross = dx * ey - dy * ex;
  if (cross > 0) return RoaAtom::lr;
  if (cross < 0) return RoaAtom::rr;
  // Collinear: c = a + t (b - a) with t = dot / len2, compared without division.
  const std::int64_t dot = dx * ex + dy * ey;
  const std::int64_t len2 = dx * dx + dy * dy;
  if (dot < 0) return RoaAtom::bp;
  if (dot == 0) return RoaAtom::cp;
  if (dot < len2) return RoaAtom::bw;
  if (dot == len2) return RoaAtom::cr;
  return RoaAtom::br;
}

/// Every point of [-radius, radius]^2 in row-major order (x outer).
std::vector<Point> grid_points(int radius);

}  // namespace ccoa
