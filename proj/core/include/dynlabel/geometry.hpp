#ifndef DYNLABEL_GEOMETRY_HPP
#define DYNLABEL_GEOMETRY_HPP

#include <cmath>
#include <cstdlib>

#include "dynlabel/common.hpp"
#include "dynlabel/errors.hpp"

namespace dynlabel {

// All shapes live on an integer grid: real-valued inputs are scaled by
// S = 10^p before they reach the library.  Squares have side exactly S,
// rectangles have unit height S and an arbitrary positive integer width.
// Intersection is open-interior everywhere: shapes that merely touch do not
// conflict.

inline constexpr Coord kCoordLimit = Coord{1} << 40;  // |coordinate| must stay below this

constexpr bool coord_in_range(Coord c) { return c > -kCoordLimit && c < kCoordLimit; }

constexpr Coord pow10_scale(int p) {
  Coord s = 1;
  for (int i = 0; i < p; ++i) s *= 10;
  return s;
}

struct Square {
  Id id = 0;
  Coord x = 0;  // center
  Coord y = 0;
};

struct Rect {
  Id id = 0;
  Coord x = 0;  // center
  Coord y = 0;
  Coord w = 0;  // full width; height is always S
};

// Axis-parallel box with an open interior on all four sides.
struct Box {
  Coord xlo = 0, xhi = 0, ylo = 0, yhi = 0;
  constexpr bool contains(Coord px, Coord py) const {
    return xlo < px && px < xhi && ylo < py && py < yhi;
  }
  constexpr bool empty() const { return xlo + 1 >= xhi || ylo + 1 >= yhi; }
};

// Grid point indices: the point itself is (col * S, row * S).
struct GridPoint {
  std::int64_t row = 0;  // y index
  std::int64_t col = 0;  // x index
  friend constexpr bool operator==(const GridPoint&, const GridPoint&) = default;
};

constexpr Square make_square(Id id, Coord x, Coord y) { return Square{id, x, y}; }

constexpr Rect make_rect(Id id, Coord x, Coord y, Coord w) { return Rect{id, x, y, w}; }

constexpr Rect as_rect(const Square& s, Coord scale) { return Rect{s.id, s.x, s.y, scale}; }

// Two side-S squares overlap in their interiors iff both center distances are < S.
constexpr bool intersects(const Square& a, const Square& b, Coord scale) {
  Coord dx = a.x >= b.x ? a.x - b.x : b.x - a.x;
  Coord dy = a.y >= b.y ? a.y - b.y : b.y - a.y;
  return dx < scale && dy < scale;
}

// Unit-height rectangles: open x-extents must overlap (2|dx| < wa + wb) and
// center y distance must be < S.
constexpr bool intersects_rect(const Rect& a, const Rect& b, Coord scale) {
  Coord dx = a.x >= b.x ? a.x - b.x : b.x - a.x;
  Coord dy = a.y >= b.y ? a.y - b.y : b.y - a.y;
  return 2 * dx < a.w + b.w && dy < scale;
}

// Open box of side a*S centered on the square's center (a must be even).
constexpr Box scaled_box(const Square& s, int a, Coord scale) {
  Coord h = (a / 2) * scale;
  return Box{s.x - h, s.x + h, s.y - h, s.y + h};
}

constexpr Coord floor_div(Coord a, Coord b) {  // b > 0
  Coord q = a / b;
  return (a % b != 0 && (a < 0)) ? q - 1 : q;
}

constexpr Coord ceil_div(Coord a, Coord b) {  // b > 0
  Coord q = a / b;
  return (a % b != 0 && (a > 0)) ? q + 1 : q;
}

// The square's half-open footprint [x - S/2, x + S/2) x [y - S/2, y + S/2)
// contains exactly one grid point; this returns its indices:
//   col = ceil(x/S - 1/2), row = ceil(y/S - 1/2), evaluated in exact integers.
constexpr GridPoint grid_point_of(Coord x, Coord y, Coord scale) {
  return GridPoint{ceil_div(2 * y - scale, 2 * scale), ceil_div(2 * x - scale, 2 * scale)};
}

constexpr GridPoint grid_point_of(const Square& s, Coord scale) {
  return grid_point_of(s.x, s.y, scale);
}

// Stabbing-line index of a unit-height rectangle: the same half-open rule
// applied to y.  Rectangles assigned to the same line are pairwise closer
// than S vertically; lines two apart are separated by more than S.
constexpr std::int64_t line_of(const Rect& r, Coord scale) {
  return ceil_div(2 * r.y - scale, 2 * scale);
}

// x-extent of a rectangle in doubled coordinates (kept integral for odd widths).
struct DoubledSpan {
  Coord lo = 0, hi = 0;
};

constexpr DoubledSpan doubled_span(const Rect& r) { return DoubledSpan{2 * r.x - r.w, 2 * r.x + r.w}; }

}  // namespace dynlabel

#endif
