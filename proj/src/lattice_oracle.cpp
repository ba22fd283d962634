// Geometric crossing counts in the universal abelian cover R^2 - Z^2.
//
// All coordinates are scaled by kScale so the offset base points of closed
// curves are integers. A closed curve of slope p/q lifts to lines of
// direction (q, p) through offset + kScale * Z^2; one period of such a line
// is the half-open segment [o, o + kScale * (q, p)). An arc lifts to the
// lattice segments [kScale * v, kScale * (v + (q, p))].
//
// The first object contributes one fundamental piece; every lift of the
// second object whose bounding box can meet that piece is tested with exact
// integer segment intersection.

#include <algorithm>
#include <array>
#include <cstdlib>

#include "hsplit/error.hpp"
#include "hsplit/ptorus.hpp"

namespace hsplit {

namespace {

constexpr std::int64_t kScale = 97;

// Tried in order; the first that keeps the line off the lattice is used.
constexpr std::array<std::array<std::int64_t, 2>, 6> kOffsets{{{13, 29}, {31, 17}, {7, 53}, {41, 11}, {23, 61}, {5, 43}}};

struct Point {
  std::int64_t x;
  std::int64_t y;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

__int128 cross(Point a, Point b) { return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x; }

enum class Ends { Open, HalfOpen };

struct Segment {
  Point start;
  Point end;
  Ends ends;
};

bool param_inside(__int128 num, __int128 den, Ends ends) {
  // den > 0
  if (ends == Ends::Open) return num > 0 && num < den;
  return num >= 0 && num < den;
}

bool crosses(const Segment& a, const Segment& b) {
  const Point r = a.end - a.start;
  const Point s = b.end - b.start;
  __int128 den = cross(r, s);
  if (den == 0) return false;
  const Point w = b.start - a.start;
  __int128 t = cross(w, s);
  __int128 u = cross(w, r);
  if (den < 0) {
    den = -den;
    t = -t;
    u = -u;
  }
  return param_inside(t, den, a.ends) && param_inside(u, den, b.ends);
}

Point direction(const Slope& s) { return {s.den(), s.num()}; }

Point curve_offset(const Slope& s) {
  const Point d = direction(s);
  for (const auto& o : kOffsets) {
    const Point p{o[0], o[1]};
    const __int128 c = cross(p, d);
    if (c % kScale != 0) return p;
  }
  throw Error(ErrorCode::Overflow, "no generic offset for slope " + s.to_string());
}

Segment base_piece(const SlopeObject& obj) {
  const Point d = direction(obj.slope);
  const Point step{kScale * d.x, kScale * d.y};
  if (obj.kind == Carrier::Arc) return {{0, 0}, step, Ends::Open};
  const Point o = curve_offset(obj.slope);
  return {o, o + step, Ends::HalfOpen};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

OracleCount lattice_oracle(const SlopeObject& first, const SlopeObject& second) {
  if (first.slope == second.slope) return {0, true};

  const Segment piece = base_piece(first);
  const Segment lift = base_piece(second);

  const std::int64_t piece_min_x = std::min(piece.start.x, piece.end.x);
  const std::int64_t piece_max_x = std::max(piece.start.x, piece.end.x);
  const std::int64_t piece_min_y = std::min(piece.start.y, piece.end.y);
  const std::int64_t piece_max_y = std::max(piece.start.y, piece.end.y);
  const std::int64_t lift_min_x = std::min(lift.start.x, lift.end.x);
  const std::int64_t lift_max_x = std::max(lift.start.x, lift.end.x);
  const std::int64_t lift_min_y = std::min(lift.start.y, lift.end.y);
  const std::int64_t lift_max_y = std::max(lift.start.y, lift.end.y);

  const std::int64_t i_lo = floor_div(piece_min_x - lift_max_x, kScale) - 1;
  const std::int64_t i_hi = floor_div(piece_max_x - lift_min_x, kScale) + 1;
  const std::int64_t j_lo = floor_div(piece_min_y - lift_max_y, kScale) - 1;
  const std::int64_t j_hi = floor_div(piece_max_y - lift_min_y, kScale) + 1;

  // Arc lifts with the same lattice displacement are distinct segments; line
  // lifts differing by a period are adjacent pieces of one line. Both are
  // covered exactly once by ranging over all translates.
  OracleCount out;
  for (std::int64_t i = i_lo; i <= i_hi; ++i) {
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const Point t{kScale * i, kScale * j};
      const Segment moved{lift.start + t, lift.end + t, lift.ends};
      if (crosses(piece, moved)) ++out.count;
    }
  }
  return out;
}

}  // namespace hsplit
