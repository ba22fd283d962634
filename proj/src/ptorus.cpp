#include "hsplit/ptorus.hpp"

#include <algorithm>

#include "hsplit/error.hpp"

namespace hsplit {

std::uint64_t arc_arc_intersections(const ArcSlope& a, const ArcSlope& b) {
  if (a == b) return 0;
  return det_distance(a, b) - 1;
}

std::uint64_t curve_arc_intersections(const Slope& c, const ArcSlope& a) { return det_distance(c, a); }

OctagonCount octagon_counts(const ArcSlope& alpha, const ArcSlope& beta, const Slope& c) {
  const auto [mediant, difference] = common_neighbors(alpha, beta);
  const auto ia = curve_arc_intersections(c, alpha);
  const auto ib = curve_arc_intersections(c, beta);
  if (ia == ib) {
    throw Error(ErrorCode::TiedCounts, "curve " + c.to_string() + " crosses both transversals " +
                                           std::to_string(ia) + " times");
  }
  OctagonCount out;
  out.p = std::min(ia, ib);
  out.q = std::max(ia, ib);
  if (out.p == 0) {
    throw Error(ErrorCode::ParallelTransversal, "curve " + c.to_string() + " is parallel to a transversal");
  }
  out.boundary_parallel = 2 * out.p;
  out.third_family = out.q - out.p;
  // Exactly one neighbor sees q - p crossings; the other sees q + p.
  out.third_slope = det_distance(c, mediant) == out.third_family ? mediant : difference;
  return out;
}

SurgeredTorus surged_meridian(const Slope& coefficient) { return {coefficient, coefficient}; }

GapCheck gap_check(const Slope& c, const ArcSlope& alpha, const ArcSlope& beta) {
  for (const auto& s : {alpha, beta}) {
    if (classify(s) != SlopeClass::Close) {
      throw Error(ErrorCode::NotClose, "transversal " + s.to_string() + " is not a close slope");
    }
  }
  if (!is_farey_adjacent(alpha, beta)) {
    throw Error(ErrorCode::NotAdjacent, alpha.to_string() + " and " + beta.to_string() + " are not adjacent");
  }
  GapCheck out;
  out.ia = curve_arc_intersections(c, alpha);
  out.ib = curve_arc_intersections(c, beta);
  out.gap = out.ia > out.ib ? out.ia - out.ib : out.ib - out.ia;
  out.pass = std::min(out.ia, out.ib) >= 2 && out.gap >= 2;
  return out;
}

}  // namespace hsplit
