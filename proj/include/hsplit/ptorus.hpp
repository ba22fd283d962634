#pragma once

#include <cstdint>

#include "hsplit/farey.hpp"

namespace hsplit {

// Slopes in a once-punctured torus are measured against a fixed
// (meridian, longitude) frame: the denominator counts crossings with the
// meridian. An essential proper arc and an essential simple closed curve are
// both determined up to isotopy by their slope.
using ArcSlope = Slope;

/// Minimal crossings of two essential proper arcs: 0 if parallel, else
/// det_distance - 1.
std::uint64_t arc_arc_intersections(const ArcSlope& a, const ArcSlope& b);

/// Minimal crossings of a closed curve of slope c with an arc of slope a.
std::uint64_t curve_arc_intersections(const Slope& c, const ArcSlope& a);

/// Decomposition of a closed curve c inside the octagon T - (alpha u beta).
struct OctagonCount {
  std::uint64_t p = 0;  // crossings with the less-crossed transversal
  std::uint64_t q = 0;  // crossings with the other one, p < q
  std::uint64_t boundary_parallel = 0;  // 2p
  std::uint64_t third_family = 0;       // q - p
  Slope third_slope;                    // common neighbor of alpha, beta

  friend bool operator==(const OctagonCount&, const OctagonCount&) = default;
};

/// Throws Error{NotAdjacent} if alpha, beta are not Farey-adjacent,
/// Error{TiedCounts} if both transversals are crossed equally often, and
/// Error{ParallelTransversal} if c is parallel to one of them (p = 0), where
/// the third slope is not determined.
OctagonCount octagon_counts(const ArcSlope& alpha, const ArcSlope& beta, const Slope& c);

/// Result of Dehn surgery on the core of a solid torus.
struct SurgeredTorus {
  Slope coefficient;
  Slope meridian;  // new meridian, expressed in the old (meridian, longitude) frame
};

/// Coefficient p/q produces a new meridian of slope p/q in the old frame;
/// 1/0 is the trivial surgery.
SurgeredTorus surged_meridian(const Slope& coefficient);

struct GapCheck {
  std::uint64_t ia = 0;
  std::uint64_t ib = 0;
  std::uint64_t gap = 0;
  bool pass = false;
};

/// Intersections of c with two adjacent close arcs and their difference.
/// Passes iff min(ia, ib) >= 2 and |ia - ib| >= 2. Throws Error{NotClose} or
/// Error{NotAdjacent} when the arcs do not qualify.
GapCheck gap_check(const Slope& c, const ArcSlope& alpha, const ArcSlope& beta);

// ---------------------------------------------------------------------------
// Independent geometric oracle.

enum class Carrier { Arc, Curve };

struct SlopeObject {
  Carrier kind;
  Slope slope;
};

struct OracleCount {
  std::uint64_t count = 0;
  bool degenerate = false;  // parallel objects; count is 0 by inspection
};

/// Counts transverse crossings of two straight families in the flat
/// once-punctured torus R^2 - Z^2 by explicit segment intersection: arcs are
/// lattice segments anchored at the puncture, closed curves are straight
/// lines pushed off the lattice by a fixed offset sequence. Uses no
/// closed-form intersection formula.
OracleCount lattice_oracle(const SlopeObject& first, const SlopeObject& second);

}  // namespace hsplit
