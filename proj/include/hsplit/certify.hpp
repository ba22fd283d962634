#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hsplit/farey.hpp"
#include "hsplit/surface.hpp"

namespace hsplit {

/// A J-meridian that never meets Gamma: a closed curve inside one host.
struct ClosedCurve {
  Host host;
  Slope slope;
  friend bool operator==(const ClosedCurve&, const ClosedCurve&) = default;
};

using JCurve = std::variant<TwistedPresentation, ClosedCurve>;

enum class Identification { H0, H2 };
std::string_view to_string(Identification id);
Identification identification_from_string(std::string_view text);

enum class CurveRole { X, Y };
std::string_view to_string(CurveRole c);

/// Genus-2 splitting H u J described by the meridian slopes of H (after
/// surgery) and the arcs of J's meridians x, y in F_A and F_B.
struct SplittingDescriptor {
  Slope meridian_a = Slope(1, 0);
  Slope meridian_b = Slope(1, 0);
  JCurve x;
  JCurve y;
  Identification identification = Identification::H2;
  Twist direction = Twist::Left;

  const JCurve& curve(CurveRole c) const { return c == CurveRole::X ? x : y; }
  const Slope& meridian(Host h) const { return h == Host::FA ? meridian_a : meridian_b; }

  friend bool operator==(const SplittingDescriptor&, const SplittingDescriptor&) = default;
};

/// Throws Error{MalformedDescriptor} describing the first structural problem:
/// h2 needs twisted x on side P and y on side Q; h0 needs closed curves;
/// families must be non-empty counts with distinct slopes, at most three per
/// host, tagged with the right host.
void validate_descriptor(const SplittingDescriptor& d);

// ---------------------------------------------------------------------------
// Denominators

/// Crossings of an arc of the given slope with the meridian of its host.
std::uint64_t denominator(const ArcSlope& arc, const Slope& meridian);

struct DenominatorWitness {
  Slope slope;
  std::uint64_t count;
  std::uint64_t denominator;
  friend bool operator==(const DenominatorWitness&, const DenominatorWitness&) = default;
};

struct DenominatorSet {
  Host host = Host::FA;
  std::vector<DenominatorWitness> witnesses;  // one per family, in family order

  std::set<std::uint64_t> values() const;
};

/// Throws Error{EmptyIntersection} when `families` is empty.
DenominatorSet denom_set(const std::vector<ArcFamily>& families, const Slope& meridian);

/// True iff some r, s in the set satisfy 2 <= r <= s - 2.
bool has_high_denominators(const std::set<std::uint64_t>& values);
inline bool has_high_denominators(const DenominatorSet& d) { return has_high_denominators(d.values()); }

// ---------------------------------------------------------------------------
// Rectangle condition and certificates

/// Two families of one curve in one host, each a rectangle (count >= 2),
/// with denominators r >= 2 and s >= r + 2.
struct RectangleWitness {
  CurveRole curve = CurveRole::X;
  Host host = Host::FA;
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  Slope slope_r;
  std::uint64_t count_r = 0;
  Slope slope_s;
  std::uint64_t count_s = 0;

  /// Re-checks the witness from its own fields.
  bool valid() const { return r >= 2 && s >= r + 2 && count_r >= 2 && count_s >= 2; }
  friend bool operator==(const RectangleWitness&, const RectangleWitness&) = default;
};

struct RectangleFailure {
  CurveRole curve = CurveRole::X;
  Host host = Host::FA;
  std::string reason;
  friend bool operator==(const RectangleFailure&, const RectangleFailure&) = default;
};

struct RectangleCondition {
  bool pass = false;
  std::vector<RectangleWitness> witnesses;  // in order x/F_A, x/F_B, y/F_A, y/F_B
  std::vector<RectangleFailure> failures;
  std::uint64_t total_arc_count = 0;
};

/// Searches for the four rectangle witnesses. Throws Error{MalformedDescriptor}.
RectangleCondition rectangle_condition(const SplittingDescriptor& d);

enum class Verdict { Certified, NotCertified };
std::string_view to_string(Verdict v);

inline constexpr std::uint64_t kMinimumArcCount = 16;

struct Distance3Certificate {
  Verdict verdict = Verdict::NotCertified;
  std::vector<RectangleWitness> witnesses;
  std::uint64_t total_arc_count = 0;
  bool arc_floor_met = false;  // total_arc_count >= 16, reported only
  std::optional<RectangleFailure> failure;
  // x and y lie on opposite sides of the twisted separating curve, so every
  // rectangle between parallel arcs of one is free of the other.
  std::string structural_precondition;

  /// Re-checks the certificate from its own contents.
  bool self_consistent() const;
  friend bool operator==(const Distance3Certificate&, const Distance3Certificate&) = default;
};

/// Certified iff the high denominator rectangle condition holds in F.
/// Throws Error{MalformedDescriptor}.
Distance3Certificate certify_distance3(const SplittingDescriptor& d);

struct StrictWitness {
  Host host;
  CurveRole curve;
  Slope slope;
  std::uint64_t denominator;
  friend bool operator==(const StrictWitness&, const StrictWitness&) = default;
};

struct SumsResult {
  bool is_sums = false;
  bool rectangle_pass = false;
  std::vector<StrictWitness> strict_witnesses;  // one per host when found
  friend bool operator==(const SumsResult&, const SumsResult&) = default;
};

/// {A, B} is certified a set of strict universal minimizers when the
/// rectangle condition holds and each host carries a denominator >= 3.
SumsResult certify_sums(const SplittingDescriptor& d);

// ---------------------------------------------------------------------------
// Pants bookkeeping

struct PantsCounts {
  std::uint64_t p = 0;  // arcs joining the two copies of dA
  std::uint64_t q = 0;  // arcs from one copy of dA to Gamma
};

struct PantsTotals {
  std::uint64_t boundary_count = 0;  // |C n dA| = p + q
  std::uint64_t gamma_count = 0;     // |C n Gamma| = 2q
};

PantsTotals pants_counts(const PantsCounts& pattern);

// ---------------------------------------------------------------------------
// Bounded falsifier

struct DcpWitness {
  std::string curve;
  std::string h_meridian;
  std::string j_meridian;
  friend bool operator==(const DcpWitness&, const DcpWitness&) = default;
};

/// Looks for an essential curve disjoint from some meridian of each
/// handlebody among slope-representable candidates: Gamma and closed curves
/// of height <= height_bound in F_A and F_B, against the H-meridians
/// {dA, dB, Gamma} and the J-meridians {x, y, image of Lambda}. Returns the
/// first triple in that fixed order. A bound of 0 searches nothing.
std::optional<DcpWitness> bounded_dcp_search(const SplittingDescriptor& d, std::int64_t height_bound);

}  // namespace hsplit
