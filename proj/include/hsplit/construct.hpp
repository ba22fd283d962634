#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsplit/certify.hpp"
#include "hsplit/error.hpp"
#include "hsplit/farey.hpp"
#include "hsplit/surface.hpp"

namespace hsplit {

/// Surgery coefficients on the four link cores.
struct SurgerySpec {
  Slope slope_cx = Slope(1, 0);
  Slope slope_cy = Slope(1, 0);
  Slope slope_ca = Slope(1, 0);
  Slope slope_cb = Slope(1, 0);
  Twist twist_direction = Twist::Left;
  bool pair_mode = true;
  Identification identification = Identification::H2;

  friend bool operator==(const SurgerySpec&, const SurgerySpec&) = default;
};

/// Returns `s` when its class gates pass. Checks X, Y, A, B and then the
/// pair-mode gate on X, throwing the first failure with the core named.
SurgerySpec validate_spec(const SurgerySpec& s);

/// Meridians of H are the surged cores A and B; x and y are traced on sides
/// P and Q. A right twist builds the mirror image, so the meridians are
/// reflected along with the traced arcs. Under h0 the descriptor is the
/// untwisted one and x, y are closed curves in F_A and F_B.
SplittingDescriptor build_splitting(const SurgerySpec& s);

/// Swaps the roles of c_X and c_B and flips the twist. Involution.
/// Throws Error{NotPairMode}.
SurgerySpec exchange_cores(const SurgerySpec& s);

/// Labels of the four (curve, host) slots, in order.
inline constexpr std::array<std::pair<CurveRole, Host>, 4> kInvariantSlots{{
    {CurveRole::X, Host::FA},
    {CurveRole::X, Host::FB},
    {CurveRole::Y, Host::FA},
    {CurveRole::Y, Host::FB},
}};

struct InvariantReport {
  // |a.x|, |a.y|, |b.x|, |b.y|
  std::array<std::uint64_t, 4> quadruple{};
  // Sorted distinct denominators per slot of kInvariantSlots.
  std::array<std::vector<std::uint64_t>, 4> denom_tuples;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

/// Throws Error{MalformedDescriptor} unless x and y are twisted presentations.
InvariantReport invariants(const SplittingDescriptor& d);

/// Equality of the reports as unordered values: the slot matrix is compared up
/// to exchanging the curves, the hosts, and the two sides of the splitting.
bool same_unordered(const InvariantReport& a, const InvariantReport& b);

enum class PairVerdict { Distinguishable, Inconclusive };
std::string_view to_string(PairVerdict v);
PairVerdict pair_verdict_from_string(std::string_view text);

struct PairReport {
  SurgerySpec spec;
  SurgerySpec exchanged_spec;
  Distance3Certificate certificate_1;
  Distance3Certificate certificate_2;
  InvariantReport invariants_1;
  InvariantReport invariants_2;
  PairVerdict verdict = PairVerdict::Inconclusive;
  friend bool operator==(const PairReport&, const PairReport&) = default;
};

PairReport compare_pair(const SurgerySpec& s);

// ---------------------------------------------------------------------------
// Sampling

/// What happened to one sampled spec.
struct SpecOutcome {
  std::optional<ErrorCode> rejection;
  bool certified_1 = false;
  bool certified_2 = false;
  bool distinguishable = false;

  bool valid() const { return !rejection.has_value(); }
  friend bool operator==(const SpecOutcome&, const SpecOutcome&) = default;
};

/// Runs validate, build, certify and (in pair mode) compare on one spec.
SpecOutcome evaluate_spec(const SurgerySpec& s);

struct SampleStats {
  std::uint64_t n = 0;
  std::int64_t height = 0;
  std::uint64_t seed = 0;
  bool pair_mode = true;
  std::uint64_t valid = 0;
  std::uint64_t certified = 0;        // valid specs whose splittings all certify
  std::uint64_t distinguishable = 0;  // certified pairs with differing invariants
  std::map<std::string, std::uint64_t> rejections;

  Ratio valid_fraction() const { return {valid, n}; }
  Ratio certified_fraction() const { return {certified, valid}; }
  Ratio distinguishable_fraction() const { return {distinguishable, pair_mode ? certified : 0}; }

  friend bool operator==(const SampleStats&, const SampleStats&) = default;
};

/// n specs from a seeded stream; every coordinate is uniform over
/// slopes_in_box(height).
std::vector<SurgerySpec> draw_specs(std::uint64_t n, std::int64_t height, std::uint64_t seed, bool pair_mode);

/// Throws Error{FlagError} when n or height is zero or negative.
SampleStats sample_generic(std::uint64_t n, std::int64_t height, std::uint64_t seed, bool pair_mode = true);

/// Tally of outcomes in input order.
SampleStats tally(const std::vector<SpecOutcome>& outcomes, std::uint64_t n, std::int64_t height,
                  std::uint64_t seed, bool pair_mode);

// ---------------------------------------------------------------------------
// Spec files

/// Flat "key = value" lines; '#' starts a comment. Slope keys are required;
/// twist defaults to left, mode to pair, identification to h2.
/// Throws Error{ParseError}.
SurgerySpec parse_spec(std::string_view text);

/// Inverse of parse_spec.
std::string format_spec(const SurgerySpec& s);

}  // namespace hsplit
