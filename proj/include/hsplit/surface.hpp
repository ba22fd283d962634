#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hsplit/farey.hpp"
#include "hsplit/ptorus.hpp"

namespace hsplit {

// ---------------------------------------------------------------------------
// Marked genus-2 model.

enum class CurveName { BoundaryA, BoundaryB, Gamma, GammaA, GammaB, LambdaA, LambdaB, LambdaAB };

inline constexpr std::array<CurveName, 8> kAllCurves{CurveName::BoundaryA, CurveName::BoundaryB, CurveName::Gamma,
                                                      CurveName::GammaA,    CurveName::GammaB,    CurveName::LambdaA,
                                                      CurveName::LambdaB,   CurveName::LambdaAB};

std::string_view to_string(CurveName name);
/// Throws Error{UnknownCurve}.
CurveName curve_from_string(std::string_view name);

/// Named curves of the standard triple with a transcribed, symmetric table of
/// geometric intersection numbers. Immutable once built.
class MarkedModel {
 public:
  /// The standard model.
  MarkedModel();

  /// Model with an explicit table. Missing pairs are unknown curves.
  explicit MarkedModel(std::map<std::pair<CurveName, CurveName>, std::uint64_t> table);

  /// Throws Error{UnknownCurve} if either name has no entry.
  std::uint64_t intersection(CurveName a, CurveName b) const;

  bool has(CurveName a, CurveName b) const;

  /// Copy with one symmetric entry replaced.
  MarkedModel with_entry(CurveName a, CurveName b, std::uint64_t value) const;

  /// Copy with every curve renamed through `perm`.
  template <typename Perm>
  MarkedModel relabeled(Perm perm) const {
    std::map<std::pair<CurveName, CurveName>, std::uint64_t> out;
    for (const auto& [key, value] : table_) out[ordered(perm(key.first), perm(key.second))] = value;
    return MarkedModel(std::move(out));
  }

  const std::map<std::pair<CurveName, CurveName>, std::uint64_t>& table() const { return table_; }

  friend bool operator==(const MarkedModel&, const MarkedModel&) = default;

 private:
  static std::pair<CurveName, CurveName> ordered(CurveName a, CurveName b) {
    return a <= b ? std::pair{a, b} : std::pair{b, a};
  }
  std::map<std::pair<CurveName, CurveName>, std::uint64_t> table_;
};

/// Cyclic symmetry of the triple: lambda_A -> lambda_B -> lambda_AB and
/// Gamma_A -> Gamma_B -> Gamma. Fixes the meridian boundaries.
CurveName rotate_triple(CurveName c);
/// Left/right mirror: exchanges the A and B labels, fixes Gamma and lambda_AB.
CurveName mirror_triple(CurveName c);

/// True iff the separating-curve/longitude block is invariant under
/// rotate_triple and the whole table is invariant under mirror_triple.
bool standard_triple_check(const MarkedModel& m);

inline std::uint64_t named_intersection(const MarkedModel& m, CurveName a, CurveName b) {
  return m.intersection(a, b);
}

// ---------------------------------------------------------------------------
// Arc families of twisted curves.

enum class Host { FA, FB };
enum class Side { P, Q };
enum class Twist { Left, Right };

std::string_view to_string(Host h);
std::string_view to_string(Side s);
std::string_view to_string(Twist t);
Twist twist_from_string(std::string_view text);
inline Twist flipped(Twist t) { return t == Twist::Left ? Twist::Right : Twist::Left; }

struct ArcFamily {
  Host host;
  Slope slope;  // in the host frame (meridian boundary, longitude)
  std::uint64_t count;

  friend bool operator==(const ArcFamily&, const ArcFamily&) = default;
};

/// The arcs of a twisted curve in F_A and F_B, grouped by slope. Families in
/// each list are sorted by slope and have distinct slopes.
struct TwistedPresentation {
  Slope source_slope;
  Side side = Side::P;
  Twist direction = Twist::Left;
  std::vector<ArcFamily> families_fa;
  std::vector<ArcFamily> families_fb;

  const std::vector<ArcFamily>& families(Host h) const { return h == Host::FA ? families_fa : families_fb; }
  std::uint64_t total(Host h) const;

  friend bool operator==(const TwistedPresentation&, const TwistedPresentation&) = default;
};

/// Negates every family slope; the image under the mirror that exchanges left
/// and right half-twists.
TwistedPresentation reflected(const TwistedPresentation& p);

struct TemplateRectangles {
  std::vector<Slope> fa_slopes;  // sorted
  std::vector<Slope> fb_slopes;  // sorted
  std::vector<std::uint64_t> fa_counts;
  std::vector<std::uint64_t> fb_counts;
  // Untwisted Gamma_A: its arcs in F_A and their crossings with lambda_B.
  Slope untwisted_fa_slope;
  std::uint64_t untwisted_fa_arcs = 0;
  std::uint64_t untwisted_lambda_b_crossings = 0;

  friend bool operator==(const TemplateRectangles&, const TemplateRectangles&) = default;
};

/// Published rectangles of the half-twisted boundary of Gamma_B.
TemplateRectangles template_rectangles(Twist direction);

/// Same data, recomputed by walking the boundary of F_P around the puncture in
/// the traced square model.
TemplateRectangles trace_template(Twist direction);

/// Guaranteed content of a half-twisted curve, without the octagon split.
struct TwistBounds {
  Slope source_slope;
  Side side = Side::P;
  Twist direction = Twist::Left;
  Host exact_host = Host::FA;  // host where the families are exact
  std::vector<ArcFamily> exact_families;
  Host octagon_host = Host::FB;
  std::array<Slope, 2> octagon_close_slopes;  // boundary-parallel arcs use one or both
  std::uint64_t octagon_close_total = 0;      // 2 * min
  std::array<Slope, 2> octagon_third_candidates;
  std::uint64_t octagon_third_count = 0;  // ||r - s| - |s||
};

/// Closed-form counts for a curve of distant slope r/s after the half-twist.
/// Throws Error{NotDistant}.
TwistBounds half_twist_families(const Slope& c, Side side, Twist direction);

/// Realizes c in the flat punctured torus of its side, cuts along the two
/// rectangle transversals, traces every arc and reports exact families in
/// both hosts. Throws Error{NotDistant}.
TwistedPresentation cut_and_trace(const Slope& c, Side side, Twist direction);

/// The separating J-meridian after the half-twist (image of Lambda); carries
/// the template rectangles as its families.
TwistedPresentation twisted_separating_curve(Twist direction);

}  // namespace hsplit
