#include "hsplit/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "hsplit/error.hpp"

namespace hsplit {

// ---------------------------------------------------------------------------
// Marked model

std::string_view to_string(CurveName name) {
  switch (name) {
    case CurveName::BoundaryA: return "dA";
    case CurveName::BoundaryB: return "dB";
    case CurveName::Gamma: return "Gamma";
    case CurveName::GammaA: return "Gamma_A";
    case CurveName::GammaB: return "Gamma_B";
    case CurveName::LambdaA: return "lambda_A";
    case CurveName::LambdaB: return "lambda_B";
    case CurveName::LambdaAB: return "lambda_AB";
  }
  return "?";
}

CurveName curve_from_string(std::string_view name) {
  for (auto c : kAllCurves) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::UnknownCurve, "no curve named '" + std::string(name) + "'");
}

namespace {

using C = CurveName;

// Transcribed from the standard-triple pictures. Pairs not stated in words
// are filled from the arc picture: Gamma_A meets F_A in two meridional arcs
// and F_B in two longitudinal arcs (and symmetrically for Gamma_B); lambda_AB
// meets each of F_A, F_B in one longitudinal arc.
std::map<std::pair<C, C>, std::uint64_t> standard_table() {
  std::map<std::pair<C, C>, std::uint64_t> t;
  auto put = [&](C a, C b, std::uint64_t v) { t[a <= b ? std::pair{a, b} : std::pair{b, a}] = v; };
  for (auto c : kAllCurves) put(c, c, 0);
  put(C::BoundaryA, C::BoundaryB, 0);
  put(C::BoundaryA, C::Gamma, 0);
  put(C::BoundaryA, C::GammaA, 0);
  put(C::BoundaryA, C::GammaB, 2);
  put(C::BoundaryA, C::LambdaA, 1);
  put(C::BoundaryA, C::LambdaB, 0);
  put(C::BoundaryA, C::LambdaAB, 1);
  put(C::BoundaryB, C::Gamma, 0);
  put(C::BoundaryB, C::GammaA, 2);
  put(C::BoundaryB, C::GammaB, 0);
  put(C::BoundaryB, C::LambdaA, 0);
  put(C::BoundaryB, C::LambdaB, 1);
  put(C::BoundaryB, C::LambdaAB, 1);
  put(C::Gamma, C::GammaA, 4);
  put(C::Gamma, C::GammaB, 4);
  put(C::GammaA, C::GammaB, 4);
  put(C::Gamma, C::LambdaA, 0);
  put(C::Gamma, C::LambdaB, 0);
  put(C::Gamma, C::LambdaAB, 2);
  put(C::GammaA, C::LambdaA, 2);
  put(C::GammaA, C::LambdaB, 0);
  put(C::GammaA, C::LambdaAB, 0);
  put(C::GammaB, C::LambdaA, 0);
  put(C::GammaB, C::LambdaB, 2);
  put(C::GammaB, C::LambdaAB, 0);
  put(C::LambdaA, C::LambdaB, 0);
  put(C::LambdaA, C::LambdaAB, 0);
  put(C::LambdaB, C::LambdaAB, 0);
  return t;
}

bool in_triple_block(C c) { return c != C::BoundaryA && c != C::BoundaryB; }

}  // namespace

MarkedModel::MarkedModel() : table_(standard_table()) {}

MarkedModel::MarkedModel(std::map<std::pair<CurveName, CurveName>, std::uint64_t> table) : table_(std::move(table)) {}

bool MarkedModel::has(CurveName a, CurveName b) const { return table_.count(ordered(a, b)) != 0; }

std::uint64_t MarkedModel::intersection(CurveName a, CurveName b) const {
  auto it = table_.find(ordered(a, b));
  if (it == table_.end()) {
    throw Error(ErrorCode::UnknownCurve,
                "no entry for (" + std::string(to_string(a)) + ", " + std::string(to_string(b)) + ")");
  }
  return it->second;
}

MarkedModel MarkedModel::with_entry(CurveName a, CurveName b, std::uint64_t value) const {
  auto copy = table_;
  copy[ordered(a, b)] = value;
  return MarkedModel(std::move(copy));
}

CurveName rotate_triple(CurveName c) {
  switch (c) {
    case C::GammaA: return C::GammaB;
    case C::GammaB: return C::Gamma;
    case C::Gamma: return C::GammaA;
    case C::LambdaA: return C::LambdaB;
    case C::LambdaB: return C::LambdaAB;
    case C::LambdaAB: return C::LambdaA;
    default: return c;
  }
}

CurveName mirror_triple(CurveName c) {
  switch (c) {
    case C::BoundaryA: return C::BoundaryB;
    case C::BoundaryB: return C::BoundaryA;
    case C::GammaA: return C::GammaB;
    case C::GammaB: return C::GammaA;
    case C::LambdaA: return C::LambdaB;
    case C::LambdaB: return C::LambdaA;
    default: return c;
  }
}

bool standard_triple_check(const MarkedModel& m) {
  for (auto a : kAllCurves) {
    for (auto b : kAllCurves) {
      if (!m.has(a, b)) return false;
      const auto value = m.intersection(a, b);
      if (m.intersection(b, a) != value) return false;
      if (in_triple_block(a) && in_triple_block(b) && m.intersection(rotate_triple(a), rotate_triple(b)) != value) {
        return false;
      }
      if (m.intersection(mirror_triple(a), mirror_triple(b)) != value) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(Host h) { return h == Host::FA ? "F_A" : "F_B"; }
std::string_view to_string(Side s) { return s == Side::P ? "P" : "Q"; }
std::string_view to_string(Twist t) { return t == Twist::Left ? "left" : "right"; }

Twist twist_from_string(std::string_view text) {
  if (text == "left") return Twist::Left;
  if (text == "right") return Twist::Right;
  throw Error(ErrorCode::ParseError, "twist must be left or right, got '" + std::string(text) + "'");
}

std::uint64_t TwistedPresentation::total(Host h) const {
  std::uint64_t n = 0;
  for (const auto& f : families(h)) n += f.count;
  return n;
}

namespace {

std::vector<ArcFamily> negated(std::vector<ArcFamily> fams) {
  for (auto& f : fams) f.slope = f.slope.negated();
  std::sort(fams.begin(), fams.end(), [](const ArcFamily& a, const ArcFamily& b) { return a.slope < b.slope; });
  return fams;
}

}  // namespace

TwistedPresentation reflected(const TwistedPresentation& p) {
  TwistedPresentation out = p;
  out.direction = flipped(p.direction);
  out.families_fa = negated(p.families_fa);
  out.families_fb = negated(p.families_fb);
  return out;
}

// ---------------------------------------------------------------------------
// Square model of a side.
//
// The side surface (F_P or F_Q) is a punctured torus whose lattice cover is
// tiled by parallelograms spanned by the two rectangle transversals t1, t2.
// In the coordinates (a, b) of that basis, t1 edges are the lines b = const
// and t2 edges are the lines a = const, and every tile is a unit square.
// Removing the two rectangles leaves the octagon in the other host; its arcs
// are the segments of the traced line between consecutive edge crossings:
//   t1 -> t1 or t2 -> t2 : runs across the octagon (third slope)
//   t1 <-> t2             : cuts a corner, parallel to a rectangle side of the
//                           octagon host; opposite corners are the two copies
//                           of the same side.

namespace {

struct Vec {
  std::int64_t x;
  std::int64_t y;
};

__int128 cross(Vec a, Vec b) { return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x; }

Slope slope_of(Vec v) { return Slope(v.y, v.x); }

struct SideFrame {
  Vec u1;  // untwisted direction of transversal t1
  Vec u2;  // untwisted direction of transversal t2
  Host transversal_host;
  Slope rect1;  // slope of the rectangle crossed by t1, in the transversal host
  Slope rect2;
  Host octagon_host;
  Slope odd_corner;  // octagon-host slope of arcs cutting corners (1,0)/(0,1)
  Slope even_corner;
  Slope across_t1;  // t1 copy to t1 copy
  Slope across_t2;
};

// Dictionary between the untwisted frame and the two host frames, fixed so
// that the half-twisted boundary of Gamma_B shows slopes {inf, -1} in F_A and
// {0, 1} in F_B. The octagon host parallelogram is spanned by the two
// rectangle sides v1, v2; t1 copies sit at the corners on the v1 + v2
// diagonal and t2 copies at the corners on the v2 - v1 diagonal.
SideFrame frame_for(Side side, Twist direction) {
  SideFrame f{};
  if (side == Side::P) {
    f.u1 = {0, 1};  // meridional arc, crossing the -1 rectangle
    f.u2 = {1, 1};  // slope +1 arc, crossing the inf rectangle
    f.transversal_host = Host::FA;
    f.rect1 = Slope(-1, 1);
    f.rect2 = Slope(1, 0);
    f.octagon_host = Host::FB;
    const Vec v1{1, 0};
    const Vec v2{1, 1};
    f.odd_corner = slope_of(v1);
    f.even_corner = slope_of(v2);
    f.across_t1 = slope_of({v1.x + v2.x, v1.y + v2.y});
    f.across_t2 = slope_of({v2.x - v1.x, v2.y - v1.y});
  } else {
    f.u1 = {1, 0};   // slope 0 arc, crossing the +1 rectangle
    f.u2 = {1, -1};  // slope -1 arc, crossing the 0 rectangle
    f.transversal_host = Host::FB;
    f.rect1 = Slope(1, 1);
    f.rect2 = Slope(0, 1);
    f.octagon_host = Host::FA;
    const Vec v1{1, -1};
    const Vec v2{0, 1};
    f.odd_corner = slope_of(v1);
    f.even_corner = slope_of(v2);
    f.across_t1 = slope_of({v1.x + v2.x, v1.y + v2.y});
    f.across_t2 = slope_of({v2.x - v1.x, v2.y - v1.y});
  }
  if (direction == Twist::Right) {
    for (Slope* s : {&f.rect1, &f.rect2, &f.odd_corner, &f.even_corner, &f.across_t1, &f.across_t2}) {
      *s = s->negated();
    }
  }
  return f;
}

// Direction of the curve of slope r/s in the side's untwisted frame. The
// solid torus frame of the Q side is a quarter turn from that of the P side.
Vec side_direction(const Slope& c, Side side) {
  const Vec d{c.den(), c.num()};
  if (side == Side::P) return d;
  return {d.y, -d.x};
}

// Exact rational with positive denominator.
struct Frac {
  __int128 n;
  __int128 d;
};

bool less(const Frac& a, const Frac& b) { return a.n * b.d < b.n * a.d; }

__int128 floor_frac(const Frac& f) {
  __int128 q = f.n / f.d;
  if (f.n % f.d != 0 && f.n < 0) --q;
  return q;
}

enum class EdgeKind { T1, T2 };

struct Crossing {
  Frac time;  // in [0, 1) along one period
  EdgeKind kind;
};

constexpr std::int64_t kStartScale = 101;

void add_family(std::vector<ArcFamily>& fams, Host host, const Slope& slope, std::uint64_t n) {
  if (n == 0) return;
  for (auto& f : fams) {
    if (f.slope == slope) {
      f.count += n;
      return;
    }
  }
  fams.push_back({host, slope, n});
}

void sort_families(std::vector<ArcFamily>& fams) {
  std::sort(fams.begin(), fams.end(), [](const ArcFamily& a, const ArcFamily& b) { return a.slope < b.slope; });
}

// Corner of the unit square [ia, ia+1] x [ib, ib+1] at lattice point (ca, cb):
// odd for (1,0)/(0,1), even for (0,0)/(1,1).
bool odd_corner(__int128 ca, __int128 cb, __int128 ia, __int128 ib) { return ((ca - ia) + (cb - ib)) % 2 != 0; }

void require_distant(const Slope& c) {
  if (!is_distant_or_remote(c)) {
    throw Error(ErrorCode::NotDistant,
                "slope " + c.to_string() + " is " + std::string(to_string(classify(c))) + ", not distant");
  }
}

}  // namespace

TwistedPresentation cut_and_trace(const Slope& c, Side side, Twist direction) {
  require_distant(c);
  const SideFrame frame = frame_for(side, direction);
  const Vec d = side_direction(c, side);

  // Coordinates of d in the (u1, u2) basis; the basis is unimodular.
  const __int128 basis_det = cross(frame.u1, frame.u2);
  const __int128 a = cross(d, frame.u2) / basis_det;
  const __int128 b = cross(frame.u1, d) / basis_det;

  // Start point (sa, sb) / kStartScale chosen so the line misses every
  // lattice point: a * sb - b * sa must not be a multiple of the scale.
  __int128 sa = 37;
  __int128 sb = 59;
  while ((a * sb - b * sa) % kStartScale == 0) {
    sa += 1;
    sb += 3;
  }

  // Crossings with a = m happen at t = (m * K - sa) / (a * K), t in [0, 1).
  std::vector<Crossing> events;
  auto collect = [&](__int128 step, __int128 start, EdgeKind kind) {
    if (step == 0) return;
    const __int128 lo = std::min<__int128>(start, start + step * kStartScale);
    const __int128 hi = std::max<__int128>(start, start + step * kStartScale);
    __int128 m = lo / kStartScale - 1;
    for (; m * kStartScale <= hi + kStartScale; ++m) {
      Frac t{m * kStartScale - start, step * kStartScale};
      if (t.d < 0) {
        t.n = -t.n;
        t.d = -t.d;
      }
      if (t.n >= 0 && t.n < t.d) events.push_back({t, kind});
    }
  };
  collect(a, sa, EdgeKind::T2);
  collect(b, sb, EdgeKind::T1);
  std::sort(events.begin(), events.end(), [](const Crossing& x, const Crossing& y) { return less(x.time, y.time); });

  TwistedPresentation out;
  out.source_slope = c;
  out.side = side;
  out.direction = direction;
  std::vector<ArcFamily> transversal_fams;
  std::vector<ArcFamily> octagon_fams;

  for (const auto& e : events) {
    add_family(transversal_fams, frame.transversal_host, e.kind == EdgeKind::T1 ? frame.rect1 : frame.rect2, 1);
  }

  const std::size_t n = events.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Crossing& entry = events[i];
    Crossing exit = events[(i + 1) % n];
    if (i + 1 == n) exit.time.n += exit.time.d;  // next period

    Slope arc_slope;
    if (entry.kind == exit.kind) {
      arc_slope = entry.kind == EdgeKind::T1 ? frame.across_t1 : frame.across_t2;
    } else {
      // Locate the tile from the segment midpoint, then the shared corner.
      const Frac mid{entry.time.n * exit.time.d + exit.time.n * entry.time.d, 2 * entry.time.d * exit.time.d};
      const Frac pa{sa * mid.d + a * mid.n * kStartScale, kStartScale * mid.d};
      const Frac pb{sb * mid.d + b * mid.n * kStartScale, kStartScale * mid.d};
      const __int128 ia = floor_frac(pa);
      const __int128 ib = floor_frac(pb);
      // The T2 crossing lies on a = ia or ia + 1 (by direction), the T1
      // crossing on b = ib or ib + 1.
      const Crossing& t2 = entry.kind == EdgeKind::T2 ? entry : exit;
      const Crossing& t1 = entry.kind == EdgeKind::T1 ? entry : exit;
      const bool t2_is_entry = &t2 == &entry;
      const bool t1_is_entry = &t1 == &entry;
      const __int128 ca = (a > 0) == t2_is_entry ? ia : ia + 1;
      const __int128 cb = (b > 0) == t1_is_entry ? ib : ib + 1;
      arc_slope = odd_corner(ca, cb, ia, ib) ? frame.odd_corner : frame.even_corner;
    }
    add_family(octagon_fams, frame.octagon_host, arc_slope, 1);
  }

  sort_families(transversal_fams);
  sort_families(octagon_fams);
  if (frame.transversal_host == Host::FA) {
    out.families_fa = std::move(transversal_fams);
    out.families_fb = std::move(octagon_fams);
  } else {
    out.families_fb = std::move(transversal_fams);
    out.families_fa = std::move(octagon_fams);
  }
  return out;
}

TwistBounds half_twist_families(const Slope& c, Side side, Twist direction) {
  require_distant(c);
  const std::uint64_t s = static_cast<std::uint64_t>(c.den());
  const std::uint64_t r_minus_s = det_distance(c, Slope(1, 1));  // |r - s|
  auto oriented = [&](Slope x) { return direction == Twist::Left ? x : x.negated(); };

  TwistBounds out;
  out.source_slope = c;
  out.side = side;
  out.direction = direction;
  if (side == Side::P) {
    out.exact_host = Host::FA;
    out.exact_families = {{Host::FA, oriented(Slope(-1, 1)), s}, {Host::FA, oriented(Slope(1, 0)), r_minus_s}};
    out.octagon_host = Host::FB;
    out.octagon_close_slopes = {oriented(Slope(0, 1)), oriented(Slope(1, 1))};
    out.octagon_third_candidates = {oriented(Slope(1, 0)), oriented(Slope(1, 2))};
  } else {
    out.exact_host = Host::FB;
    out.exact_families = {{Host::FB, oriented(Slope(1, 1)), s}, {Host::FB, oriented(Slope(0, 1)), r_minus_s}};
    out.octagon_host = Host::FA;
    out.octagon_close_slopes = {oriented(Slope(-1, 1)), oriented(Slope(1, 0))};
    out.octagon_third_candidates = {oriented(Slope(0, 1)), oriented(Slope(-2, 1))};
  }
  sort_families(out.exact_families);
  const std::uint64_t lo = std::min(s, r_minus_s);
  const std::uint64_t hi = std::max(s, r_minus_s);
  out.octagon_close_total = 2 * lo;
  out.octagon_third_count = hi - lo;
  return out;
}

TemplateRectangles template_rectangles(Twist direction) {
  TemplateRectangles t;
  if (direction == Twist::Left) {
    t.fa_slopes = {Slope(-1, 1), Slope(1, 0)};
    t.fb_slopes = {Slope(0, 1), Slope(1, 1)};
  } else {
    t.fa_slopes = {Slope(1, 1), Slope(1, 0)};
    t.fb_slopes = {Slope(-1, 1), Slope(0, 1)};
  }
  std::sort(t.fa_slopes.begin(), t.fa_slopes.end());
  std::sort(t.fb_slopes.begin(), t.fb_slopes.end());
  t.fa_counts = {2, 2};
  t.fb_counts = {2, 2};
  t.untwisted_fa_slope = Slope(1, 0);
  t.untwisted_fa_arcs = 2;
  t.untwisted_lambda_b_crossings = 0;
  return t;
}

TemplateRectangles trace_template(Twist direction) {
  // The boundary of F_P is a small loop around the puncture. Going around it
  // passes the four ends of the transversals (each end is a long side of a
  // rectangle in F_A) and the four tile corners at the puncture (each corner
  // is a rectangle side in F_B).
  const SideFrame frame = frame_for(Side::P, direction);
  std::vector<ArcFamily> fa;
  std::vector<ArcFamily> fb;
  constexpr int kSigns[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
  for (const auto& q : kSigns) {
    // Quadrant (sign a, sign b) lies in the tile with lower-left corner
    // (min(0, sign a), min(0, sign b)), touching the puncture at (0, 0).
    const __int128 ia = q[0] > 0 ? 0 : -1;
    const __int128 ib = q[1] > 0 ? 0 : -1;
    add_family(fb, Host::FB, odd_corner(0, 0, ia, ib) ? frame.odd_corner : frame.even_corner, 1);
  }
  // Rays a > 0 and a < 0 lie on the t1 line b = 0; rays b > 0, b < 0 on t2.
  add_family(fa, Host::FA, frame.rect1, 2);
  add_family(fa, Host::FA, frame.rect2, 2);
  sort_families(fa);
  sort_families(fb);

  TemplateRectangles t;
  for (const auto& f : fa) {
    t.fa_slopes.push_back(f.slope);
    t.fa_counts.push_back(f.count);
  }
  for (const auto& f : fb) {
    t.fb_slopes.push_back(f.slope);
    t.fb_counts.push_back(f.count);
  }
  // Before the twist, Gamma_A crosses F_A in two meridional arcs; lambda_B
  // lives in F_B, so the crossing count is a pure host mismatch.
  t.untwisted_fa_slope = Slope(1, 0);
  t.untwisted_fa_arcs = 2;
  t.untwisted_lambda_b_crossings = 0;
  return t;
}

TwistedPresentation twisted_separating_curve(Twist direction) {
  const TemplateRectangles t = trace_template(direction);
  TwistedPresentation p;
  p.source_slope = Slope(1, 0);
  p.side = Side::P;
  p.direction = direction;
  for (std::size_t i = 0; i < t.fa_slopes.size(); ++i) p.families_fa.push_back({Host::FA, t.fa_slopes[i], t.fa_counts[i]});
  for (std::size_t i = 0; i < t.fb_slopes.size(); ++i) p.families_fb.push_back({Host::FB, t.fb_slopes[i], t.fb_counts[i]});
  return p;
}

}  // namespace hsplit
