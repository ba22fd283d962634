#include "hsplit/certify.hpp"

#include <algorithm>
#include <sstream>

#include "hsplit/error.hpp"

namespace hsplit {

std::string_view to_string(Identification id) { return id == Identification::H0 ? "h0" : "h2"; }

Identification identification_from_string(std::string_view text) {
  if (text == "h0") return Identification::H0;
  if (text == "h2") return Identification::H2;
  throw Error(ErrorCode::ParseError, "identification must be h0 or h2, got '" + std::string(text) + "'");
}

std::string_view to_string(CurveRole c) { return c == CurveRole::X ? "x" : "y"; }

std::string_view to_string(Verdict v) { return v == Verdict::Certified ? "Certified" : "NotCertified"; }

namespace {

void malformed(const std::string& what) { throw Error(ErrorCode::MalformedDescriptor, what); }

void check_families(const std::vector<ArcFamily>& fams, Host host, CurveRole role) {
  const std::string where = std::string(to_string(role)) + " in " + std::string(to_string(host));
  if (fams.size() > 3) malformed(where + " has more than three arc families");
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (fams[i].host != host) malformed(where + " carries a family tagged for the other host");
    if (fams[i].count == 0) malformed(where + " has an empty family");
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      if (fams[i].slope == fams[j].slope) malformed(where + " repeats slope " + fams[i].slope.to_string());
    }
  }
}

}  // namespace

void validate_descriptor(const SplittingDescriptor& d) {
  for (auto role : {CurveRole::X, CurveRole::Y}) {
    const JCurve& c = d.curve(role);
    if (d.identification == Identification::H2) {
      const auto* t = std::get_if<TwistedPresentation>(&c);
      if (t == nullptr) malformed(std::string(to_string(role)) + " must be a twisted presentation under h2");
      const Side want = role == CurveRole::X ? Side::P : Side::Q;
      if (t->side != want) {
        malformed(std::string(to_string(role)) + " must lie on side " + std::string(to_string(want)));
      }
      check_families(t->families_fa, Host::FA, role);
      check_families(t->families_fb, Host::FB, role);
    } else if (!std::holds_alternative<ClosedCurve>(c)) {
      malformed(std::string(to_string(role)) + " must be a closed curve under h0");
    }
  }
}

std::uint64_t denominator(const ArcSlope& arc, const Slope& meridian) { return det_distance(arc, meridian); }

std::set<std::uint64_t> DenominatorSet::values() const {
  std::set<std::uint64_t> out;
  for (const auto& w : witnesses) out.insert(w.denominator);
  return out;
}

DenominatorSet denom_set(const std::vector<ArcFamily>& families, const Slope& meridian) {
  if (families.empty()) throw Error(ErrorCode::EmptyIntersection, "curve does not meet Gamma essentially");
  DenominatorSet out;
  out.host = families.front().host;
  for (const auto& f : families) out.witnesses.push_back({f.slope, f.count, denominator(f.slope, meridian)});
  return out;
}

bool has_high_denominators(const std::set<std::uint64_t>& values) {
  for (auto r : values) {
    if (r < 2) continue;
    if (values.lower_bound(r + 2) != values.end()) return true;
  }
  return false;
}

namespace {

std::string list_denominators(const std::vector<DenominatorWitness>& ws) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    os << (i ? ", " : "") << ws[i].slope.to_string() << " x" << ws[i].count << " -> " << ws[i].denominator;
  }
  os << "}";
  return os.str();
}

// Smallest admissible r, then the largest s paired with it.
std::optional<RectangleWitness> find_witness(const std::vector<ArcFamily>& fams, const Slope& meridian,
                                             CurveRole role, Host host, std::string& reason) {
  if (fams.empty()) {
    reason = "curve has no arcs in this host";
    return std::nullopt;
  }
  const DenominatorSet ds = denom_set(fams, meridian);
  std::optional<RectangleWitness> best;
  for (const auto& lo : ds.witnesses) {
    if (lo.count < 2 || lo.denominator < 2) continue;
    for (const auto& hi : ds.witnesses) {
      if (&hi == &lo || hi.count < 2 || hi.denominator < lo.denominator + 2) continue;
      const bool better = !best || lo.denominator < best->r || (lo.denominator == best->r && hi.denominator > best->s);
      if (better) best = RectangleWitness{role, host, lo.denominator, hi.denominator, lo.slope, lo.count, hi.slope, hi.count};
    }
  }
  if (!best) reason = "no pair of rectangles with r >= 2 and s >= r + 2 among " + list_denominators(ds.witnesses);
  return best;
}

const std::vector<ArcFamily>& families_or_empty(const JCurve& c, Host h) {
  static const std::vector<ArcFamily> kNone;
  if (const auto* t = std::get_if<TwistedPresentation>(&c)) return t->families(h);
  return kNone;
}

}  // namespace

RectangleCondition rectangle_condition(const SplittingDescriptor& d) {
  validate_descriptor(d);
  RectangleCondition out;
  for (auto role : {CurveRole::X, CurveRole::Y}) {
    for (auto host : {Host::FA, Host::FB}) {
      const auto& fams = families_or_empty(d.curve(role), host);
      for (const auto& f : fams) out.total_arc_count += f.count;
      std::string reason;
      if (auto w = find_witness(fams, d.meridian(host), role, host, reason)) {
        out.witnesses.push_back(*w);
      } else {
        out.failures.push_back({role, host, reason});
      }
    }
  }
  out.pass = out.failures.empty();
  return out;
}

bool Distance3Certificate::self_consistent() const {
  if (verdict == Verdict::NotCertified) return failure.has_value();
  if (witnesses.size() != 4 || total_arc_count < kMinimumArcCount) return false;
  for (const auto& w : witnesses) {
    if (!w.valid()) return false;
  }
  for (auto role : {CurveRole::X, CurveRole::Y}) {
    for (auto host : {Host::FA, Host::FB}) {
      auto hit = std::find_if(witnesses.begin(), witnesses.end(),
                              [&](const RectangleWitness& w) { return w.curve == role && w.host == host; });
      if (hit == witnesses.end()) return false;
    }
  }
  return true;
}

Distance3Certificate certify_distance3(const SplittingDescriptor& d) {
  const RectangleCondition rc = rectangle_condition(d);
  Distance3Certificate cert;
  cert.verdict = rc.pass ? Verdict::Certified : Verdict::NotCertified;
  cert.witnesses = rc.witnesses;
  cert.total_arc_count = rc.total_arc_count;
  cert.arc_floor_met = rc.total_arc_count >= kMinimumArcCount;
  if (!rc.failures.empty()) cert.failure = rc.failures.front();
  if (d.identification == Identification::H2) {
    cert.structural_precondition = "x on side P and y on side Q of the twisted separating curve";
  } else {
    cert.structural_precondition = "standard identification; x and y do not meet Gamma";
  }
  return cert;
}

SumsResult certify_sums(const SplittingDescriptor& d) {
  const RectangleCondition rc = rectangle_condition(d);
  SumsResult out;
  out.rectangle_pass = rc.pass;
  bool strict_everywhere = true;
  for (auto host : {Host::FA, Host::FB}) {
    std::optional<StrictWitness> best;
    for (auto role : {CurveRole::X, CurveRole::Y}) {
      for (const auto& f : families_or_empty(d.curve(role), host)) {
        const auto den = denominator(f.slope, d.meridian(host));
        if (den >= 3 && (!best || den > best->denominator)) best = StrictWitness{host, role, f.slope, den};
      }
    }
    if (best) {
      out.strict_witnesses.push_back(*best);
    } else {
      strict_everywhere = false;
    }
  }
  out.is_sums = rc.pass && strict_everywhere;
  return out;
}

PantsTotals pants_counts(const PantsCounts& pattern) { return {pattern.p + pattern.q, 2 * pattern.q}; }

// ---------------------------------------------------------------------------
// Falsifier

namespace {

struct GammaCurve {};

struct Probe {
  std::string name;
  std::variant<GammaCurve, ClosedCurve, TwistedPresentation> shape;
};

std::uint64_t arcs_against(const Slope& slope, const std::vector<ArcFamily>& fams) {
  std::uint64_t n = 0;
  for (const auto& f : fams) n += f.count * det_distance(slope, f.slope);
  return n;
}

std::uint64_t meet(const Probe& a, const Probe& b) {
  return std::visit(
      [](const auto& u, const auto& v) -> std::uint64_t {
        using U = std::decay_t<decltype(u)>;
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<U, GammaCurve> && std::is_same_v<V, GammaCurve>) {
          return 0;
        } else if constexpr (std::is_same_v<U, GammaCurve> && std::is_same_v<V, ClosedCurve>) {
          return 0;
        } else if constexpr (std::is_same_v<U, ClosedCurve> && std::is_same_v<V, GammaCurve>) {
          return 0;
        } else if constexpr (std::is_same_v<U, GammaCurve> && std::is_same_v<V, TwistedPresentation>) {
          return v.total(Host::FA);
        } else if constexpr (std::is_same_v<U, TwistedPresentation> && std::is_same_v<V, GammaCurve>) {
          return u.total(Host::FA);
        } else if constexpr (std::is_same_v<U, ClosedCurve> && std::is_same_v<V, ClosedCurve>) {
          return u.host == v.host ? det_distance(u.slope, v.slope) : 0;
        } else if constexpr (std::is_same_v<U, ClosedCurve> && std::is_same_v<V, TwistedPresentation>) {
          return arcs_against(u.slope, v.families(u.host));
        } else if constexpr (std::is_same_v<U, TwistedPresentation> && std::is_same_v<V, ClosedCurve>) {
          return arcs_against(v.slope, u.families(v.host));
        } else {
          // Two J-side curves are never compared by the search.
          throw Error(ErrorCode::MalformedDescriptor, "cannot compare two twisted curves");
        }
      },
      a.shape, b.shape);
}

Probe probe_of(const std::string& name, const JCurve& c) {
  return std::visit([&](const auto& v) { return Probe{name, v}; }, c);
}

}  // namespace

std::optional<DcpWitness> bounded_dcp_search(const SplittingDescriptor& d, std::int64_t height_bound) {
  validate_descriptor(d);
  if (height_bound < 1) return std::nullopt;

  std::vector<Probe> candidates{{"Gamma", GammaCurve{}}};
  const auto slopes = slopes_in_box(height_bound);
  for (auto host : {Host::FA, Host::FB}) {
    for (const auto& s : slopes) {
      candidates.push_back({"curve " + s.to_string() + " in " + std::string(to_string(host)), ClosedCurve{host, s}});
    }
  }

  const std::vector<Probe> h_meridians{
      {"dA (slope " + d.meridian_a.to_string() + ")", ClosedCurve{Host::FA, d.meridian_a}},
      {"dB (slope " + d.meridian_b.to_string() + ")", ClosedCurve{Host::FB, d.meridian_b}},
      {"Gamma", GammaCurve{}},
  };

  std::vector<Probe> j_meridians{probe_of("x", d.x), probe_of("y", d.y)};
  if (d.identification == Identification::H2) {
    j_meridians.push_back({"twisted Lambda", twisted_separating_curve(d.direction)});
  } else {
    j_meridians.push_back({"Lambda = Gamma", GammaCurve{}});
  }

  for (const auto& c : candidates) {
    for (const auto& h : h_meridians) {
      if (meet(c, h) != 0) continue;
      for (const auto& j : j_meridians) {
        if (meet(c, j) == 0 && meet(h, j) == 0) return DcpWitness{c.name, h.name, j.name};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hsplit
