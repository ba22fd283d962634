#include "hsplit/construct.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "hsplit/kernels.hpp"

namespace hsplit {

namespace {

void gate(const Slope& s, bool ok, ErrorCode code, std::string_view core, std::string_view want) {
  if (ok) return;
  throw Error(code, "core " + std::string(core) + " has slope " + s.to_string() + " of class " +
                        std::string(to_string(classify(s))) + ", needs " + std::string(want));
}

}  // namespace

SurgerySpec validate_spec(const SurgerySpec& s) {
  gate(s.slope_cx, is_distant_or_remote(s.slope_cx), ErrorCode::XNotDistant, "c_X", "Distant or Remote");
  gate(s.slope_cy, is_distant_or_remote(s.slope_cy), ErrorCode::YNotDistant, "c_Y", "Distant or Remote");
  gate(s.slope_ca, classify(s.slope_ca) == SlopeClass::Remote, ErrorCode::ANotRemote, "c_A", "Remote");
  gate(s.slope_cb, classify(s.slope_cb) == SlopeClass::Remote, ErrorCode::BNotRemote, "c_B", "Remote");
  if (s.pair_mode) {
    gate(s.slope_cx, classify(s.slope_cx) == SlopeClass::Remote, ErrorCode::XNotRemote, "c_X", "Remote in pair mode");
  }
  return s;
}

SplittingDescriptor build_splitting(const SurgerySpec& spec) {
  const SurgerySpec s = validate_spec(spec);
  SplittingDescriptor d;
  d.identification = s.identification;
  d.meridian_a = surged_meridian(s.slope_ca).meridian;
  d.meridian_b = surged_meridian(s.slope_cb).meridian;
  if (s.identification == Identification::H0) {
    d.direction = Twist::Left;
    d.x = ClosedCurve{Host::FA, surged_meridian(s.slope_cx).meridian};
    d.y = ClosedCurve{Host::FB, surged_meridian(s.slope_cy).meridian};
    return d;
  }
  d.direction = s.twist_direction;
  if (s.twist_direction == Twist::Right) {
    d.meridian_a = d.meridian_a.negated();
    d.meridian_b = d.meridian_b.negated();
  }
  d.x = cut_and_trace(s.slope_cx, Side::P, s.twist_direction);
  d.y = cut_and_trace(s.slope_cy, Side::Q, s.twist_direction);
  return d;
}

SurgerySpec exchange_cores(const SurgerySpec& s) {
  if (!s.pair_mode) throw Error(ErrorCode::NotPairMode, "core exchange needs a pair-mode spec");
  SurgerySpec out = s;
  std::swap(out.slope_cx, out.slope_cb);
  out.twist_direction = flipped(s.twist_direction);
  return out;
}

InvariantReport invariants(const SplittingDescriptor& d) {
  validate_descriptor(d);
  InvariantReport out;
  for (std::size_t i = 0; i < kInvariantSlots.size(); ++i) {
    const auto [role, host] = kInvariantSlots[i];
    const auto* t = std::get_if<TwistedPresentation>(&d.curve(role));
    if (t == nullptr) throw Error(ErrorCode::MalformedDescriptor, "invariants need twisted presentations of x and y");
    std::set<std::uint64_t> dens;
    std::uint64_t sum = 0;
    for (const auto& f : t->families(host)) {
      const auto den = denominator(f.slope, d.meridian(host));
      sum += f.count * den;
      dens.insert(den);
    }
    out.denom_tuples[i].assign(dens.begin(), dens.end());
    // quadruple order: a.x, a.y, b.x, b.y
    const std::size_t q = (host == Host::FA ? 0 : 2) + (role == CurveRole::X ? 0 : 1);
    out.quadruple[q] = sum;
  }
  return out;
}

namespace {

using Cell = std::pair<std::uint64_t, std::vector<std::uint64_t>>;
using Grid = std::array<std::array<Cell, 2>, 2>;  // [curve][host]

Grid grid_of(const InvariantReport& r) {
  Grid g;
  for (std::size_t i = 0; i < kInvariantSlots.size(); ++i) {
    const auto [role, host] = kInvariantSlots[i];
    const std::size_t c = role == CurveRole::X ? 0 : 1;
    const std::size_t h = host == Host::FA ? 0 : 1;
    const std::size_t q = h * 2 + c;
    g[c][h] = {r.quadruple[q], r.denom_tuples[i]};
  }
  return g;
}

Grid canonical(const Grid& g) {
  std::optional<Grid> best;
  for (int mask = 0; mask < 8; ++mask) {
    Grid t;
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t h = 0; h < 2; ++h) {
        std::size_t cc = (mask & 1) ? 1 - c : c;
        std::size_t hh = (mask & 2) ? 1 - h : h;
        if (mask & 4) std::swap(cc, hh);
        t[c][h] = g[cc][hh];
      }
    }
    if (!best || t < *best) best = t;
  }
  return *best;
}

}  // namespace

bool same_unordered(const InvariantReport& a, const InvariantReport& b) {
  return canonical(grid_of(a)) == canonical(grid_of(b));
}

std::string_view to_string(PairVerdict v) {
  return v == PairVerdict::Distinguishable ? "Distinguishable" : "Inconclusive";
}

PairVerdict pair_verdict_from_string(std::string_view text) {
  if (text == "Distinguishable") return PairVerdict::Distinguishable;
  if (text == "Inconclusive") return PairVerdict::Inconclusive;
  throw Error(ErrorCode::ParseError, "unknown pair verdict '" + std::string(text) + "'");
}

PairReport compare_pair(const SurgerySpec& s) {
  if (!s.pair_mode) throw Error(ErrorCode::NotPairMode, "pair comparison needs a pair-mode spec");
  PairReport out;
  out.spec = validate_spec(s);
  out.exchanged_spec = exchange_cores(s);
  const auto d1 = build_splitting(out.spec);
  const auto d2 = build_splitting(out.exchanged_spec);
  out.certificate_1 = certify_distance3(d1);
  out.certificate_2 = certify_distance3(d2);
  out.invariants_1 = invariants(d1);
  out.invariants_2 = invariants(d2);
  out.verdict = same_unordered(out.invariants_1, out.invariants_2) ? PairVerdict::Inconclusive
                                                                    : PairVerdict::Distinguishable;
  return out;
}

SpecOutcome evaluate_spec(const SurgerySpec& s) {
  SpecOutcome out;
  try {
    validate_spec(s);
  } catch (const Error& e) {
    out.rejection = e.code();
    return out;
  }
  if (!s.pair_mode) {
    out.certified_1 = certify_distance3(build_splitting(s)).verdict == Verdict::Certified;
    out.certified_2 = out.certified_1;
    return out;
  }
  const PairReport r = compare_pair(s);
  out.certified_1 = r.certificate_1.verdict == Verdict::Certified;
  out.certified_2 = r.certificate_2.verdict == Verdict::Certified;
  out.distinguishable = r.verdict == PairVerdict::Distinguishable;
  return out;
}

namespace {

// Unbiased index in [0, n).
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  const std::uint64_t span = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span + 1) % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return static_cast<std::size_t>(v % span);
}

}  // namespace

std::vector<SurgerySpec> draw_specs(std::uint64_t n, std::int64_t height, std::uint64_t seed, bool pair_mode) {
  const auto pool = slopes_in_box(height);
  std::mt19937_64 rng(seed);
  std::vector<SurgerySpec> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    SurgerySpec s;
    s.slope_cx = pool[draw_index(rng, pool.size())];
    s.slope_cy = pool[draw_index(rng, pool.size())];
    s.slope_ca = pool[draw_index(rng, pool.size())];
    s.slope_cb = pool[draw_index(rng, pool.size())];
    s.pair_mode = pair_mode;
    out.push_back(s);
  }
  return out;
}

SampleStats tally(const std::vector<SpecOutcome>& outcomes, std::uint64_t n, std::int64_t height,
                  std::uint64_t seed, bool pair_mode) {
  SampleStats st;
  st.n = n;
  st.height = height;
  st.seed = seed;
  st.pair_mode = pair_mode;
  for (const auto& o : outcomes) {
    if (!o.valid()) {
      ++st.rejections[std::string(to_string(*o.rejection))];
      continue;
    }
    ++st.valid;
    if (o.certified_1 && o.certified_2) {
      ++st.certified;
      if (o.distinguishable) ++st.distinguishable;
    }
  }
  return st;
}

SampleStats sample_generic(std::uint64_t n, std::int64_t height, std::uint64_t seed, bool pair_mode) {
  if (n == 0) throw Error(ErrorCode::FlagError, "sample size must be positive");
  if (height < 1) throw Error(ErrorCode::FlagError, "height must be positive");
  const auto specs = draw_specs(n, height, seed, pair_mode);
  return tally(evaluate_specs_parallel(specs), n, height, seed, pair_mode);
}

// ---------------------------------------------------------------------------
// Spec files

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

SurgerySpec parse_spec(std::string_view text) {
  SurgerySpec out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, where + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw Error(ErrorCode::ParseError, where + ": duplicate key " + key);
    auto slope = [&] {
      try {
        return Slope::parse(value);
      } catch (const Error&) {
        throw Error(ErrorCode::ParseError, where + ": " + key + " is not a slope: '" + std::string(value) + "'");
      }
    };
    if (key == "slope_cX") {
      out.slope_cx = slope();
    } else if (key == "slope_cY") {
      out.slope_cy = slope();
    } else if (key == "slope_cA") {
      out.slope_ca = slope();
    } else if (key == "slope_cB") {
      out.slope_cb = slope();
    } else if (key == "twist") {
      try {
        out.twist_direction = twist_from_string(value);
      } catch (const Error&) {
        throw Error(ErrorCode::ParseError, where + ": twist must be left or right");
      }
    } else if (key == "mode") {
      if (value == "pair") {
        out.pair_mode = true;
      } else if (value == "single") {
        out.pair_mode = false;
      } else {
        throw Error(ErrorCode::ParseError, where + ": mode must be single or pair");
      }
    } else if (key == "identification") {
      try {
        out.identification = identification_from_string(value);
      } catch (const Error&) {
        throw Error(ErrorCode::ParseError, where + ": identification must be h0 or h2");
      }
    } else {
      throw Error(ErrorCode::ParseError, where + ": unknown key " + key);
    }
  }
  for (const char* k : {"slope_cX", "slope_cY", "slope_cA", "slope_cB"}) {
    if (!seen.count(k)) throw Error(ErrorCode::ParseError, std::string("missing key ") + k);
  }
  return out;
}

std::string format_spec(const SurgerySpec& s) {
  std::ostringstream os;
  os << "slope_cX = " << s.slope_cx.to_string() << "\n"
     << "slope_cY = " << s.slope_cy.to_string() << "\n"
     << "slope_cA = " << s.slope_ca.to_string() << "\n"
     << "slope_cB = " << s.slope_cb.to_string() << "\n"
     << "twist = " << to_string(s.twist_direction) << "\n"
     << "mode = " << (s.pair_mode ? "pair" : "single") << "\n"
     << "identification = " << to_string(s.identification) << "\n";
  return os.str();
}

}  // namespace hsplit
