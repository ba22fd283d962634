#include "hsplit/kernels.hpp"

#include <algorithm>
#include <numeric>

#include "hsplit/ptorus.hpp"
#include "hsplit/surface.hpp"

namespace hsplit {

namespace {

// Remote slopes and box size in one column of the box (fixed denominator),
// counting both signs. The column den = 1 also holds 0/1, and 1/0 is added by
// the caller.
std::pair<std::uint64_t, std::uint64_t> density_column(std::int64_t den, std::int64_t height) {
  std::uint64_t remote = 0;
  std::uint64_t total = 0;
  for (std::int64_t num = 1; num <= height; ++num) {
    if (std::gcd(num, den) != 1) continue;
    total += 2;
    if (classify(Slope(num, den)) == SlopeClass::Remote) ++remote;
    if (classify(Slope(-num, den)) == SlopeClass::Remote) ++remote;
  }
  return {remote, total};
}

// 0/1 and 1/0 are Close.
constexpr std::uint64_t kExtraSlopes = 2;

}  // namespace

Ratio remote_density_serial(std::int64_t height) {
  if (height < 1) return {0, 0};
  std::uint64_t remote = 0;
  std::uint64_t total = kExtraSlopes;
  for (std::int64_t den = 1; den <= height; ++den) {
    const auto [r, t] = density_column(den, height);
    remote += r;
    total += t;
  }
  return {remote, total};
}

Ratio remote_density_parallel(std::int64_t height) {
  if (height < 1) return {0, 0};
  std::uint64_t remote = 0;
  std::uint64_t total = kExtraSlopes;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : remote, total)
  for (std::int64_t den = 1; den <= height; ++den) {
    const auto [r, t] = density_column(den, height);
    remote += r;
    total += t;
  }
  return {remote, total};
}

Ratio remote_density(std::int64_t height) { return remote_density_parallel(height); }

// ---------------------------------------------------------------------------

namespace {

void compare(SweepReport& out, const char* kind, const Slope& a, const Slope& b, std::uint64_t expected,
             const OracleCount& got) {
  ++out.compared;
  if (got.count != expected) {
    out.disagreements.push_back(
        {kind, a.to_string(), b.to_string(), std::to_string(expected), std::to_string(got.count)});
  }
}

SweepReport pairing_row(const std::vector<Slope>& slopes, std::size_t i) {
  SweepReport out;
  const Slope& a = slopes[i];
  for (const Slope& b : slopes) {
    compare(out, "arc/arc", a, b, arc_arc_intersections(a, b), lattice_oracle({Carrier::Arc, a}, {Carrier::Arc, b}));
    compare(out, "curve/arc", a, b, curve_arc_intersections(a, b),
            lattice_oracle({Carrier::Curve, a}, {Carrier::Arc, b}));
    compare(out, "curve/curve", a, b, det_distance(a, b), lattice_oracle({Carrier::Curve, a}, {Carrier::Curve, b}));
  }
  return out;
}

void merge(SweepReport& into, SweepReport&& part) {
  into.compared += part.compared;
  into.disagreements.insert(into.disagreements.end(), std::make_move_iterator(part.disagreements.begin()),
                            std::make_move_iterator(part.disagreements.end()));
}

template <typename Row>
SweepReport run_rows(std::size_t rows, Row row, bool parallel) {
  std::vector<SweepReport> parts(rows);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < rows; ++i) parts[i] = row(i);
  } else {
    for (std::size_t i = 0; i < rows; ++i) parts[i] = row(i);
  }
  SweepReport out;
  for (auto& p : parts) merge(out, std::move(p));
  return out;
}

}  // namespace

SweepReport pairing_sweep_serial(std::int64_t height) {
  const auto slopes = slopes_in_box(height);
  return run_rows(slopes.size(), [&](std::size_t i) { return pairing_row(slopes, i); }, false);
}

SweepReport pairing_sweep_parallel(std::int64_t height) {
  const auto slopes = slopes_in_box(height);
  return run_rows(slopes.size(), [&](std::size_t i) { return pairing_row(slopes, i); }, true);
}

// ---------------------------------------------------------------------------

namespace {

std::string families_text(const std::vector<ArcFamily>& fams) {
  std::string s = "{";
  for (std::size_t i = 0; i < fams.size(); ++i) {
    s += (i ? ", (" : "(") + fams[i].slope.to_string() + ", " + std::to_string(fams[i].count) + ")";
  }
  return s + "}";
}

}  // namespace

void twist_check(const Slope& c, SweepReport& out) {
  for (auto side : {Side::P, Side::Q}) {
    for (auto dir : {Twist::Left, Twist::Right}) {
      const TwistBounds fast = half_twist_families(c, side, dir);
      const TwistedPresentation traced = cut_and_trace(c, side, dir);
      const std::string label = c.to_string() + " side " + std::string(to_string(side)) + " " +
                                std::string(to_string(dir));
      ++out.compared;

      const auto& exact = traced.families(fast.exact_host);
      if (exact != fast.exact_families) {
        out.disagreements.push_back({"exact families", label, std::string(to_string(fast.exact_host)),
                                     families_text(fast.exact_families), families_text(exact)});
      }

      const auto& oct = traced.families(fast.octagon_host);
      const std::uint64_t want_total = fast.octagon_close_total + fast.octagon_third_count;
      const std::uint64_t got_total = traced.total(fast.octagon_host);
      if (got_total != want_total) {
        out.disagreements.push_back({"octagon total", label, std::string(to_string(fast.octagon_host)),
                                     std::to_string(want_total), std::to_string(got_total)});
      }
      for (const auto& f : oct) {
        const bool allowed = f.slope == fast.octagon_close_slopes[0] || f.slope == fast.octagon_close_slopes[1] ||
                             f.slope == fast.octagon_third_candidates[0] ||
                             f.slope == fast.octagon_third_candidates[1];
        if (!allowed) {
          out.disagreements.push_back({"octagon slope", label, std::string(to_string(fast.octagon_host)),
                                       "close or third candidate", f.slope.to_string()});
        }
      }
      for (auto host : {Host::FA, Host::FB}) {
        for (const auto& f : traced.families(host)) {
          if (classify(f.slope) != SlopeClass::Close) {
            out.disagreements.push_back(
                {"family class", label, std::string(to_string(host)), "Close", f.slope.to_string()});
          }
        }
      }
    }
  }
}

namespace {

std::vector<Slope> twist_sources(std::int64_t height) {
  std::vector<Slope> out;
  for (const auto& s : slopes_in_box(height)) {
    if (is_distant_or_remote(s)) out.push_back(s);
  }
  return out;
}

SweepReport twist_row(const std::vector<Slope>& sources, std::size_t i) {
  SweepReport out;
  twist_check(sources[i], out);
  return out;
}

}  // namespace

SweepReport twist_sweep_serial(std::int64_t height) {
  const auto sources = twist_sources(height);
  return run_rows(sources.size(), [&](std::size_t i) { return twist_row(sources, i); }, false);
}

SweepReport twist_sweep_parallel(std::int64_t height) {
  const auto sources = twist_sources(height);
  return run_rows(sources.size(), [&](std::size_t i) { return twist_row(sources, i); }, true);
}

// ---------------------------------------------------------------------------

std::vector<SpecOutcome> evaluate_specs_serial(const std::vector<SurgerySpec>& specs) {
  std::vector<SpecOutcome> out(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) out[i] = evaluate_spec(specs[i]);
  return out;
}

std::vector<SpecOutcome> evaluate_specs_parallel(const std::vector<SurgerySpec>& specs) {
  std::vector<SpecOutcome> out(specs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < specs.size(); ++i) out[i] = evaluate_spec(specs[i]);
  return out;
}

}  // namespace hsplit
