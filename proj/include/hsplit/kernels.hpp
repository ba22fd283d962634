#pragma once

// Sweeps with a serial reference and an OpenMP version. Each pair returns
// identical results; the parallel versions reduce in input order.

#include <cstdint>
#include <string>
#include <vector>

#include "hsplit/construct.hpp"
#include "hsplit/farey.hpp"

namespace hsplit {

Ratio remote_density_serial(std::int64_t height);
Ratio remote_density_parallel(std::int64_t height);

struct Disagreement {
  std::string kind;
  std::string first;
  std::string second;
  std::string expected;
  std::string observed;
  friend bool operator==(const Disagreement&, const Disagreement&) = default;
};

struct SweepReport {
  std::uint64_t compared = 0;
  std::vector<Disagreement> disagreements;
  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Lattice oracle against the closed forms for every ordered pair of slopes
/// in the height box: arc/arc, curve/arc and curve/curve.
SweepReport pairing_sweep_serial(std::int64_t height);
SweepReport pairing_sweep_parallel(std::int64_t height);

/// For every Distant or Remote slope in the height box, both sides and both
/// twists: fast-path exact families equal the traced ones, the octagon host
/// total is 2 min + |max - min|, octagon slopes lie among the close and third
/// candidates, and every family slope is Close.
SweepReport twist_sweep_serial(std::int64_t height);
SweepReport twist_sweep_parallel(std::int64_t height);

/// Checks one slope; appends to `out`.
void twist_check(const Slope& c, SweepReport& out);

std::vector<SpecOutcome> evaluate_specs_serial(const std::vector<SurgerySpec>& specs);
std::vector<SpecOutcome> evaluate_specs_parallel(const std::vector<SurgerySpec>& specs);

}  // namespace hsplit
