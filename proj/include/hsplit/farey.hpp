#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsplit {

/// A slope p/q on a torus, including infinity. Always stored in canonical
/// form: gcd(|p|, q) = 1, q >= 0, sign on the numerator, infinity as 1/0
/// (so -1/0 and 1/0 are the same slope) and zero as 0/1.
class Slope {
 public:
  constexpr Slope() = default;  // 0/1

  /// Canonicalizes (num, den). Throws Error{ParseError} for 0/0.
  Slope(std::int64_t num, std::int64_t den);

  static Slope infinity() { return Slope(1, 0); }
  static Slope integer(std::int64_t n) { return Slope(n, 1); }

  /// Accepts "p/q", "p", "inf", "-inf", "1/0". Throws Error{ParseError}.
  static Slope parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_infinite() const noexcept { return den_ == 0; }

  /// max(|num|, den); the box used by every enumeration in this library.
  std::int64_t height() const noexcept;

  Slope negated() const { return Slope(-num_, den_); }
  Slope inverted() const { return Slope(den_, num_); }

  /// "p/q" with "inf" for 1/0.
  std::string to_string() const;

  friend constexpr bool operator==(const Slope&, const Slope&) = default;
  friend constexpr auto operator<=>(const Slope&, const Slope&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class SlopeClass { Close, Nearby, Intermediate, Distant, Remote };

std::string_view to_string(SlopeClass c);
/// Throws Error{ParseError} on unknown names.
SlopeClass slope_class_from_string(std::string_view name);

/// |a.num * b.den - a.den * b.num|. Throws Error{Overflow} if the result does
/// not fit in 63 bits.
std::uint64_t det_distance(const Slope& a, const Slope& b);

bool is_farey_adjacent(const Slope& a, const Slope& b);

/// The two slopes Farey-adjacent to both a and b: {mediant, difference}.
/// Throws Error{NotAdjacent} unless det_distance(a, b) == 1.
std::pair<Slope, Slope> common_neighbors(const Slope& a, const Slope& b);

/// The eight close slopes: inf, 0, +-1, +-2, +-1/2.
const std::array<Slope, 8>& close_slopes();
/// The eight starred slopes: +-3, +-1/3, +-2/3, +-3/2.
const std::array<Slope, 8>& nearby_only_slopes();

struct LabeledQuantity {
  std::string label;
  std::int64_t value;
  bool remote_only;  // belongs to the second (remote) list
};

/// The eight distance quantities |p|, |q|, |p+-q|, |p+-2q|, |2p+-q| followed by
/// the eight remote quantities |p+-3q|, |3p+-2q|, |2p+-3q|, |3p+-q|.
std::vector<LabeledQuantity> distance_quantities(const Slope& s);

SlopeClass classify(const Slope& s);

inline bool is_distant_or_remote(const Slope& s) {
  auto c = classify(s);
  return c == SlopeClass::Distant || c == SlopeClass::Remote;
}

/// Exact fraction of a finite count; denominators are never zero in results
/// produced by the library except where documented.
struct Ratio {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double to_double() const {
    return denominator == 0 ? 0.0 : static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  /// Exact comparison against a/b.
  bool at_least(std::uint64_t a, std::uint64_t b) const {
    return static_cast<unsigned __int128>(numerator) * b >= static_cast<unsigned __int128>(a) * denominator;
  }
  bool exceeds(std::uint64_t a, std::uint64_t b) const {
    return static_cast<unsigned __int128>(numerator) * b > static_cast<unsigned __int128>(a) * denominator;
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Canonical slopes in the height box: 1 <= |num| <= height, 1 <= den <= height,
/// coprime, both signs, plus 0/1 and 1/0. Ordered by (den, num).
std::vector<Slope> slopes_in_box(std::int64_t height);

/// Fraction of slopes in the height box that classify Remote.
/// Computed by the parallel kernel; bit-identical to the serial reference.
Ratio remote_density(std::int64_t height);

}  // namespace hsplit
