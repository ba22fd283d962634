#include "hsplit/farey.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "hsplit/error.hpp"

namespace hsplit {

namespace {

std::int64_t checked(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "slope arithmetic exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "not a slope: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Slope::Slope(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) throw Error(ErrorCode::ParseError, "0/0 is not a slope");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "slope component out of range");
  }
  if (den == 0) {
    num_ = 1;
    den_ = 0;
    return;
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num_ = num;
  den_ = den;
}

Slope Slope::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text == "inf" || text == "+inf" || text == "-inf" || text == "infinity") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope(parse_int(text, whole), 1);
  auto num = parse_int(text.substr(0, slash), whole);
  auto den = parse_int(text.substr(slash + 1), whole);
  if (num == 0 && den == 0) throw Error(ErrorCode::ParseError, "0/0 is not a slope");
  return Slope(num, den);
}

std::int64_t Slope::height() const noexcept { return std::max<std::int64_t>(num_ < 0 ? -num_ : num_, den_); }

std::string Slope::to_string() const {
  if (den_ == 0) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string_view to_string(SlopeClass c) {
  switch (c) {
    case SlopeClass::Close: return "Close";
    case SlopeClass::Nearby: return "Nearby";
    case SlopeClass::Intermediate: return "Intermediate";
    case SlopeClass::Distant: return "Distant";
    case SlopeClass::Remote: return "Remote";
  }
  return "Unknown";
}

SlopeClass slope_class_from_string(std::string_view name) {
  for (auto c : {SlopeClass::Close, SlopeClass::Nearby, SlopeClass::Intermediate, SlopeClass::Distant,
                 SlopeClass::Remote}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorCode::ParseError, "unknown slope class '" + std::string(name) + "'");
}

std::uint64_t det_distance(const Slope& a, const Slope& b) {
  __int128 d = static_cast<__int128>(a.num()) * b.den() - static_cast<__int128>(a.den()) * b.num();
  if (d < 0) d = -d;
  if (d > std::numeric_limits<std::int64_t>::max()) throw Error(ErrorCode::Overflow, "determinant exceeds 63 bits");
  return static_cast<std::uint64_t>(d);
}

bool is_farey_adjacent(const Slope& a, const Slope& b) { return det_distance(a, b) == 1; }

std::pair<Slope, Slope> common_neighbors(const Slope& a, const Slope& b) {
  if (!is_farey_adjacent(a, b)) {
    throw Error(ErrorCode::NotAdjacent, a.to_string() + " and " + b.to_string() + " are not Farey-adjacent");
  }
  Slope mediant(checked(static_cast<__int128>(a.num()) + b.num()), checked(static_cast<__int128>(a.den()) + b.den()));
  Slope difference(checked(static_cast<__int128>(a.num()) - b.num()),
                   checked(static_cast<__int128>(a.den()) - b.den()));
  return {mediant, difference};
}

const std::array<Slope, 8>& close_slopes() {
  static const std::array<Slope, 8> set{Slope(1, 0), Slope(0, 1),  Slope(1, 1), Slope(-1, 1),
                                        Slope(2, 1), Slope(-2, 1), Slope(1, 2), Slope(-1, 2)};
  return set;
}

// -3/2 is included alongside 3/2: the starred labels of the Farey picture are
// sign-symmetric even though the prose list omits it.
const std::array<Slope, 8>& nearby_only_slopes() {
  static const std::array<Slope, 8> set{Slope(3, 1), Slope(-3, 1), Slope(1, 3), Slope(-1, 3),
                                        Slope(2, 3), Slope(-2, 3), Slope(3, 2), Slope(-3, 2)};
  return set;
}

std::vector<LabeledQuantity> distance_quantities(const Slope& s) {
  const __int128 p = s.num();
  const __int128 q = s.den();
  auto abs = [](__int128 v) { return checked(v < 0 ? -v : v); };
  return {
      {"|p|", abs(p), false},              {"|q|", abs(q), false},
      {"|p+q|", abs(p + q), false},        {"|p-q|", abs(p - q), false},
      {"|p+2q|", abs(p + 2 * q), false},   {"|p-2q|", abs(p - 2 * q), false},
      {"|2p+q|", abs(2 * p + q), false},   {"|2p-q|", abs(2 * p - q), false},
      {"|p+3q|", abs(p + 3 * q), true},    {"|p-3q|", abs(p - 3 * q), true},
      {"|3p+2q|", abs(3 * p + 2 * q), true}, {"|3p-2q|", abs(3 * p - 2 * q), true},
      {"|2p+3q|", abs(2 * p + 3 * q), true}, {"|2p-3q|", abs(2 * p - 3 * q), true},
      {"|3p+q|", abs(3 * p + q), true},    {"|3p-q|", abs(3 * p - q), true},
  };
}

SlopeClass classify(const Slope& s) {
  for (const auto& c : close_slopes()) {
    if (s == c) return SlopeClass::Close;
  }
  for (const auto& c : nearby_only_slopes()) {
    if (s == c) return SlopeClass::Nearby;
  }
  bool distant = true;
  bool remote = true;
  for (const auto& q : distance_quantities(s)) {
    if (q.value >= 2) continue;
    if (q.remote_only) {
      remote = false;
    } else {
      distant = false;
    }
  }
  if (!distant) return SlopeClass::Intermediate;
  return remote ? SlopeClass::Remote : SlopeClass::Distant;
}

std::vector<Slope> slopes_in_box(std::int64_t height) {
  std::vector<Slope> out;
  if (height < 1) return out;
  out.push_back(Slope(0, 1));
  out.push_back(Slope(1, 0));
  for (std::int64_t den = 1; den <= height; ++den) {
    for (std::int64_t num = -height; num <= height; ++num) {
      if (num == 0 || std::gcd(num, den) != 1) continue;
      out.emplace_back(num, den);
    }
  }
  return out;
}

}  // namespace hsplit
