#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hsplit/error.hpp"
#include "hsplit/farey.hpp"
#include "hsplit/kernels.hpp"

using namespace hsplit;

namespace {

// Reference classifier written straight from the inequality lists.
SlopeClass reference_class(std::int64_t p, std::int64_t q) {
  const std::set<std::pair<std::int64_t, std::int64_t>> close{{1, 0},  {0, 1},  {1, 1}, {-1, 1},
                                                              {2, 1},  {-2, 1}, {1, 2}, {-1, 2}};
  const std::set<std::pair<std::int64_t, std::int64_t>> nearby{{3, 1},  {-3, 1}, {1, 3}, {-1, 3},
                                                               {2, 3},  {-2, 3}, {3, 2}, {-3, 2}};
  if (close.count({p, q})) return SlopeClass::Close;
  if (nearby.count({p, q})) return SlopeClass::Nearby;
  auto big = [](std::int64_t v) { return v >= 2 || v <= -2; };
  const bool distant = big(p) && big(q) && big(p + q) && big(p - q) && big(p + 2 * q) && big(p - 2 * q) &&
                       big(2 * p + q) && big(2 * p - q);
  if (!distant) return SlopeClass::Intermediate;
  const bool remote = big(p + 3 * q) && big(p - 3 * q) && big(3 * p + 2 * q) && big(3 * p - 2 * q) &&
                      big(2 * p + 3 * q) && big(2 * p - 3 * q) && big(3 * p + q) && big(3 * p - q);
  return remote ? SlopeClass::Remote : SlopeClass::Distant;
}

std::vector<Slope> close_set() {
  return {Slope(1, 0), Slope(0, 1), Slope(1, 1), Slope(-1, 1), Slope(2, 1), Slope(-2, 1), Slope(1, 2), Slope(-1, 2)};
}

std::vector<Slope> nearby_set() {
  return {Slope(3, 1), Slope(-3, 1), Slope(1, 3), Slope(-1, 3), Slope(2, 3), Slope(-2, 3), Slope(3, 2), Slope(-3, 2)};
}

bool far_or_remote(SlopeClass c) { return c == SlopeClass::Distant || c == SlopeClass::Remote; }

}  // namespace

TEST_CASE("canonical form") {
  CHECK(Slope(2, 4) == Slope(1, 2));
  CHECK(Slope(3, -6) == Slope(-1, 2));
  CHECK(Slope(-5, 0) == Slope(1, 0));
  CHECK(Slope(0, -7) == Slope(0, 1));
  CHECK(Slope(-4, -6) == Slope(2, 3));
  CHECK(Slope(1, 0).is_infinite());
  CHECK(Slope(-7, 2).height() == 7);
  CHECK_THROWS_AS(Slope(0, 0), Error);
}

TEST_CASE("parse and print") {
  CHECK(Slope::parse("11/3") == Slope(11, 3));
  CHECK(Slope::parse("-3/2") == Slope(-3, 2));
  CHECK(Slope::parse("4") == Slope(4, 1));
  CHECK(Slope::parse("inf") == Slope::infinity());
  CHECK(Slope::parse("1/0") == Slope::infinity());
  CHECK(Slope(1, 0).to_string() == "inf");
  CHECK(Slope(-6, 4).to_string() == "-3/2");
  for (const char* bad : {"abc", "", "1/", "/2", "1/2/3", "0/0", "1.5", "99999999999999999999"}) {
    CAPTURE(bad);
    try {
      Slope::parse(bad);
      FAIL("parsed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
  for (const auto& s : slopes_in_box(12)) CHECK(Slope::parse(s.to_string()) == s);
}

TEST_CASE("determinant pairing") {
  CHECK(det_distance(Slope(1, 1), Slope(0, 1)) == 1);
  CHECK(det_distance(Slope(2, 3), Slope(3, 2)) == 5);
  CHECK(det_distance(Slope(11, 3), Slope(4, 1)) == 1);
  const auto box = slopes_in_box(15);
  for (const auto& a : box) {
    for (const auto& b : box) {
      CHECK(det_distance(a, b) == det_distance(b, a));
      CHECK((det_distance(a, b) == 0) == (a == b));
    }
  }
}

TEST_CASE("determinant is unimodular invariant") {
  const std::array<std::array<std::int64_t, 4>, 6> moves{{
      {1, 1, 0, 1},
      {1, -1, 0, 1},
      {1, 0, 1, 1},
      {1, 0, -1, 1},
      {0, 1, 1, 0},
      {-1, 0, 0, 1},
  }};
  auto apply = [](const std::array<std::int64_t, 4>& m, const Slope& s) {
    return Slope(m[0] * s.num() + m[1] * s.den(), m[2] * s.num() + m[3] * s.den());
  };
  const auto box = slopes_in_box(20);
  for (const auto& m : moves) {
    for (const auto& a : box) {
      for (const auto& b : box) {
        if (det_distance(apply(m, a), apply(m, b)) != det_distance(a, b)) {
          FAIL_CHECK("invariance fails for " << a.to_string() << ", " << b.to_string());
        }
      }
    }
  }
}

TEST_CASE("Farey adjacency and common neighbors") {
  CHECK(is_farey_adjacent(Slope(1, 2), Slope(1, 3)));
  CHECK_FALSE(is_farey_adjacent(Slope(1, 2), Slope(3, 2)));
  CHECK(is_farey_adjacent(Slope(1, 0), Slope(5, 1)));

  auto n = common_neighbors(Slope(1, 0), Slope(0, 1));
  CHECK(std::set<Slope>{n.first, n.second} == std::set<Slope>{Slope(1, 1), Slope(-1, 1)});
  n = common_neighbors(Slope(1, 2), Slope(1, 3));
  CHECK(std::set<Slope>{n.first, n.second} == std::set<Slope>{Slope(2, 5), Slope(0, 1)});
  try {
    common_neighbors(Slope(1, 1), Slope(1, 3));
    FAIL("accepted non-adjacent pair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdjacent);
  }

  const auto box = slopes_in_box(12);
  for (const auto& a : box) {
    for (const auto& b : box) {
      if (!is_farey_adjacent(a, b)) continue;
      const auto [m, d] = common_neighbors(a, b);
      CHECK(is_farey_adjacent(m, a));
      CHECK(is_farey_adjacent(m, b));
      CHECK(is_farey_adjacent(d, a));
      CHECK(is_farey_adjacent(d, b));
      CHECK(m != d);
    }
  }
}

TEST_CASE("close and nearby anchors") {
  for (const auto& s : close_set()) CHECK(classify(s) == SlopeClass::Close);
  for (const auto& s : nearby_set()) CHECK(classify(s) == SlopeClass::Nearby);
  CHECK(classify(Slope(-3, 2)) == SlopeClass::Nearby);
  CHECK(classify(Slope(5, 2)) == SlopeClass::Intermediate);
  CHECK(classify(Slope(7, 2)) == SlopeClass::Distant);
  CHECK(classify(Slope(11, 3)) == SlopeClass::Remote);
  CHECK(std::set<Slope>(close_slopes().begin(), close_slopes().end()).size() == 8);
}

TEST_CASE("eleven thirds has minimum quantity two") {
  const auto qs = distance_quantities(Slope(11, 3));
  REQUIRE(qs.size() == 16);
  std::int64_t lo = qs.front().value;
  for (const auto& q : qs) lo = std::min(lo, q.value);
  CHECK(lo == 2);
}

TEST_CASE("classification matches the reference inequalities") {
  for (const auto& s : slopes_in_box(50)) {
    if (classify(s) != reference_class(s.num(), s.den())) FAIL_CHECK("mismatch at " << s.to_string());
  }
}

TEST_CASE("classification equivalences through Farey adjacency") {
  std::vector<Slope> close = close_set();
  std::vector<Slope> near = close;
  for (const auto& s : nearby_set()) near.push_back(s);
  for (const auto& s : slopes_in_box(50)) {
    const auto c = classify(s);
    auto touches = [&](const std::vector<Slope>& set) {
      return std::any_of(set.begin(), set.end(), [&](const Slope& t) { return is_farey_adjacent(s, t); });
    };
    CAPTURE(s.to_string());
    CHECK(far_or_remote(c) == (!touches(close) && std::find(close.begin(), close.end(), s) == close.end()));
    CHECK((c == SlopeClass::Remote) == (!touches(near) && std::find(near.begin(), near.end(), s) == near.end()));
    if (s.is_infinite() || s.num() == 0) continue;
    const std::int64_t p = s.num();
    const std::int64_t q = s.den();
    const bool neighbors_far = is_distant_or_remote(Slope(p + q, q)) && is_distant_or_remote(Slope(p - q, q)) &&
                               is_distant_or_remote(Slope(p, q + p)) && is_distant_or_remote(Slope(p, q - p));
    CHECK((c == SlopeClass::Remote) == (far_or_remote(c) && neighbors_far));
  }
}

TEST_CASE("classification is symmetric under negation and inversion") {
  for (const auto& s : slopes_in_box(50)) {
    CHECK(classify(s) == classify(s.negated()));
    CHECK(classify(s) == classify(s.inverted()));
  }
}

TEST_CASE("class names round-trip") {
  for (auto c : {SlopeClass::Close, SlopeClass::Nearby, SlopeClass::Intermediate, SlopeClass::Distant,
                 SlopeClass::Remote}) {
    CHECK(slope_class_from_string(to_string(c)) == c);
  }
  CHECK_THROWS_AS(slope_class_from_string("Far"), Error);
}

TEST_CASE("height box enumeration") {
  const auto box = slopes_in_box(9);
  CHECK(box.size() == 112);
  CHECK(std::set<Slope>(box.begin(), box.end()).size() == box.size());
  for (const auto& s : box) CHECK(s.height() <= 9);
}

TEST_CASE("remote density") {
  CHECK(remote_density(8) == Ratio{0, 88});
  const Ratio r9 = remote_density(9);
  CHECK(r9 == Ratio{8, 112});
  std::set<Slope> remote9;
  for (const auto& s : slopes_in_box(9)) {
    if (classify(s) == SlopeClass::Remote) remote9.insert(s);
  }
  CHECK(remote9 == std::set<Slope>{Slope(9, 2), Slope(-9, 2), Slope(2, 9), Slope(-2, 9), Slope(9, 7), Slope(-9, 7),
                                   Slope(7, 9), Slope(-7, 9)});
  // Independent enumeration outside the library.
  CHECK(remote_density(50) == Ratio{2280, 3096});
  CHECK(remote_density(100) == Ratio{10496, 12176});
  const Ratio r1000 = remote_density(1000);
  CHECK(r1000 == Ratio{1199488, 1216768});
  CHECK(r1000.at_least(9, 10));
  CHECK(r1000.to_double() >= remote_density(100).to_double());
}

TEST_CASE("remote density kernels agree") {
  for (std::int64_t h : {1, 2, 9, 37, 120}) CHECK(remote_density_serial(h) == remote_density_parallel(h));
}
