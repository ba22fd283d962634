#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hsplit/error.hpp"
#include "hsplit/kernels.hpp"
#include "hsplit/surface.hpp"

using namespace hsplit;
using C = CurveName;

namespace {

std::vector<ArcFamily> fams(Host h, std::initializer_list<std::pair<Slope, std::uint64_t>> list) {
  std::vector<ArcFamily> out;
  for (const auto& [s, n] : list) out.push_back({h, s, n});
  std::sort(out.begin(), out.end(), [](const ArcFamily& a, const ArcFamily& b) { return a.slope < b.slope; });
  return out;
}

std::set<Slope> slopes_of(const std::vector<ArcFamily>& f) {
  std::set<Slope> out;
  for (const auto& a : f) out.insert(a.slope);
  return out;
}

const Slope kInf = Slope(1, 0);

}  // namespace

TEST_CASE("named intersections") {
  const MarkedModel m;
  CHECK(named_intersection(m, C::Gamma, C::LambdaAB) == 2);
  CHECK(named_intersection(m, C::GammaA, C::LambdaAB) == 0);
  CHECK(named_intersection(m, C::GammaB, C::LambdaAB) == 0);
  CHECK(named_intersection(m, C::GammaA, C::LambdaB) == 0);
  CHECK(named_intersection(m, C::GammaB, C::LambdaA) == 0);
  CHECK(named_intersection(m, C::BoundaryA, C::LambdaA) == 1);
  CHECK(named_intersection(m, C::BoundaryB, C::LambdaB) == 1);
  for (auto a : kAllCurves) {
    for (auto b : kAllCurves) CHECK(m.intersection(a, b) == m.intersection(b, a));
  }
}

TEST_CASE("curve names") {
  for (auto c : kAllCurves) CHECK(curve_from_string(to_string(c)) == c);
  try {
    curve_from_string("Gamma_C");
    FAIL("accepted unknown name");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCurve);
  }
  const MarkedModel partial(std::map<std::pair<C, C>, std::uint64_t>{{{C::Gamma, C::LambdaAB}, 2}});
  try {
    partial.intersection(C::GammaA, C::LambdaA);
    FAIL("missing entry answered");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCurve);
  }
}

TEST_CASE("standard triple symmetry") {
  const MarkedModel m;
  CHECK(standard_triple_check(m));
  CHECK_FALSE(standard_triple_check(m.with_entry(C::Gamma, C::LambdaAB, 1)));
  CHECK(standard_triple_check(m.relabeled(mirror_triple)));
  CHECK(m.relabeled(mirror_triple) == m);
  // the rotation is a symmetry of the separating/longitude block only
  const std::vector<C> block{C::GammaA, C::GammaB, C::Gamma, C::LambdaA, C::LambdaB, C::LambdaAB};
  const MarkedModel rotated = m.relabeled(rotate_triple);
  for (auto a : block) {
    for (auto b : block) CHECK(rotated.intersection(a, b) == m.intersection(a, b));
  }
  CHECK(rotated.intersection(C::BoundaryA, C::LambdaB) == 1);
  CHECK_FALSE(standard_triple_check(rotated));
  // rotate_triple has order three on every name
  for (auto c : kAllCurves) CHECK(rotate_triple(rotate_triple(rotate_triple(c))) == c);
  for (auto c : kAllCurves) CHECK(mirror_triple(mirror_triple(c)) == c);
}

TEST_CASE("template rectangles") {
  const auto left = template_rectangles(Twist::Left);
  CHECK(std::set<Slope>(left.fa_slopes.begin(), left.fa_slopes.end()) == std::set<Slope>{kInf, Slope(-1, 1)});
  CHECK(std::set<Slope>(left.fb_slopes.begin(), left.fb_slopes.end()) == std::set<Slope>{Slope(0, 1), Slope(1, 1)});
  CHECK(left.fa_counts == std::vector<std::uint64_t>{2, 2});
  CHECK(left.fb_counts == std::vector<std::uint64_t>{2, 2});
  CHECK(left.untwisted_fa_slope == kInf);
  CHECK(left.untwisted_fa_arcs == 2);
  CHECK(left.untwisted_lambda_b_crossings == 0);

  const auto right = template_rectangles(Twist::Right);
  CHECK(std::set<Slope>(right.fa_slopes.begin(), right.fa_slopes.end()) == std::set<Slope>{kInf, Slope(1, 1)});
  CHECK(std::set<Slope>(right.fb_slopes.begin(), right.fb_slopes.end()) == std::set<Slope>{Slope(0, 1), Slope(-1, 1)});
}

TEST_CASE("traced template reproduces the rectangles") {
  CHECK(trace_template(Twist::Left) == template_rectangles(Twist::Left));
  CHECK(trace_template(Twist::Right) == template_rectangles(Twist::Right));
  const auto lambda = twisted_separating_curve(Twist::Left);
  CHECK(slopes_of(lambda.families_fa) == std::set<Slope>{kInf, Slope(-1, 1)});
  CHECK(slopes_of(lambda.families_fb) == std::set<Slope>{Slope(0, 1), Slope(1, 1)});
}

TEST_CASE("fast path on side P") {
  const auto b = half_twist_families(Slope(7, 2), Side::P, Twist::Left);
  CHECK(b.exact_host == Host::FA);
  CHECK(b.exact_families == fams(Host::FA, {{Slope(-1, 1), 2}, {kInf, 5}}));
  CHECK(b.octagon_close_total == 4);
  CHECK(b.octagon_third_count == 3);
  CHECK(std::set<Slope>(b.octagon_close_slopes.begin(), b.octagon_close_slopes.end()) ==
        std::set<Slope>{Slope(0, 1), Slope(1, 1)});
  CHECK(std::set<Slope>(b.octagon_third_candidates.begin(), b.octagon_third_candidates.end()) ==
        std::set<Slope>{kInf, Slope(1, 2)});
}

TEST_CASE("fast path on side Q") {
  const auto b = half_twist_families(Slope(7, 2), Side::Q, Twist::Left);
  CHECK(b.exact_host == Host::FB);
  CHECK(b.exact_families == fams(Host::FB, {{Slope(1, 1), 2}, {Slope(0, 1), 5}}));
}

TEST_CASE("fast path refuses non-distant slopes") {
  for (const auto& s : {Slope(5, 2), Slope(1, 2), Slope(3, 2), Slope(1, 0)}) {
    try {
      half_twist_families(s, Side::P, Twist::Left);
      FAIL("accepted " << s.to_string());
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotDistant);
    }
    CHECK_THROWS_AS(cut_and_trace(s, Side::Q, Twist::Right), Error);
  }
}

TEST_CASE("traced families") {
  auto t = cut_and_trace(Slope(7, 2), Side::P, Twist::Left);
  CHECK(t.families_fa == fams(Host::FA, {{Slope(-1, 1), 2}, {kInf, 5}}));
  CHECK(t.families_fb == fams(Host::FB, {{Slope(0, 1), 4}, {kInf, 3}}));

  t = cut_and_trace(Slope(11, 3), Side::P, Twist::Left);
  CHECK(t.families_fa == fams(Host::FA, {{Slope(-1, 1), 3}, {kInf, 8}}));
  CHECK(t.families_fb == fams(Host::FB, {{Slope(0, 1), 6}, {kInf, 5}}));

  t = cut_and_trace(Slope(9, 2), Side::P, Twist::Left);
  CHECK(t.families_fa == fams(Host::FA, {{Slope(-1, 1), 2}, {kInf, 7}}));
  CHECK(t.total(Host::FB) == 4 + 5);

  t = cut_and_trace(Slope(7, 2), Side::Q, Twist::Left);
  CHECK(t.families_fb == fams(Host::FB, {{Slope(1, 1), 2}, {Slope(0, 1), 5}}));

  t = cut_and_trace(Slope(12, 5), Side::Q, Twist::Left);
  CHECK(t.families_fb == fams(Host::FB, {{Slope(1, 1), 5}, {Slope(0, 1), 7}}));
  CHECK(t.families_fa == fams(Host::FA, {{Slope(-1, 1), 10}, {Slope(-2, 1), 2}}));

  t = cut_and_trace(Slope(9, 2), Side::Q, Twist::Left);
  CHECK(t.families_fb == fams(Host::FB, {{Slope(1, 1), 2}, {Slope(0, 1), 7}}));
}

TEST_CASE("traced slope sets stay inside the allowed families") {
  const std::set<Slope> p_fa{Slope(-1, 1), kInf};
  const std::set<Slope> p_fb{Slope(0, 1), Slope(1, 1), kInf, Slope(1, 2)};
  const std::set<Slope> q_fb{Slope(1, 1), Slope(0, 1)};
  const std::set<Slope> q_fa{Slope(-1, 1), kInf, Slope(0, 1), Slope(-2, 1)};
  auto within = [](const std::vector<ArcFamily>& f, const std::set<Slope>& allowed) {
    for (const auto& a : f) {
      if (!allowed.count(a.slope)) return false;
    }
    return true;
  };
  auto mirror = [](const std::set<Slope>& s) {
    std::set<Slope> out;
    for (const auto& x : s) out.insert(x.negated());
    return out;
  };
  for (const auto& c : slopes_in_box(30)) {
    if (!is_distant_or_remote(c)) continue;
    CAPTURE(c.to_string());
    const auto pl = cut_and_trace(c, Side::P, Twist::Left);
    const auto ql = cut_and_trace(c, Side::Q, Twist::Left);
    const auto pr = cut_and_trace(c, Side::P, Twist::Right);
    const auto qr = cut_and_trace(c, Side::Q, Twist::Right);
    CHECK(within(pl.families_fa, p_fa));
    CHECK(within(pl.families_fb, p_fb));
    CHECK(within(ql.families_fb, q_fb));
    CHECK(within(ql.families_fa, q_fa));
    CHECK(within(pr.families_fa, mirror(p_fa)));
    CHECK(within(pr.families_fb, mirror(p_fb)));
    CHECK(within(qr.families_fb, mirror(q_fb)));
    CHECK(within(qr.families_fa, mirror(q_fa)));
  }
}

TEST_CASE("fast path matches the tracer up to height 50") {
  const auto serial = twist_sweep_serial(50);
  CHECK(serial.compared > 0);
  CHECK(serial.disagreements.empty());
  CHECK(twist_sweep_parallel(50) == serial);
}

TEST_CASE("count conservation across Gamma") {
  for (const auto& c : slopes_in_box(40)) {
    if (!is_distant_or_remote(c)) continue;
    for (auto side : {Side::P, Side::Q}) {
      const auto t = cut_and_trace(c, side, Twist::Left);
      CHECK(t.total(Host::FA) == t.total(Host::FB));
    }
  }
}

TEST_CASE("two distinct close slopes in each host") {
  for (const auto& c : slopes_in_box(50)) {
    if (!is_distant_or_remote(c)) continue;
    for (auto side : {Side::P, Side::Q}) {
      for (auto dir : {Twist::Left, Twist::Right}) {
        const auto t = cut_and_trace(c, side, dir);
        for (auto h : {Host::FA, Host::FB}) {
          const auto s = slopes_of(t.families(h));
          CHECK(s.size() >= 2);
          CHECK(s.size() <= 3);
          for (const auto& x : s) CHECK(classify(x) == SlopeClass::Close);
        }
      }
    }
  }
}

TEST_CASE("right twist is the reflected left twist") {
  for (const auto& c : slopes_in_box(30)) {
    if (!is_distant_or_remote(c)) continue;
    for (auto side : {Side::P, Side::Q}) {
      const auto left = cut_and_trace(c, side, Twist::Left);
      const auto right = cut_and_trace(c, side, Twist::Right);
      auto mirrored = reflected(left);
      mirrored.direction = Twist::Right;
      CHECK(right == mirrored);
    }
  }
}

TEST_CASE("tracer is deterministic") {
  CHECK(cut_and_trace(Slope(-23, 7), Side::P, Twist::Left) == cut_and_trace(Slope(-23, 7), Side::P, Twist::Left));
}
