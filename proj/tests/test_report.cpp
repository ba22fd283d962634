#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "hsplit/error.hpp"
#include "hsplit/report.hpp"

using namespace hsplit;
using nlohmann::json;

namespace {

template <typename T>
T round_trip(const T& value) {
  return json::parse(json(value).dump()).get<T>();
}

}  // namespace

TEST_CASE("value round-trips") {
  CHECK(round_trip(Slope(-17, 5)) == Slope(-17, 5));
  CHECK(round_trip(Slope(1, 0)) == Slope(1, 0));
  CHECK(json(Slope(1, 0)) == "inf");

  for (const auto& s : corpus::valid_specs(60)) {
    CHECK(round_trip(s) == s);
    const auto d = build_splitting(s);
    CHECK(round_trip(std::get<TwistedPresentation>(d.x)) == std::get<TwistedPresentation>(d.x));
    CHECK(round_trip(certify_distance3(d)) == certify_distance3(d));
    CHECK(round_trip(certify_sums(d)) == certify_sums(d));
    CHECK(round_trip(invariants(d)) == invariants(d));
    const auto pr = compare_pair(s);
    CHECK(round_trip(pr) == pr);
  }

  auto failing = build_splitting(corpus::canonical_spec());
  failing.meridian_a = Slope(1, 0);
  const auto cert = certify_distance3(failing);
  REQUIRE(cert.failure.has_value());
  CHECK(round_trip(cert) == cert);

  const auto stats = sample_generic(200, 30, 5);
  CHECK(round_trip(stats) == stats);
  const auto single = sample_generic(200, 30, 5, false);
  CHECK(round_trip(single) == single);

  const SweepReport sweep{12, {{"arc/arc", "1/2", "inf", "1", "2"}}};
  CHECK(round_trip(sweep) == sweep);
}

TEST_CASE("invariant report layout") {
  const json j = invariants(build_splitting(corpus::canonical_spec()));
  CHECK(j.at("quadruple").at("a.x") == 94);
  CHECK(j.at("quadruple").at("b.y") == 179);
  CHECK(j.at("denom_tuples").size() == 4);
  CHECK(j.at("denom_tuples")[0].at("curve") == "x");
  CHECK(j.at("denom_tuples")[0].at("host") == "F_A");
  CHECK(j.at("denom_tuples")[0].at("denominators") == json::array({5, 18}));
}

TEST_CASE("classification document") {
  const json j = classification_json(Slope(11, 3));
  CHECK(j.at("slope") == "11/3");
  CHECK(j.at("class") == "Remote");
  CHECK(j.at("quantities").size() == 16);
}

TEST_CASE("report documents") {
  ReportDocument doc;
  doc.command = "pair";
  doc.inputs = json(corpus::canonical_spec());
  doc.result = json(compare_pair(corpus::canonical_spec()));
  doc.diagnostics = {"note"};
  const auto text = serialize(doc);
  CHECK(text.find('\n') == std::string::npos);
  const auto back = parse_report(text);
  CHECK(back == doc);
  CHECK(back.schema_version == kSchemaVersion);
  CHECK(back.result.get<PairReport>().verdict == PairVerdict::Distinguishable);
  // the echoed spec re-parses to the same spec
  CHECK(back.inputs.get<SurgerySpec>() == corpus::canonical_spec());
  CHECK(parse_spec(format_spec(back.inputs.get<SurgerySpec>())) == corpus::canonical_spec());
}

TEST_CASE("malformed reports") {
  for (const char* bad : {"", "{", "[]", "{\"command\":\"pair\"}",
                          "{\"schema_version\":1,\"command\":\"x\",\"inputs\":{},\"result\":{},\"diagnostics\":[]}"}) {
    CAPTURE(bad);
    try {
      parse_report(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }
}
