#include "hsplit/report.hpp"

#include "hsplit/error.hpp"

namespace hsplit {

using nlohmann::json;

namespace {

Host host_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "F_A") return Host::FA;
  if (s == "F_B") return Host::FB;
  throw Error(ErrorCode::ParseError, "unknown host '" + s + "'");
}

Side side_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "P") return Side::P;
  if (s == "Q") return Side::Q;
  throw Error(ErrorCode::ParseError, "unknown side '" + s + "'");
}

CurveRole role_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "x") return CurveRole::X;
  if (s == "y") return CurveRole::Y;
  throw Error(ErrorCode::ParseError, "unknown curve '" + s + "'");
}

Verdict verdict_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "Certified") return Verdict::Certified;
  if (s == "NotCertified") return Verdict::NotCertified;
  throw Error(ErrorCode::ParseError, "unknown verdict '" + s + "'");
}

json ratio_json(const Ratio& r) {
  return {{"numerator", r.numerator}, {"denominator", r.denominator}, {"value", r.to_double()}};
}

}  // namespace

void to_json(json& j, const Slope& s) { j = s.to_string(); }
void from_json(const json& j, Slope& s) { s = Slope::parse(j.get<std::string>()); }

void to_json(json& j, const ArcFamily& f) {
  j = {{"host", to_string(f.host)}, {"slope", f.slope}, {"count", f.count}};
}
void from_json(const json& j, ArcFamily& f) {
  f.host = host_from(j.at("host"));
  f.slope = j.at("slope").get<Slope>();
  f.count = j.at("count").get<std::uint64_t>();
}

void to_json(json& j, const TwistedPresentation& p) {
  j = {{"source_slope", p.source_slope},
       {"side", to_string(p.side)},
       {"direction", to_string(p.direction)},
       {"families_FA", p.families_fa},
       {"families_FB", p.families_fb}};
}
void from_json(const json& j, TwistedPresentation& p) {
  p.source_slope = j.at("source_slope").get<Slope>();
  p.side = side_from(j.at("side"));
  p.direction = twist_from_string(j.at("direction").get<std::string>());
  p.families_fa = j.at("families_FA").get<std::vector<ArcFamily>>();
  p.families_fb = j.at("families_FB").get<std::vector<ArcFamily>>();
}

void to_json(json& j, const RectangleWitness& w) {
  j = {{"curve", to_string(w.curve)}, {"host", to_string(w.host)}, {"r", w.r},           {"s", w.s},
       {"slope_r", w.slope_r},        {"count_r", w.count_r},       {"slope_s", w.slope_s}, {"count_s", w.count_s}};
}
void from_json(const json& j, RectangleWitness& w) {
  w.curve = role_from(j.at("curve"));
  w.host = host_from(j.at("host"));
  w.r = j.at("r").get<std::uint64_t>();
  w.s = j.at("s").get<std::uint64_t>();
  w.slope_r = j.at("slope_r").get<Slope>();
  w.count_r = j.at("count_r").get<std::uint64_t>();
  w.slope_s = j.at("slope_s").get<Slope>();
  w.count_s = j.at("count_s").get<std::uint64_t>();
}

void to_json(json& j, const RectangleFailure& f) {
  j = {{"curve", to_string(f.curve)}, {"host", to_string(f.host)}, {"reason", f.reason}};
}
void from_json(const json& j, RectangleFailure& f) {
  f.curve = role_from(j.at("curve"));
  f.host = host_from(j.at("host"));
  f.reason = j.at("reason").get<std::string>();
}

void to_json(json& j, const Distance3Certificate& c) {
  j = {{"verdict", to_string(c.verdict)},
       {"witnesses", c.witnesses},
       {"total_arc_count", c.total_arc_count},
       {"arc_floor_met", c.arc_floor_met},
       {"failure", c.failure ? json(*c.failure) : json(nullptr)},
       {"structural_precondition", c.structural_precondition}};
}
void from_json(const json& j, Distance3Certificate& c) {
  c.verdict = verdict_from(j.at("verdict"));
  c.witnesses = j.at("witnesses").get<std::vector<RectangleWitness>>();
  c.total_arc_count = j.at("total_arc_count").get<std::uint64_t>();
  c.arc_floor_met = j.at("arc_floor_met").get<bool>();
  if (j.at("failure").is_null()) {
    c.failure.reset();
  } else {
    c.failure = j.at("failure").get<RectangleFailure>();
  }
  c.structural_precondition = j.at("structural_precondition").get<std::string>();
}

void to_json(json& j, const StrictWitness& w) {
  j = {{"host", to_string(w.host)}, {"curve", to_string(w.curve)}, {"slope", w.slope}, {"denominator", w.denominator}};
}
void from_json(const json& j, StrictWitness& w) {
  w.host = host_from(j.at("host"));
  w.curve = role_from(j.at("curve"));
  w.slope = j.at("slope").get<Slope>();
  w.denominator = j.at("denominator").get<std::uint64_t>();
}

void to_json(json& j, const SumsResult& r) {
  j = {{"is_sums", r.is_sums}, {"rectangle_pass", r.rectangle_pass}, {"strict_witnesses", r.strict_witnesses}};
}
void from_json(const json& j, SumsResult& r) {
  r.is_sums = j.at("is_sums").get<bool>();
  r.rectangle_pass = j.at("rectangle_pass").get<bool>();
  r.strict_witnesses = j.at("strict_witnesses").get<std::vector<StrictWitness>>();
}

void to_json(json& j, const SurgerySpec& s) {
  j = {{"slope_cX", s.slope_cx},
       {"slope_cY", s.slope_cy},
       {"slope_cA", s.slope_ca},
       {"slope_cB", s.slope_cb},
       {"twist", to_string(s.twist_direction)},
       {"mode", s.pair_mode ? "pair" : "single"},
       {"identification", to_string(s.identification)}};
}
void from_json(const json& j, SurgerySpec& s) {
  s.slope_cx = j.at("slope_cX").get<Slope>();
  s.slope_cy = j.at("slope_cY").get<Slope>();
  s.slope_ca = j.at("slope_cA").get<Slope>();
  s.slope_cb = j.at("slope_cB").get<Slope>();
  s.twist_direction = twist_from_string(j.at("twist").get<std::string>());
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "pair" && mode != "single") throw Error(ErrorCode::ParseError, "mode must be single or pair");
  s.pair_mode = mode == "pair";
  s.identification = identification_from_string(j.at("identification").get<std::string>());
}

void to_json(json& j, const InvariantReport& r) {
  json tuples = json::array();
  for (std::size_t i = 0; i < kInvariantSlots.size(); ++i) {
    tuples.push_back({{"curve", to_string(kInvariantSlots[i].first)},
                      {"host", to_string(kInvariantSlots[i].second)},
                      {"denominators", r.denom_tuples[i]}});
  }
  j = {{"quadruple", {{"a.x", r.quadruple[0]}, {"a.y", r.quadruple[1]}, {"b.x", r.quadruple[2]}, {"b.y", r.quadruple[3]}}},
       {"denom_tuples", tuples}};
}
void from_json(const json& j, InvariantReport& r) {
  const auto& q = j.at("quadruple");
  r.quadruple = {q.at("a.x").get<std::uint64_t>(), q.at("a.y").get<std::uint64_t>(), q.at("b.x").get<std::uint64_t>(),
                 q.at("b.y").get<std::uint64_t>()};
  const auto& tuples = j.at("denom_tuples");
  if (tuples.size() != kInvariantSlots.size()) throw Error(ErrorCode::ParseError, "expected four denominator tuples");
  for (std::size_t i = 0; i < kInvariantSlots.size(); ++i) {
    r.denom_tuples[i] = tuples[i].at("denominators").get<std::vector<std::uint64_t>>();
  }
}

void to_json(json& j, const PairReport& r) {
  j = {{"spec", r.spec},
       {"exchanged_spec", r.exchanged_spec},
       {"certificate_1", r.certificate_1},
       {"certificate_2", r.certificate_2},
       {"invariants_1", r.invariants_1},
       {"invariants_2", r.invariants_2},
       {"verdict", to_string(r.verdict)}};
}
void from_json(const json& j, PairReport& r) {
  r.spec = j.at("spec").get<SurgerySpec>();
  r.exchanged_spec = j.at("exchanged_spec").get<SurgerySpec>();
  r.certificate_1 = j.at("certificate_1").get<Distance3Certificate>();
  r.certificate_2 = j.at("certificate_2").get<Distance3Certificate>();
  r.invariants_1 = j.at("invariants_1").get<InvariantReport>();
  r.invariants_2 = j.at("invariants_2").get<InvariantReport>();
  r.verdict = pair_verdict_from_string(j.at("verdict").get<std::string>());
}

void to_json(json& j, const SampleStats& s) {
  j = {{"n", s.n},
       {"height", s.height},
       {"seed", s.seed},
       {"mode", s.pair_mode ? "pair" : "single"},
       {"valid", s.valid},
       {"certified", s.certified},
       {"distinguishable", s.distinguishable},
       {"rejections", s.rejections},
       {"valid_fraction", ratio_json(s.valid_fraction())},
       {"certified_fraction", ratio_json(s.certified_fraction())},
       {"distinguishable_fraction", ratio_json(s.distinguishable_fraction())}};
}
void from_json(const json& j, SampleStats& s) {
  s.n = j.at("n").get<std::uint64_t>();
  s.height = j.at("height").get<std::int64_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.pair_mode = j.at("mode").get<std::string>() == "pair";
  s.valid = j.at("valid").get<std::uint64_t>();
  s.certified = j.at("certified").get<std::uint64_t>();
  s.distinguishable = j.at("distinguishable").get<std::uint64_t>();
  s.rejections = j.at("rejections").get<std::map<std::string, std::uint64_t>>();
}

void to_json(json& j, const Disagreement& d) {
  j = {{"kind", d.kind}, {"first", d.first}, {"second", d.second}, {"expected", d.expected}, {"observed", d.observed}};
}
void from_json(const json& j, Disagreement& d) {
  d.kind = j.at("kind").get<std::string>();
  d.first = j.at("first").get<std::string>();
  d.second = j.at("second").get<std::string>();
  d.expected = j.at("expected").get<std::string>();
  d.observed = j.at("observed").get<std::string>();
}

void to_json(json& j, const SweepReport& r) {
  j = {{"compared", r.compared}, {"disagreements", r.disagreements}};
}
void from_json(const json& j, SweepReport& r) {
  r.compared = j.at("compared").get<std::uint64_t>();
  r.disagreements = j.at("disagreements").get<std::vector<Disagreement>>();
}

void to_json(json& j, const DcpWitness& w) {
  j = {{"curve", w.curve}, {"h_meridian", w.h_meridian}, {"j_meridian", w.j_meridian}};
}

json classification_json(const Slope& s) {
  json quantities = json::array();
  for (const auto& q : distance_quantities(s)) {
    quantities.push_back({{"label", q.label}, {"value", q.value}, {"remote_only", q.remote_only}});
  }
  return {{"slope", s}, {"class", to_string(classify(s))}, {"quantities", quantities}};
}

void to_json(json& j, const ReportDocument& d) {
  j = {{"schema_version", d.schema_version},
       {"command", d.command},
       {"inputs", d.inputs},
       {"result", d.result},
       {"diagnostics", d.diagnostics}};
}
void from_json(const json& j, ReportDocument& d) {
  d.schema_version = j.at("schema_version").get<std::string>();
  d.command = j.at("command").get<std::string>();
  d.inputs = j.at("inputs");
  d.result = j.at("result");
  d.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
}

std::string serialize(const ReportDocument& doc) { return json(doc).dump(); }

ReportDocument parse_report(const std::string& text) {
  try {
    return json::parse(text).get<ReportDocument>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace hsplit
