// hsplit: classify slopes, certify and compare constructed splittings, sample
// genericity statistics, and run the oracle sweeps. One JSON report on stdout;
// exit 0 affirmative, 1 negative verdict, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hsplit/error.hpp"
#include "hsplit/report.hpp"

using namespace hsplit;
using nlohmann::json;

namespace {

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

constexpr std::int64_t kFalsifierBound = 6;

int emit(const ReportDocument& doc, int code) {
  std::cout << serialize(doc) << "\n";
  for (const auto& d : doc.diagnostics) std::cerr << d << "\n";
  return code;
}

int fail(ReportDocument doc, ErrorCode code, const std::string& message) {
  doc.result = {{"error", to_string(code)}, {"message", message}};
  doc.diagnostics.push_back(message);
  return emit(doc, kUsage);
}

SurgerySpec read_spec(const std::string& path, const std::string& direction) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  SurgerySpec s = parse_spec(buf.str());
  if (!direction.empty()) s.twist_direction = twist_from_string(direction);
  return s;
}

json spec_inputs(const std::string& path, const SurgerySpec& s) {
  return {{"spec_path", path}, {"spec", s}, {"spec_text", format_spec(s)}};
}

json descriptor_json(const SplittingDescriptor& d) {
  auto curve = [](const JCurve& c) -> json {
    if (const auto* t = std::get_if<TwistedPresentation>(&c)) return *t;
    const auto& cc = std::get<ClosedCurve>(c);
    return {{"closed_curve", {{"host", to_string(cc.host)}, {"slope", cc.slope}}}};
  };
  return {{"meridian_a", d.meridian_a},
          {"meridian_b", d.meridian_b},
          {"x", curve(d.x)},
          {"y", curve(d.y)},
          {"identification", to_string(d.identification)},
          {"direction", to_string(d.direction)}};
}

json falsifier_json(const SplittingDescriptor& d) {
  const auto w = bounded_dcp_search(d, kFalsifierBound);
  return {{"height_bound", kFalsifierBound}, {"witness", w ? json(*w) : json(nullptr)}};
}

int cmd_classify(ReportDocument& doc, const std::string& text) {
  doc.inputs = {{"slope", text}};
  const Slope s = Slope::parse(text);
  doc.result = classification_json(s);
  return emit(doc, kAffirmative);
}

int cmd_certify(ReportDocument& doc, const std::string& path, const std::string& direction) {
  doc.inputs = {{"spec_path", path}};
  const SurgerySpec s = read_spec(path, direction);
  doc.inputs = spec_inputs(path, s);
  const auto d = build_splitting(s);
  const auto cert = certify_distance3(d);
  doc.result = {{"descriptor", descriptor_json(d)},
                {"certificate", cert},
                {"sums", certify_sums(d)},
                {"falsifier", falsifier_json(d)}};
  if (cert.failure) {
    doc.diagnostics.push_back("not certified: " + std::string(to_string(cert.failure->curve)) + " in " +
                              std::string(to_string(cert.failure->host)) + ": " + cert.failure->reason);
  }
  return emit(doc, cert.verdict == Verdict::Certified ? kAffirmative : kNegative);
}

int cmd_pair(ReportDocument& doc, const std::string& path, const std::string& direction) {
  doc.inputs = {{"spec_path", path}};
  const SurgerySpec s = read_spec(path, direction);
  doc.inputs = spec_inputs(path, s);
  const PairReport r = compare_pair(s);
  doc.result = r;
  const bool both = r.certificate_1.verdict == Verdict::Certified && r.certificate_2.verdict == Verdict::Certified;
  return emit(doc, both ? kAffirmative : kNegative);
}

int cmd_sample(ReportDocument& doc, std::int64_t n, std::int64_t height, std::uint64_t seed, bool single) {
  doc.inputs = {{"n", n}, {"height", height}, {"seed", seed}, {"mode", single ? "single" : "pair"}};
  if (n < 1) throw Error(ErrorCode::FlagError, "--n must be a positive integer");
  const SampleStats st = sample_generic(static_cast<std::uint64_t>(n), height, seed, !single);
  doc.result = st;
  return emit(doc, kAffirmative);
}

json template_rows() {
  json rows = json::array();
  for (auto dir : {Twist::Left, Twist::Right}) {
    const auto traced = trace_template(dir);
    const auto published = template_rectangles(dir);
    rows.push_back({{"direction", to_string(dir)},
                    {"fa_slopes", traced.fa_slopes},
                    {"fb_slopes", traced.fb_slopes},
                    {"fa_counts", traced.fa_counts},
                    {"fb_counts", traced.fb_counts},
                    {"matches", traced == published}});
  }
  return rows;
}

int cmd_oracle(ReportDocument& doc, const std::string& scope, std::int64_t height) {
  doc.inputs = {{"scope", scope}, {"height", height}};
  if (scope != "pairing" && scope != "twist" && scope != "all") {
    throw Error(ErrorCode::FlagError, "--scope must be pairing, twist or all");
  }
  if (height < 1) throw Error(ErrorCode::FlagError, "--height must be a positive integer");
  bool clean = true;
  json result = json::object();
  if (scope != "twist") {
    const auto r = pairing_sweep_parallel(height);
    clean = clean && r.disagreements.empty();
    result["pairing"] = r;
  }
  if (scope != "pairing") {
    const auto r = twist_sweep_parallel(height);
    clean = clean && r.disagreements.empty();
    result["twist"] = r;
    const auto rows = template_rows();
    for (const auto& row : rows) clean = clean && row.at("matches").get<bool>();
    result["template"] = rows;
  }
  doc.result = result;
  if (!clean) doc.diagnostics.push_back("oracle sweep found disagreements");
  return emit(doc, clean ? kAffirmative : kNegative);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-3 genus-2 splittings: classification, certification and sampling"};
  app.require_subcommand(1);

  std::string slope_text;
  std::string spec_path;
  std::string direction;
  std::string scope = "all";
  std::int64_t n = 1000;
  std::int64_t height = 12;
  std::int64_t sample_height = 50;
  std::uint64_t seed = 0;
  bool single = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a slope p/q or inf");
  classify_cmd->add_option("slope", slope_text, "Slope")->required();

  auto* certify_cmd = app.add_subcommand("certify", "Build and certify the splitting of a spec file");
  certify_cmd->add_option("--spec", spec_path, "Spec file")->required();
  certify_cmd->add_option("--direction", direction, "Override the twist (left|right)");

  auto* pair_cmd = app.add_subcommand("pair", "Certify and compare both splittings of a pair-mode spec");
  pair_cmd->add_option("--spec", spec_path, "Spec file")->required();
  pair_cmd->add_option("--direction", direction, "Override the twist (left|right)");

  auto* sample_cmd = app.add_subcommand("sample", "Seeded genericity statistics");
  sample_cmd->add_option("--n", n, "Number of specs");
  sample_cmd->add_option("--height", sample_height, "Slope height bound");
  sample_cmd->add_option("--seed", seed, "Generator seed");
  sample_cmd->add_flag("--single", single, "Use single-mode gates");

  auto* oracle_cmd = app.add_subcommand("oracle", "Fast path against oracle sweeps");
  oracle_cmd->add_option("--scope", scope, "pairing|twist|all");
  oracle_cmd->add_option("--height", height, "Slope height bound");

  ReportDocument doc;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cerr << app.help();
    doc.command = "help";
    return emit(doc, kAffirmative);
  } catch (const CLI::ParseError& e) {
    doc.command = argc > 1 ? argv[1] : "";
    return fail(doc, ErrorCode::FlagError, e.what());
  }

  try {
    if (*classify_cmd) {
      doc.command = "classify";
      return cmd_classify(doc, slope_text);
    }
    if (*certify_cmd) {
      doc.command = "certify";
      return cmd_certify(doc, spec_path, direction);
    }
    if (*pair_cmd) {
      doc.command = "pair";
      return cmd_pair(doc, spec_path, direction);
    }
    if (*sample_cmd) {
      doc.command = "sample";
      return cmd_sample(doc, n, sample_height, seed, single);
    }
    doc.command = "oracle";
    return cmd_oracle(doc, scope, height);
  } catch (const Error& e) {
    return fail(doc, e.code(), e.what());
  } catch (const std::exception& e) {
    return fail(doc, ErrorCode::ParseError, e.what());
  }
}
