#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hsplit/certify.hpp"
#include "hsplit/construct.hpp"
#include "hsplit/farey.hpp"
#include "hsplit/kernels.hpp"
#include "hsplit/surface.hpp"

namespace hsplit {

inline constexpr const char* kSchemaVersion = "hsplit-report/1";

struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> diagnostics;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Compact, key-sorted UTF-8 encoding.
std::string serialize(const ReportDocument& doc);
/// Throws Error{ParseError} on malformed text or a missing schema_version.
ReportDocument parse_report(const std::string& text);

void to_json(nlohmann::json& j, const ReportDocument& d);
void from_json(const nlohmann::json& j, ReportDocument& d);

void to_json(nlohmann::json& j, const Slope& s);
void from_json(const nlohmann::json& j, Slope& s);

void to_json(nlohmann::json& j, const ArcFamily& f);
void from_json(const nlohmann::json& j, ArcFamily& f);

void to_json(nlohmann::json& j, const TwistedPresentation& p);
void from_json(const nlohmann::json& j, TwistedPresentation& p);

void to_json(nlohmann::json& j, const RectangleWitness& w);
void from_json(const nlohmann::json& j, RectangleWitness& w);

void to_json(nlohmann::json& j, const RectangleFailure& f);
void from_json(const nlohmann::json& j, RectangleFailure& f);

void to_json(nlohmann::json& j, const Distance3Certificate& c);
void from_json(const nlohmann::json& j, Distance3Certificate& c);

void to_json(nlohmann::json& j, const StrictWitness& w);
void from_json(const nlohmann::json& j, StrictWitness& w);

void to_json(nlohmann::json& j, const SumsResult& r);
void from_json(const nlohmann::json& j, SumsResult& r);

void to_json(nlohmann::json& j, const SurgerySpec& s);
void from_json(const nlohmann::json& j, SurgerySpec& s);

void to_json(nlohmann::json& j, const InvariantReport& r);
void from_json(const nlohmann::json& j, InvariantReport& r);

void to_json(nlohmann::json& j, const PairReport& r);
void from_json(const nlohmann::json& j, PairReport& r);

void to_json(nlohmann::json& j, const SampleStats& s);
void from_json(const nlohmann::json& j, SampleStats& s);

void to_json(nlohmann::json& j, const Disagreement& d);
void from_json(const nlohmann::json& j, Disagreement& d);

void to_json(nlohmann::json& j, const SweepReport& r);
void from_json(const nlohmann::json& j, SweepReport& r);

void to_json(nlohmann::json& j, const DcpWitness& w);

/// Result payload of the classify command.
nlohmann::json classification_json(const Slope& s);

}  // namespace hsplit
