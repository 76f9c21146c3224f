#pragma once

#include <string>

#include <json.hpp>

#include "ltimes/classify.hpp"
#include "ltimes/conjectures.hpp"

namespace ltimes {

/// JSON reports carry this version so consumers can detect format changes.
inline constexpr int kReportSchemaVersion = 1;

using OrderedJson = nlohmann::ordered_json;

/// Coefficients render as decimal strings: Betti numbers outgrow fixed-width
/// integers quickly and JSON numbers are not reliable carriers.
OrderedJson to_json(const BettiSeries& s);
OrderedJson to_json(const TruncatedSeries& s);
OrderedJson to_json(const StructureFlags& f);
OrderedJson to_json(const StructureVerdict& v);
OrderedJson to_json(const Witness& w);
OrderedJson to_json(const ConjectureReport& r);
OrderedJson to_json(const CiFractionDiagnostic& d);

/// The standard report envelope: schema_version + command.
OrderedJson report_envelope(const std::string& command);

/// One space-separated line of coefficients for table output.
std::string coefficients_line(const BettiSeries& s);

} // namespace ltimes
