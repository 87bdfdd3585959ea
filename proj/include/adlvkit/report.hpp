#pragma once

#include <string>

#include "json.hpp"

#include "adlvkit/bg_poset.hpp"
#include "adlvkit/classifier.hpp"

namespace adlv {

inline constexpr const char* kReportSchema = "adlvkit.report/1";
inline constexpr const char* kCodeVersion = "adlvkit-0.1.0";

nlohmann::ordered_json class_to_json(const ClassInvariant& c);
nlohmann::ordered_json report_to_json(const AffineWeyl& g, const ClassificationReport& r);
// Only the B(G)_w rows, with the extremal classes.
nlohmann::ordered_json bgw_to_json(const AffineWeyl& g, const ClassificationReport& r);

// Rendered forms end with a newline.
std::string render_json(const nlohmann::ordered_json& j);
std::string render_report_table(const AffineWeyl& g, const ClassificationReport& r);
std::string render_bgw_table(const ClassificationReport& r);

// One line summary used by scan, read back from a rendered report.
std::string scan_row(const nlohmann::ordered_json& report);
std::string scan_header();

}  // namespace adlv
