#pragma once

#include "molop/scheduler.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace molop {

enum class ReportFormat { Markdown, Csv, Structured };

std::optional<ReportFormat> report_format_from_string(const std::string& s);

/// Renders the report as a document string. Markdown shows 2-decimal
/// numerics; CSV uses fixed 6-decimal cells; structured JSON carries full
/// precision including FOU corners, centroids, and firing levels.
std::string render_report(const RecommendationReport& report, ReportFormat format);

/// Writes via a temp file and rename so readers never observe a partial file.
void write_report(const RecommendationReport& report, ReportFormat format,
                  const std::filesystem::path& out);

/// One parsed CSV report cell (used by `compare` and the round-trip tests).
struct ReportCell {
    std::string scope;   // "welder" | "overall"
    std::string welder;  // id or empty
    std::string objective;
    std::string method;  // "pr" | "two-tuple"
    double numeric = 0.0;
    std::string label;
    std::optional<double> alpha;
    std::optional<double> similarity;
};

std::vector<ReportCell> parse_csv_report(const std::filesystem::path& file);

/// Cell-wise comparison of two CSV reports. Returns human-readable
/// difference lines (empty when the reports agree within `tol`).
std::vector<std::string> compare_reports(const std::vector<ReportCell>& a,
                                         const std::vector<ReportCell>& b, double tol);

} // namespace molop
