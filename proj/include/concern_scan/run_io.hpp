#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "concern_scan/pipeline.hpp"
#include "concern_scan/trends.hpp"

namespace concern_scan {

enum class OutputFormat { csv, json, table };

std::optional<OutputFormat> parse_output_format(std::string_view name);
/// File extension used by export_run: csv, json or txt.
std::string_view file_extension(OutputFormat format);

// Header row of the yearly CSV.
inline constexpr std::string_view kYearlyHeader =
    "Year,Total Reports,Negative (%),Positive (%),Neutral (%),Mean Polarity Score";

void write_reports(std::ostream& out, std::span<const ScoredReport> reports, OutputFormat format);
void write_yearly(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format);
/// Per-year (sentence, emotion) hit counts and shares.
void write_emotion_series(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format);
/// Per-year totals, negative-class reports and concern reports.
void write_concern_series(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format);
/// Slope, intercept, r-squared and outlier years. JSON also carries the points.
void write_regression(std::ostream& out, const RegressionFit& fit, OutputFormat format);
void write_regression_points(std::ostream& out, const RegressionFit& fit, OutputFormat format);
void write_word_frequencies(std::ostream& out, const WordFrequency& words, OutputFormat format);

/// Full machine-readable run: config snapshot, counts, rejected rows,
/// per-report results, aggregates. Keys are sorted.
void write_run_json(std::ostream& out, const AnalysisRun& run);

/// Writes reports, yearly, emotions, concerns, regression, regression_points
/// and wordfreq in `format`, plus run.json, into `dir` (created if needed).
void export_run(const std::filesystem::path& dir, const AnalysisRun& run, OutputFormat format);

/// Reads run.json from `dir`, or when absent rebuilds the run from the CSV
/// export. Sentence token lists are not part of an export and stay empty.
AnalysisRun load_run(const std::filesystem::path& dir);

}  // namespace concern_scan
