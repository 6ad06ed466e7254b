#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "concern_scan/errors.hpp"

namespace concern_scan {

struct ReportRecord {
  std::string id;
  std::optional<std::chrono::year_month_day> date;
  int year = 0;
  std::string text;

  bool operator==(const ReportRecord&) const = default;
};

/// Column names are header names, or 0-based positional indices written as
/// decimal strings when `has_header` is false. Empty means "not configured".
struct IngestConfig {
  char delimiter = ',';
  std::string text_column = "text";
  std::string id_column = "id";
  std::string date_column = "date";
  std::string year_column = "year";
  bool has_header = true;
  /// Abort on the first rejected row instead of collecting it.
  bool strict = false;

  /// Throws std::invalid_argument when no text column or no date/year column is set.
  void validate() const;
};

enum class RowIssueKind { bad_date, bad_year, empty_text, duplicate_id, field_count };

std::string_view to_string(RowIssueKind kind);

struct RowIssue {
  std::size_t row = 0;  ///< 1-based data record number, header excluded
  RowIssueKind kind{};
  std::string value;

  std::string describe() const;
};

/// Thrown in strict mode for the first rejected row.
class RowRejected : public Error {
 public:
  explicit RowRejected(RowIssue issue) : Error(issue.describe()), issue_(std::move(issue)) {}
  const RowIssue& issue() const noexcept { return issue_; }

 private:
  RowIssue issue_;
};

struct LoadResult {
  std::vector<ReportRecord> records;  ///< file order, first occurrence kept
  std::vector<RowIssue> issues;
  std::size_t rows_read = 0;
  std::size_t duplicates = 0;
};

/// Parses `YYYY-MM-DD`, optionally followed by `T...` or a space and a time.
std::optional<std::chrono::year_month_day> parse_iso_date(std::string_view text);
std::string format_iso_date(const std::chrono::year_month_day& date);

LoadResult load_reports(const std::string& path, const IngestConfig& cfg);
LoadResult parse_reports(std::string_view content, const IngestConfig& cfg);

/// Writes records as `id,date,year,text` with a header, readable back with the
/// default IngestConfig.
void write_reports(std::ostream& out, std::span<const ReportRecord> records);

}  // namespace concern_scan
