#include "concern_scan/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "concern_scan/csv.hpp"

namespace concern_scan {

namespace {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

struct ColumnMap {
  std::optional<std::size_t> id, date, year;
  std::size_t text = 0;
};

std::optional<std::size_t> resolve(const std::string& name, const csv::Row* header) {
  if (name.empty()) return std::nullopt;
  if (header) {
    auto it = std::find_if(header->begin(), header->end(),
                           [&](const std::string& h) { return csv::trim(h) == name; });
    if (it == header->end()) throw MissingColumn(name);
    return static_cast<std::size_t>(it - header->begin());
  }
  long long idx = 0;
  if (!csv::parse_int(name, idx) || idx < 0) throw MissingColumn(name);
  return static_cast<std::size_t>(idx);
}

std::string dedup_key(const csv::Row& row, const ColumnMap& cols) {
  std::string key;
  for (auto col : {std::optional<std::size_t>(cols.text), cols.id, cols.date, cols.year}) {
    if (!col) continue;
    const std::string& v = row[*col];
    key += std::to_string(v.size());
    key.push_back(':');
    key += v;
  }
  return key;
}

}  // namespace

void IngestConfig::validate() const {
  if (text_column.empty()) throw std::invalid_argument("text column is required");
  if (date_column.empty() && year_column.empty()) {
    throw std::invalid_argument("a date column or a year column is required");
  }
}

std::string_view to_string(RowIssueKind kind) {
  switch (kind) {
    case RowIssueKind::bad_date: return "BadDate";
    case RowIssueKind::bad_year: return "BadYear";
    case RowIssueKind::empty_text: return "EmptyText";
    case RowIssueKind::duplicate_id: return "DuplicateId";
    case RowIssueKind::field_count: return "FieldCount";
  }
  return "Unknown";
}

std::string RowIssue::describe() const {
  return "row " + std::to_string(row) + ": " + std::string(to_string(kind)) + " '" + value + "'";
}

std::optional<std::chrono::year_month_day> parse_iso_date(std::string_view text) {
  text = csv::trim(text);
  if (text.size() > 10 && (text[10] == 'T' || text[10] == ' ')) text = text.substr(0, 10);
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  long long y = 0, m = 0, d = 0;
  if (!csv::parse_int(text.substr(0, 4), y) || !csv::parse_int(text.substr(5, 2), m) ||
      !csv::parse_int(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  std::chrono::year_month_day ymd{std::chrono::year(static_cast<int>(y)),
                                  std::chrono::month(static_cast<unsigned>(m)),
                                  std::chrono::day(static_cast<unsigned>(d))};
  if (!ymd.ok()) return std::nullopt;
  return ymd;
}

std::string format_iso_date(const std::chrono::year_month_day& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

LoadResult load_reports(const std::string& path, const IngestConfig& cfg) {
  return parse_reports(csv::read_file(path), cfg);
}

LoadResult parse_reports(std::string_view content, const IngestConfig& cfg) {
  cfg.validate();
  auto rows = csv::parse(content, cfg.delimiter);

  LoadResult result;
  const csv::Row* header = nullptr;
  std::size_t first = 0;
  if (cfg.has_header) {
    if (rows.empty()) throw MissingColumn(cfg.text_column);
    header = &rows.front();
    first = 1;
  }
  ColumnMap cols;
  cols.text = *resolve(cfg.text_column, header);
  cols.id = resolve(cfg.id_column, header);
  cols.date = resolve(cfg.date_column, header);
  cols.year = resolve(cfg.year_column, header);
  std::size_t needed = cols.text;
  for (auto c : {cols.id, cols.date, cols.year}) {
    if (c) needed = std::max(needed, *c);
  }
  ++needed;

  std::unordered_set<std::string> seen_rows;
  std::unordered_map<std::string, std::size_t> seen_ids;

  auto reject = [&](std::size_t row, RowIssueKind kind, std::string value) {
    RowIssue issue{row, kind, std::move(value)};
    if (cfg.strict) throw RowRejected(std::move(issue));
    result.issues.push_back(std::move(issue));
  };

  for (std::size_t r = first; r < rows.size(); ++r) {
    const std::size_t row_no = r - first + 1;
    const csv::Row& row = rows[r];
    ++result.rows_read;
    if (row.size() < needed) {
      reject(row_no, RowIssueKind::field_count, std::to_string(row.size()));
      continue;
    }
    if (!seen_rows.insert(dedup_key(row, cols)).second) {
      ++result.duplicates;
      continue;
    }

    ReportRecord rec;
    rec.id = cols.id ? std::string(csv::trim(row[*cols.id])) : std::to_string(row_no);
    rec.text = row[cols.text];
    if (csv::trim(rec.text).empty()) {
      reject(row_no, RowIssueKind::empty_text, rec.text);
      continue;
    }

    std::string_view date_text = cols.date ? csv::trim(row[*cols.date]) : std::string_view{};
    std::string_view year_text = cols.year ? csv::trim(row[*cols.year]) : std::string_view{};
    if (!date_text.empty()) {
      rec.date = parse_iso_date(date_text);
      if (!rec.date) {
        reject(row_no, RowIssueKind::bad_date, std::string(date_text));
        continue;
      }
    }
    if (!year_text.empty()) {
      long long y = 0;
      if (!csv::parse_int(year_text, y) || y < kMinYear || y > kMaxYear ||
          (rec.date && static_cast<int>(rec.date->year()) != y)) {
        reject(row_no, RowIssueKind::bad_year, std::string(year_text));
        continue;
      }
      rec.year = static_cast<int>(y);
    } else if (rec.date) {
      rec.year = static_cast<int>(rec.date->year());
      if (rec.year < kMinYear || rec.year > kMaxYear) {
        reject(row_no, RowIssueKind::bad_date, std::string(date_text));
        continue;
      }
    } else {
      reject(row_no, RowIssueKind::bad_date, "");
      continue;
    }

    if (auto [it, inserted] = seen_ids.emplace(rec.id, row_no); !inserted) {
      reject(row_no, RowIssueKind::duplicate_id, rec.id);
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

void write_reports(std::ostream& out, std::span<const ReportRecord> records) {
  csv::write_row(out, {"id", "date", "year", "text"});
  for (const auto& r : records) {
    csv::write_row(out, {r.id, r.date ? format_iso_date(*r.date) : std::string{},
                         std::to_string(r.year), r.text});
  }
}

}  // namespace concern_scan
