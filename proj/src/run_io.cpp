#include "concern_scan/run_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "concern_scan/csv.hpp"
#include "concern_scan/errors.hpp"

namespace concern_scan {

namespace {

using nlohmann::json;

double num(double v) { return v == 0.0 ? 0.0 : v; }

std::string fixed(double v, int digits) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << num(v);
  std::string s = ss.str();
  if (s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s.front() == '-' ? 1 : 0);
  return s;
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right) << cells[c];
    }
    out << std::right << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  csv::write_row(out, header);
  for (const auto& row : rows) csv::write_row(out, row);
}

void emit(std::ostream& out, OutputFormat format, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows, const json& j) {
  switch (format) {
    case OutputFormat::csv: write_csv(out, header, rows); break;
    case OutputFormat::table: write_table(out, header, rows); break;
    case OutputFormat::json: out << j.dump(2) << '\n'; break;
  }
}

json emotions_json(const EmotionCounts& counts) {
  json j = json::object();
  for (Emotion e : kAllEmotions) j[std::string(to_string(e))] = counts[static_cast<std::size_t>(e)];
  return j;
}

EmotionCounts emotions_from_json(const json& j) {
  EmotionCounts counts{};
  for (Emotion e : kAllEmotions) counts[static_cast<std::size_t>(e)] = j.at(std::string(to_string(e))).get<std::size_t>();
  return counts;
}

json report_json(const ScoredReport& r) {
  const auto& a = r.analysis;
  json j;
  j["id"] = r.record.id;
  j["year"] = r.record.year;
  j["date"] = r.record.date ? json(format_iso_date(*r.record.date)) : json(nullptr);
  j["s_total"] = a.s_total;
  j["n"] = a.n;
  j["r_neg"] = num(a.r_neg);
  j["a_neg"] = num(a.a_neg);
  j["a_pol"] = num(a.a_pol);
  j["sentiment_class"] = std::string(to_string(a.sentiment_class));
  j["is_concern"] = a.is_concern;
  j["neg_flags"] = json::array();
  for (bool f : a.neg_flags) j["neg_flags"].push_back(f);
  j["neg_scores"] = json::array();
  for (double s : a.neg_scores) j["neg_scores"].push_back(num(s));
  j["emotion_hits"] = emotions_json(r.emotion_hits);
  return j;
}

json yearly_json(const YearlySummary& y) {
  json j;
  j["year"] = y.year;
  j["total_reports"] = y.total_reports;
  j["negative_reports"] = y.negative_reports;
  j["positive_reports"] = y.positive_reports;
  j["neutral_reports"] = y.neutral_reports;
  j["concern_count"] = y.concern_count;
  j["sentence_count"] = y.sentence_count;
  j["pct_negative"] = num(y.pct_negative);
  j["pct_positive"] = num(y.pct_positive);
  j["pct_neutral"] = num(y.pct_neutral);
  j["mean_polarity"] = num(y.mean_polarity);
  j["emotion_hits"] = emotions_json(y.emotion_hits);
  return j;
}

YearlySummary yearly_from_json(const json& j) {
  YearlySummary y;
  y.year = j.at("year").get<int>();
  y.total_reports = j.at("total_reports").get<std::size_t>();
  y.negative_reports = j.at("negative_reports").get<std::size_t>();
  y.positive_reports = j.at("positive_reports").get<std::size_t>();
  y.neutral_reports = j.at("neutral_reports").get<std::size_t>();
  y.concern_count = j.at("concern_count").get<std::size_t>();
  y.sentence_count = j.at("sentence_count").get<std::size_t>();
  y.pct_negative = j.at("pct_negative").get<double>();
  y.pct_positive = j.at("pct_positive").get<double>();
  y.pct_neutral = j.at("pct_neutral").get<double>();
  y.mean_polarity = j.at("mean_polarity").get<double>();
  y.emotion_hits = emotions_from_json(j.at("emotion_hits"));
  return y;
}

json point_json(const RegressionFit& fit, std::size_t i) {
  const auto& p = fit.points[i];
  json j;
  j["year"] = p.year;
  j["x"] = num(p.x);
  j["y"] = num(p.y);
  j["fitted"] = num(fit.predict(p.x));
  j["residual"] = num(fit.residuals[i]);
  j["standardized_residual"] = num(fit.standardized_residuals[i]);
  j["outlier"] = std::find(fit.outlier_years.begin(), fit.outlier_years.end(), p.year) != fit.outlier_years.end();
  return j;
}

json regression_json(const RegressionFit& fit) {
  json j;
  j["slope"] = num(fit.slope);
  j["intercept"] = num(fit.intercept);
  j["r_squared"] = num(fit.r_squared);
  j["outlier_years"] = fit.outlier_years;
  j["points"] = json::array();
  for (std::size_t i = 0; i < fit.points.size(); ++i) j["points"].push_back(point_json(fit, i));
  return j;
}

RegressionFit regression_from_json(const json& j) {
  RegressionFit fit;
  fit.slope = j.at("slope").get<double>();
  fit.intercept = j.at("intercept").get<double>();
  fit.r_squared = j.at("r_squared").get<double>();
  fit.outlier_years = j.at("outlier_years").get<std::vector<int>>();
  for (const auto& p : j.at("points")) {
    fit.points.push_back({p.at("year").get<int>(), p.at("x").get<double>(), p.at("y").get<double>()});
    fit.residuals.push_back(p.at("residual").get<double>());
    fit.standardized_residuals.push_back(p.at("standardized_residual").get<double>());
  }
  return fit;
}

json words_json(const WordFrequency& words) {
  json j = json::array();
  for (const auto& w : words) j.push_back({{"word", w.word}, {"count", w.count}});
  return j;
}

std::vector<std::string> sorted_list(const WordSet& set) {
  std::vector<std::string> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

json config_json(const AnalysisRun& run) {
  const auto& c = run.config;
  json j;
  j["corpus"] = run.corpus_path;
  j["polarity_lexicon"] = run.lexicons.polarity;
  j["emotion_lexicon"] = run.lexicons.emotion;
  j["ingest"] = {{"delimiter", std::string(1, c.ingest.delimiter)},
                 {"text_column", c.ingest.text_column},
                 {"id_column", c.ingest.id_column},
                 {"date_column", c.ingest.date_column},
                 {"year_column", c.ingest.year_column},
                 {"has_header", c.ingest.has_header},
                 {"strict", c.ingest.strict}};
  j["prep"] = {{"stopwords", sorted_list(c.prep.stopwords)},
               {"negators", sorted_list(c.prep.negators)},
               {"abbreviations", sorted_list(c.prep.abbreviations)}};
  j["sentiment"] = {{"negation_factor", num(c.sentiment.negation_factor)},
                    {"negation_window", c.sentiment.negation_window}};
  j["thresholds"] = {{"delta1", num(c.thresholds.delta1)},
                     {"delta2", num(c.thresholds.delta2)},
                     {"delta3", num(c.thresholds.delta3)},
                     {"neg_emotion_cut", num(c.thresholds.neg_emotion_cut)},
                     {"neg_polarity_cut", num(c.thresholds.neg_polarity_cut)},
                     {"polarity_rule", c.thresholds.polarity_rule == PolarityRule::literal ? "literal" : "negative_bias"}};
  j["top_words"] = c.top_words;
  return j;
}

void config_from_json(const json& j, AnalysisRun& run) {
  auto& c = run.config;
  run.corpus_path = j.at("corpus").get<std::string>();
  run.lexicons.polarity = j.at("polarity_lexicon").get<std::string>();
  run.lexicons.emotion = j.at("emotion_lexicon").get<std::string>();
  const auto& in = j.at("ingest");
  const auto delim = in.at("delimiter").get<std::string>();
  c.ingest.delimiter = delim.empty() ? ',' : delim.front();
  c.ingest.text_column = in.at("text_column").get<std::string>();
  c.ingest.id_column = in.at("id_column").get<std::string>();
  c.ingest.date_column = in.at("date_column").get<std::string>();
  c.ingest.year_column = in.at("year_column").get<std::string>();
  c.ingest.has_header = in.at("has_header").get<bool>();
  c.ingest.strict = in.at("strict").get<bool>();
  const auto& prep = j.at("prep");
  auto to_set = [](const json& a) {
    auto v = a.get<std::vector<std::string>>();
    return WordSet(v.begin(), v.end());
  };
  c.prep.stopwords = to_set(prep.at("stopwords"));
  c.prep.negators = to_set(prep.at("negators"));
  c.prep.abbreviations = to_set(prep.at("abbreviations"));
  c.sentiment.negation_factor = j.at("sentiment").at("negation_factor").get<double>();
  c.sentiment.negation_window = j.at("sentiment").at("negation_window").get<std::size_t>();
  const auto& t = j.at("thresholds");
  c.thresholds.delta1 = t.at("delta1").get<double>();
  c.thresholds.delta2 = t.at("delta2").get<double>();
  c.thresholds.delta3 = t.at("delta3").get<double>();
  c.thresholds.neg_emotion_cut = t.at("neg_emotion_cut").get<double>();
  c.thresholds.neg_polarity_cut = t.at("neg_polarity_cut").get<double>();
  c.thresholds.polarity_rule =
      t.at("polarity_rule").get<std::string>() == "literal" ? PolarityRule::literal : PolarityRule::negative_bias;
  c.top_words = j.at("top_words").get<std::size_t>();
}

json counts_json(const RunCounts& c) {
  return {{"rows_read", c.rows_read},   {"duplicates", c.duplicates},
          {"rejected", c.rejected},     {"analyzed", c.analyzed},
          {"sentences", c.sentences},   {"empty_reports", c.empty_reports},
          {"concern_reports", c.concern_reports}};
}

std::string outlier_list(const std::vector<int>& years) {
  std::string s;
  for (std::size_t i = 0; i < years.size(); ++i) {
    if (i) s.push_back(';');
    s += std::to_string(years[i]);
  }
  return s;
}

// ---- CSV import helpers ----

class CsvTable {
 public:
  explicit CsvTable(const std::filesystem::path& path) : path_(path.string()) {
    rows_ = csv::parse(csv::read_file(path_));
    if (rows_.empty()) throw ParseError(1, path_ + ": missing header");
  }
  std::size_t size() const { return rows_.size() - 1; }
  const std::string& at(std::size_t row, std::string_view column) const {
    const auto& header = rows_.front();
    auto it = std::find(header.begin(), header.end(), column);
    if (it == header.end()) throw MissingColumn(std::string(column));
    const auto& r = rows_.at(row + 1);
    const auto c = static_cast<std::size_t>(it - header.begin());
    if (c >= r.size()) throw ParseError(row + 2, path_ + ": short row");
    return r[c];
  }
  double real(std::size_t row, std::string_view column) const {
    double v = 0.0;
    if (!csv::parse_real(at(row, column), v)) throw ParseError(row + 2, path_ + ": bad number in " + std::string(column));
    return v;
  }
  long long integer(std::size_t row, std::string_view column) const {
    long long v = 0;
    if (!csv::parse_int(at(row, column), v)) throw ParseError(row + 2, path_ + ": bad integer in " + std::string(column));
    return v;
  }

 private:
  std::string path_;
  std::vector<csv::Row> rows_;
};

std::string share_column(Emotion e) { return std::string(to_string(e)) + "_share"; }

AnalysisRun load_run_csv(const std::filesystem::path& dir) {
  AnalysisRun run;
  CsvTable reports(dir / "reports.csv");
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ScoredReport r;
    r.record.id = reports.at(i, "id");
    r.record.year = static_cast<int>(reports.integer(i, "year"));
    auto& a = r.analysis;
    a.s_total = static_cast<std::size_t>(reports.integer(i, "s_total"));
    a.r_neg = reports.real(i, "r_neg");
    a.a_neg = reports.real(i, "a_neg");
    a.a_pol = reports.real(i, "a_pol");
    a.n = static_cast<std::size_t>(std::llround(a.r_neg * static_cast<double>(a.s_total)));
    auto cls = parse_sentiment_class(reports.at(i, "sentiment_class"));
    if (!cls) throw ParseError(i + 2, "bad sentiment_class");
    a.sentiment_class = *cls;
    a.is_concern = reports.at(i, "is_concern") == "1";
    ++run.counts.analyzed;
    run.counts.sentences += a.s_total;
    if (a.s_total == 0) ++run.counts.empty_reports;
    if (is_concern_report(a)) ++run.counts.concern_reports;
    run.reports.push_back(std::move(r));
  }
  run.counts.rows_read = run.counts.analyzed;

  CsvTable yearly(dir / "yearly.csv");
  CsvTable concerns(dir / "concerns.csv");
  CsvTable emotions(dir / "emotions.csv");
  if (concerns.size() != yearly.size() || emotions.size() != yearly.size()) {
    throw ParseError(1, "yearly, concern and emotion series differ in length");
  }
  for (std::size_t i = 0; i < yearly.size(); ++i) {
    YearlySummary y;
    y.year = static_cast<int>(yearly.integer(i, "Year"));
    if (concerns.integer(i, "Year") != y.year || emotions.integer(i, "Year") != y.year) {
      throw ParseError(i + 2, "year mismatch between series");
    }
    y.total_reports = static_cast<std::size_t>(yearly.integer(i, "Total Reports"));
    y.pct_negative = yearly.real(i, "Negative (%)");
    y.pct_positive = yearly.real(i, "Positive (%)");
    y.pct_neutral = yearly.real(i, "Neutral (%)");
    y.mean_polarity = yearly.real(i, "Mean Polarity Score");
    const auto total = static_cast<double>(y.total_reports);
    y.negative_reports = static_cast<std::size_t>(concerns.integer(i, "Negative Reports"));
    y.positive_reports = static_cast<std::size_t>(std::llround(y.pct_positive * total / 100.0));
    y.neutral_reports = static_cast<std::size_t>(std::llround(y.pct_neutral * total / 100.0));
    y.concern_count = static_cast<std::size_t>(concerns.integer(i, "Concern Reports"));
    y.sentence_count = static_cast<std::size_t>(emotions.integer(i, "Sentences"));
    for (Emotion e : kAllEmotions) {
      y.emotion_hits[static_cast<std::size_t>(e)] = static_cast<std::size_t>(emotions.integer(i, to_string(e)));
    }
    run.yearly.push_back(y);
  }

  CsvTable summary(dir / "regression.csv");
  std::map<std::string, std::string> metrics;
  for (std::size_t i = 0; i < summary.size(); ++i) metrics[summary.at(i, "metric")] = summary.at(i, "value");
  if (metrics.contains("slope")) {
    RegressionFit fit;
    csv::parse_real(metrics["slope"], fit.slope);
    csv::parse_real(metrics["intercept"], fit.intercept);
    csv::parse_real(metrics["r_squared"], fit.r_squared);
    CsvTable points(dir / "regression_points.csv");
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int year = static_cast<int>(points.integer(i, "Year"));
      fit.points.push_back({year, points.real(i, "Total Reports"), points.real(i, "Concern Reports")});
      fit.residuals.push_back(points.real(i, "Residual"));
      fit.standardized_residuals.push_back(points.real(i, "Standardized Residual"));
      if (points.at(i, "Outlier") == "1") fit.outlier_years.push_back(year);
    }
    run.regression = std::move(fit);
  } else {
    run.regression_note = metrics["note"];
  }

  CsvTable words(dir / "wordfreq.csv");
  for (std::size_t i = 0; i < words.size(); ++i) {
    run.words.push_back({words.at(i, "word"), static_cast<std::size_t>(words.integer(i, "count"))});
  }
  return run;
}

AnalysisRun load_run_json(const std::filesystem::path& path) {
  json j;
  try {
    j = json::parse(csv::read_file(path.string()));
  } catch (const json::exception& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  }
  AnalysisRun run;
  try {
    config_from_json(j.at("config"), run);
    const auto& c = j.at("counts");
    run.counts.rows_read = c.at("rows_read").get<std::size_t>();
    run.counts.duplicates = c.at("duplicates").get<std::size_t>();
    run.counts.rejected = c.at("rejected").get<std::size_t>();
    run.counts.analyzed = c.at("analyzed").get<std::size_t>();
    run.counts.sentences = c.at("sentences").get<std::size_t>();
    run.counts.empty_reports = c.at("empty_reports").get<std::size_t>();
    run.counts.concern_reports = c.at("concern_reports").get<std::size_t>();
    for (const auto& issue : j.at("rejected_rows")) {
      RowIssue ri;
      ri.row = issue.at("row").get<std::size_t>();
      ri.value = issue.at("value").get<std::string>();
      const auto kind = issue.at("kind").get<std::string>();
      for (auto k : {RowIssueKind::bad_date, RowIssueKind::bad_year, RowIssueKind::empty_text,
                     RowIssueKind::duplicate_id, RowIssueKind::field_count}) {
        if (to_string(k) == kind) ri.kind = k;
      }
      run.issues.push_back(std::move(ri));
    }
    for (const auto& rj : j.at("reports")) {
      ScoredReport r;
      r.record.id = rj.at("id").get<std::string>();
      r.record.year = rj.at("year").get<int>();
      if (!rj.at("date").is_null()) r.record.date = parse_iso_date(rj.at("date").get<std::string>());
      auto& a = r.analysis;
      a.s_total = rj.at("s_total").get<std::size_t>();
      a.n = rj.at("n").get<std::size_t>();
      a.r_neg = rj.at("r_neg").get<double>();
      a.a_neg = rj.at("a_neg").get<double>();
      a.a_pol = rj.at("a_pol").get<double>();
      a.sentiment_class = parse_sentiment_class(rj.at("sentiment_class").get<std::string>()).value();
      a.is_concern = rj.at("is_concern").get<bool>();
      a.neg_flags = rj.at("neg_flags").get<std::vector<bool>>();
      a.neg_scores = rj.at("neg_scores").get<std::vector<double>>();
      r.emotion_hits = emotions_from_json(rj.at("emotion_hits"));
      run.reports.push_back(std::move(r));
    }
    for (const auto& y : j.at("yearly")) run.yearly.push_back(yearly_from_json(y));
    const auto& reg = j.at("regression");
    if (reg.contains("note")) {
      run.regression_note = reg.at("note").get<std::string>();
    } else {
      run.regression = regression_from_json(reg);
    }
    for (const auto& w : j.at("word_frequencies")) {
      run.words.push_back({w.at("word").get<std::string>(), w.at("count").get<std::size_t>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(0, path.string() + ": " + e.what());
  } catch (const std::bad_optional_access&) {
    throw ParseError(0, path.string() + ": bad sentiment_class");
  }
  return run;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  return std::nullopt;
}

std::string_view file_extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::csv: return "csv";
    case OutputFormat::json: return "json";
    case OutputFormat::table: return "txt";
  }
  return "txt";
}

void write_reports(std::ostream& out, std::span<const ScoredReport> reports, OutputFormat format) {
  const std::vector<std::string> header = {"id",    "year", "s_total",         "r_neg",
                                           "a_neg", "a_pol", "sentiment_class", "is_concern"};
  std::vector<std::vector<std::string>> rows;
  json j = json::array();
  for (const auto& r : reports) {
    const auto& a = r.analysis;
    if (format == OutputFormat::json) {
      j.push_back(report_json(r));
      continue;
    }
    const bool table = format == OutputFormat::table;
    auto real = [&](double v) { return table ? fixed(v, 4) : csv::format_real(v); };
    rows.push_back({r.record.id, std::to_string(r.record.year), std::to_string(a.s_total), real(a.r_neg),
                    real(a.a_neg), real(a.a_pol), std::string(to_string(a.sentiment_class)),
                    table ? (a.is_concern ? "yes" : "no") : (a.is_concern ? "1" : "0")});
  }
  emit(out, format, header, rows, j);
}

void write_yearly(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format) {
  const std::vector<std::string> header = {"Year",         "Total Reports", "Negative (%)",
                                           "Positive (%)", "Neutral (%)",   "Mean Polarity Score"};
  std::vector<std::vector<std::string>> rows;
  json j = json::array();
  const bool table = format == OutputFormat::table;
  for (const auto& y : yearly) {
    j.push_back(yearly_json(y));
    const auto whole = rounded_class_percentages(y);
    auto pct = [&](double v, int i) { return table ? std::to_string(whole[i]) : csv::format_real(v); };
    rows.push_back({std::to_string(y.year), std::to_string(y.total_reports), pct(y.pct_negative, 0),
                    pct(y.pct_positive, 1), pct(y.pct_neutral, 2),
                    table ? fixed(y.mean_polarity, 6) : csv::format_real(y.mean_polarity)});
  }
  emit(out, format, header, rows, j);
}

void write_emotion_series(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format) {
  std::vector<std::string> header = {"Year", "Sentences"};
  for (Emotion e : kAllEmotions) header.emplace_back(to_string(e));
  for (Emotion e : kAllEmotions) header.push_back(share_column(e));
  std::vector<std::vector<std::string>> rows;
  json j = json::array();
  const bool table = format == OutputFormat::table;
  for (const auto& y : yearly) {
    std::vector<std::string> row = {std::to_string(y.year), std::to_string(y.sentence_count)};
    json shares = json::object();
    for (Emotion e : kAllEmotions) row.push_back(std::to_string(y.emotion_hits[static_cast<std::size_t>(e)]));
    for (Emotion e : kAllEmotions) {
      row.push_back(table ? fixed(y.emotion_share(e), 4) : csv::format_real(y.emotion_share(e)));
      shares[std::string(to_string(e))] = num(y.emotion_share(e));
    }
    rows.push_back(std::move(row));
    j.push_back({{"year", y.year},
                 {"sentences", y.sentence_count},
                 {"hits", emotions_json(y.emotion_hits)},
                 {"shares", shares}});
  }
  emit(out, format, header, rows, j);
}

void write_concern_series(std::ostream& out, std::span<const YearlySummary> yearly, OutputFormat format) {
  const std::vector<std::string> header = {"Year", "Total Reports", "Negative Reports", "Concern Reports"};
  std::vector<std::vector<std::string>> rows;
  json j = json::array();
  for (const auto& y : yearly) {
    rows.push_back({std::to_string(y.year), std::to_string(y.total_reports),
                    std::to_string(y.negative_reports), std::to_string(y.concern_count)});
    j.push_back({{"year", y.year},
                 {"total_reports", y.total_reports},
                 {"negative_reports", y.negative_reports},
                 {"concern_reports", y.concern_count}});
  }
  emit(out, format, header, rows, j);
}

void write_regression(std::ostream& out, const RegressionFit& fit, OutputFormat format) {
  const bool table = format == OutputFormat::table;
  auto real = [&](double v) { return table ? fixed(v, 6) : csv::format_real(v); };
  std::vector<std::vector<std::string>> rows = {{"slope", real(fit.slope)},
                                                {"intercept", real(fit.intercept)},
                                                {"r_squared", real(fit.r_squared)},
                                                {"points", std::to_string(fit.points.size())},
                                                {"outlier_years", outlier_list(fit.outlier_years)}};
  emit(out, format, {"metric", "value"}, rows, regression_json(fit));
}

void write_regression_points(std::ostream& out, const RegressionFit& fit, OutputFormat format) {
  const std::vector<std::string> header = {"Year",     "Total Reports",         "Concern Reports", "Fitted",
                                           "Residual", "Standardized Residual", "Outlier"};
  const bool table = format == OutputFormat::table;
  auto real = [&](double v) { return table ? fixed(v, 4) : csv::format_real(v); };
  std::vector<std::vector<std::string>> rows;
  json j = json::array();
  for (std::size_t i = 0; i < fit.points.size(); ++i) {
    const auto pj = point_json(fit, i);
    const auto& p = fit.points[i];
    const bool outlier = pj.at("outlier").get<bool>();
    rows.push_back({std::to_string(p.year), real(p.x), real(p.y), real(fit.predict(p.x)), real(fit.residuals[i]),
                    real(fit.standardized_residuals[i]), table ? (outlier ? "yes" : "no") : (outlier ? "1" : "0")});
    j.push_back(pj);
  }
  emit(out, format, header, rows, j);
}

void write_word_frequencies(std::ostream& out, const WordFrequency& words, OutputFormat format) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& w : words) rows.push_back({w.word, std::to_string(w.count)});
  emit(out, format, {"word", "count"}, rows, words_json(words));
}

void write_run_json(std::ostream& out, const AnalysisRun& run) {
  json j;
  j["config"] = config_json(run);
  j["counts"] = counts_json(run.counts);
  j["rejected_rows"] = json::array();
  for (const auto& issue : run.issues) {
    j["rejected_rows"].push_back(
        {{"row", issue.row}, {"kind", std::string(to_string(issue.kind))}, {"value", issue.value}});
  }
  j["reports"] = json::array();
  for (const auto& r : run.reports) j["reports"].push_back(report_json(r));
  j["yearly"] = json::array();
  for (const auto& y : run.yearly) j["yearly"].push_back(yearly_json(y));
  j["regression"] = run.regression ? regression_json(*run.regression) : json{{"note", run.regression_note}};
  j["word_frequencies"] = words_json(run.words);
  out << j.dump(2) << '\n';
}

void export_run(const std::filesystem::path& dir, const AnalysisRun& run, OutputFormat format) {
  std::filesystem::create_directories(dir);
  auto open = [&](std::string_view stem) {
    const auto path = dir / (std::string(stem) + "." + std::string(file_extension(format)));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileNotReadable(path.string());
    return out;
  };
  {
    auto out = open("reports");
    write_reports(out, run.reports, format);
  }
  {
    auto out = open("yearly");
    write_yearly(out, run.yearly, format);
  }
  {
    auto out = open("emotions");
    write_emotion_series(out, run.yearly, format);
  }
  {
    auto out = open("concerns");
    write_concern_series(out, run.yearly, format);
  }
  {
    auto out = open("regression");
    if (run.regression) {
      write_regression(out, *run.regression, format);
    } else if (format == OutputFormat::json) {
      out << json{{"note", run.regression_note}}.dump(2) << '\n';
    } else {
      emit(out, format, {"metric", "value"}, {{"note", run.regression_note}}, json{});
    }
  }
  {
    auto out = open("regression_points");
    write_regression_points(out, run.regression.value_or(RegressionFit{}), format);
  }
  {
    auto out = open("wordfreq");
    write_word_frequencies(out, run.words, format);
  }
  std::ofstream meta(dir / "run.json", std::ios::binary);
  if (!meta) throw FileNotReadable((dir / "run.json").string());
  write_run_json(meta, run);
}

AnalysisRun load_run(const std::filesystem::path& dir) {
  if (std::filesystem::exists(dir / "run.json")) return load_run_json(dir / "run.json");
  if (std::filesystem::exists(dir / "reports.csv")) return load_run_csv(dir);
  throw FileNotReadable((dir / "run.json").string());
}

}  // namespace concern_scan
