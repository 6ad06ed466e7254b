#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "concern_scan/concern.hpp"
#include "concern_scan/corpus.hpp"
#include "concern_scan/lexicon.hpp"
#include "concern_scan/sentiment.hpp"
#include "concern_scan/text_prep.hpp"
#include "concern_scan/trends.hpp"

namespace concern_scan {

struct LexiconPaths {
  std::string polarity;
  std::string emotion;
};

struct AnalysisConfig {
  IngestConfig ingest;
  PrepConfig prep = PrepConfig::defaults();
  SentimentConfig sentiment;
  ConcernThresholds thresholds;
  std::size_t top_words = 100;

  void validate() const;
};

struct RunCounts {
  std::size_t rows_read = 0;
  std::size_t duplicates = 0;
  std::size_t rejected = 0;
  std::size_t analyzed = 0;
  std::size_t sentences = 0;
  std::size_t empty_reports = 0;  ///< reports with no scorable sentence
  std::size_t concern_reports = 0;

  bool operator==(const RunCounts&) const = default;
};

struct AnalysisRun {
  std::string corpus_path;
  LexiconPaths lexicons;
  AnalysisConfig config;
  std::vector<ScoredReport> reports;  ///< id ascending
  std::vector<RowIssue> issues;
  std::vector<YearlySummary> yearly;  ///< year ascending
  std::optional<RegressionFit> regression;
  std::string regression_note;  ///< why `regression` is absent
  WordFrequency words;
  RunCounts counts;
};

/// Scores reports against shared immutable lexicons. The lexicons must
/// outlive the engine. All member functions are const and thread-safe.
class Engine {
 public:
  Engine(const PolarityLexicon& polarity, const EmotionLexicon& emotions, AnalysisConfig config);

  const AnalysisConfig& config() const noexcept { return config_; }

  ScoredReport analyze(const ReportRecord& record) const;

  /// Results come back in input order whatever the worker count.
  std::vector<ScoredReport> analyze_all(std::span<const ReportRecord> records, std::size_t jobs) const;

  /// Analyzes the loaded corpus and builds every aggregate. Throws EmptyCorpus.
  AnalysisRun run(LoadResult loaded, std::size_t jobs) const;

 private:
  const PolarityLexicon& polarity_;
  const EmotionLexicon& emotions_;
  AnalysisConfig config_;
};

/// Load, analyze, aggregate. Module errors are rethrown as StageError.
AnalysisRun run_analysis(const std::string& corpus_path, const LexiconPaths& lexicons,
                         const AnalysisConfig& config, std::size_t jobs = 1);

}  // namespace concern_scan
