#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "concern_scan/concern.hpp"
#include "concern_scan/corpus.hpp"
#include "concern_scan/emotion.hpp"
#include "concern_scan/text_prep.hpp"

namespace concern_scan {

/// One analyzed report with the sentence-level data trends need.
struct ScoredReport {
  ReportRecord record;
  ReportAnalysis analysis;
  EmotionCounts emotion_hits{};  ///< sentences showing each emotion
  std::vector<Sentence> sentences;
};

struct YearlySummary {
  int year = 0;
  std::size_t total_reports = 0;
  std::size_t negative_reports = 0;
  std::size_t positive_reports = 0;
  std::size_t neutral_reports = 0;
  std::size_t concern_count = 0;  ///< negative-class reports passing the rule
  std::size_t sentence_count = 0;
  double pct_negative = 0.0;
  double pct_positive = 0.0;
  double pct_neutral = 0.0;
  double mean_polarity = 0.0;  ///< mean of report A_pol
  EmotionCounts emotion_hits{};

  /// Fraction of the year's sentences showing `e`; 0 when there are none.
  double emotion_share(Emotion e) const;

  bool operator==(const YearlySummary&) const = default;
};

/// Whole-number negative/positive/neutral percentages that sum to 100
/// (largest remainder; ties go to the earlier class). All zero when the
/// year has no reports.
std::array<int, 3> rounded_class_percentages(const YearlySummary& y);

/// One row per distinct year, ascending. Independent of input order.
std::vector<YearlySummary> aggregate_by_year(std::span<const ScoredReport> reports);

struct RegressionPoint {
  int year = 0;
  double x = 0.0;
  double y = 0.0;
};

struct RegressionFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<RegressionPoint> points;
  std::vector<double> residuals;
  std::vector<double> standardized_residuals;
  std::vector<int> outlier_years;

  double predict(double x) const { return intercept + slope * x; }
};

inline constexpr double kOutlierCut = 2.0;

/// Ordinary least squares y = intercept + slope * x. Standardized residuals
/// divide by the sample standard deviation of the residuals; points beyond
/// `outlier_cut` in absolute value are outliers. Throws TooFewPoints (< 3)
/// or DegenerateX.
RegressionFit fit_linear(std::span<const RegressionPoint> points, double outlier_cut = kOutlierCut);

/// x = total reports, y = concern reports, one point per year.
std::vector<RegressionPoint> concern_volume_points(std::span<const YearlySummary> yearly);

struct WordCount {
  std::string word;
  std::size_t count = 0;

  bool operator==(const WordCount&) const = default;
};

/// Descending by count, ties by word ascending.
using WordFrequency = std::vector<WordCount>;

/// Counts non-stopword surfaces over every sentence of the given concern
/// reports and keeps the first `top_n` (0 keeps all). Throws
/// std::invalid_argument if a report is not flagged as a concern.
WordFrequency word_frequencies(std::span<const ScoredReport> concern_reports, std::size_t top_n);

}  // namespace concern_scan
