#include "concern_scan/trends.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "concern_scan/errors.hpp"

namespace concern_scan {

double YearlySummary::emotion_share(Emotion e) const {
  if (sentence_count == 0) return 0.0;
  return static_cast<double>(emotion_hits[static_cast<std::size_t>(e)]) /
         static_cast<double>(sentence_count);
}

std::array<int, 3> rounded_class_percentages(const YearlySummary& y) {
  std::array<int, 3> pct{};
  const std::size_t total = y.total_reports;
  if (total == 0) return pct;
  const std::array<std::size_t, 3> counts = {y.negative_reports, y.positive_reports, y.neutral_reports};
  std::array<std::size_t, 3> remainder{};
  int assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    pct[i] = static_cast<int>(100 * counts[i] / total);
    remainder[i] = 100 * counts[i] % total;
    assigned += pct[i];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < 100 && k < 3; ++k, ++assigned) ++pct[order[k]];
  return pct;
}

std::vector<YearlySummary> aggregate_by_year(std::span<const ScoredReport> reports) {
  std::map<int, YearlySummary> by_year;
  std::map<int, std::vector<double>> polarities;
  for (const auto& r : reports) {
    auto& s = by_year[r.record.year];
    s.year = r.record.year;
    ++s.total_reports;
    switch (r.analysis.sentiment_class) {
      case SentimentClass::negative: ++s.negative_reports; break;
      case SentimentClass::positive: ++s.positive_reports; break;
      case SentimentClass::neutral: ++s.neutral_reports; break;
    }
    if (is_concern_report(r.analysis)) ++s.concern_count;
    s.sentence_count += r.analysis.s_total;
    for (std::size_t e = 0; e < kEmotionCount; ++e) s.emotion_hits[e] += r.emotion_hits[e];
    polarities[r.record.year].push_back(r.analysis.a_pol);
  }

  std::vector<YearlySummary> out;
  out.reserve(by_year.size());
  for (auto& [year, s] : by_year) {
    const auto total = static_cast<double>(s.total_reports);
    s.pct_negative = 100.0 * static_cast<double>(s.negative_reports) / total;
    s.pct_positive = 100.0 * static_cast<double>(s.positive_reports) / total;
    s.pct_neutral = 100.0 * static_cast<double>(s.neutral_reports) / total;
    // Summation order fixed by value so the mean does not depend on input order.
    auto& pols = polarities[year];
    std::sort(pols.begin(), pols.end());
    double sum = 0.0;
    for (double p : pols) sum += p;
    s.mean_polarity = sum / total;
    out.push_back(s);
  }
  return out;
}

RegressionFit fit_linear(std::span<const RegressionPoint> points, double outlier_cut) {
  const std::size_t n = points.size();
  if (n < 3) throw TooFewPoints(n);
  if (std::all_of(points.begin(), points.end(), [&](const auto& p) { return p.x == points[0].x; })) {
    throw DegenerateX();
  }

  double x_mean = 0.0, y_mean = 0.0;
  for (const auto& p : points) {
    x_mean += p.x;
    y_mean += p.y;
  }
  x_mean /= static_cast<double>(n);
  y_mean /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - x_mean;
    const double dy = p.y - y_mean;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  RegressionFit fit;
  fit.points.assign(points.begin(), points.end());
  fit.slope = sxy / sxx;
  fit.intercept = y_mean - fit.slope * x_mean;

  double sse = 0.0, r_mean = 0.0, y_scale = 1.0;
  fit.residuals.reserve(n);
  for (const auto& p : points) {
    const double r = p.y - fit.predict(p.x);
    fit.residuals.push_back(r);
    sse += r * r;
    r_mean += r;
    y_scale = std::max(y_scale, std::abs(p.y));
  }
  r_mean /= static_cast<double>(n);
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - sse / syy, 0.0, 1.0);

  double var = 0.0;
  for (double r : fit.residuals) var += (r - r_mean) * (r - r_mean);
  const double sd = std::sqrt(var / static_cast<double>(n - 1));
  // Rounding noise of an exact fit is not a residual spread.
  const bool exact = sd <= 1e-12 * y_scale;

  fit.standardized_residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = exact ? 0.0 : fit.residuals[i] / sd;
    fit.standardized_residuals.push_back(z);
    if (std::abs(z) > outlier_cut) fit.outlier_years.push_back(points[i].year);
  }
  return fit;
}

std::vector<RegressionPoint> concern_volume_points(std::span<const YearlySummary> yearly) {
  std::vector<RegressionPoint> points;
  points.reserve(yearly.size());
  for (const auto& y : yearly) {
    points.push_back({y.year, static_cast<double>(y.total_reports), static_cast<double>(y.concern_count)});
  }
  return points;
}

WordFrequency word_frequencies(std::span<const ScoredReport> concern_reports, std::size_t top_n) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : concern_reports) {
    if (!is_concern_report(r.analysis)) throw std::invalid_argument("report " + r.record.id + " is not a concern report");
    for (const auto& s : r.sentences) {
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) ++counts[t.surface];
      }
    }
  }
  WordFrequency out;
  out.reserve(counts.size());
  for (auto& [word, count] : counts) out.push_back({word, count});
  // std::map iteration is already word-ascending; stable sort keeps that for ties.
  std::stable_sort(out.begin(), out.end(),
                   [](const WordCount& a, const WordCount& b) { return a.count > b.count; });
  if (top_n != 0 && out.size() > top_n) out.resize(top_n);
  return out;
}

}  // namespace concern_scan
