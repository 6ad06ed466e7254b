#include "support/oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

using namespace concern_scan;

ConcernMetrics concern_metrics(std::span<const SentenceScore> scores, std::span<const EmotionProfile> profiles,
                               double delta1, double delta2, double delta3) {
  ConcernMetrics m;
  const std::size_t total = scores.size();
  double neg_sum = 0.0;
  double pol_sum = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const auto& v = profiles[i].intensity;
    const double fear = v[static_cast<std::size_t>(Emotion::fear)];
    const double anger = v[static_cast<std::size_t>(Emotion::anger)];
    const double sadness = v[static_cast<std::size_t>(Emotion::sadness)];
    const double disgust = v[static_cast<std::size_t>(Emotion::disgust)];
    const double p = scores[i].polarity;
    const bool negative = fear >= 0.05 || anger >= 0.05 || sadness >= 0.05 || disgust >= 0.05 || p <= -0.05;
    if (negative) {
      double s = fear;
      if (anger > s) s = anger;
      if (sadness > s) s = sadness;
      if (disgust > s) s = disgust;
      if (-p > s) s = -p;
      neg_sum += s;
      ++m.n;
    }
    pol_sum += p;
  }
  m.r_neg = static_cast<double>(m.n) / static_cast<double>(total);
  m.a_neg = m.n ? neg_sum / static_cast<double>(m.n) : 0.0;
  m.a_pol = pol_sum / static_cast<double>(total);
  m.is_concern = m.r_neg > delta1 && (m.a_neg > delta2 || -m.a_pol > delta3);
  return m;
}

std::map<int, YearCount> yearly_recount(std::span<const ScoredReport> reports) {
  std::set<int> years;
  for (const auto& r : reports) years.insert(r.record.year);
  std::map<int, YearCount> out;
  for (int y : years) {
    YearCount c;
    for (const auto& r : reports) {
      if (r.record.year != y) continue;
      ++c.total;
      const double p = r.analysis.a_pol;
      if (p >= 0.05) {
        ++c.positive;
      } else if (p <= -0.05) {
        ++c.negative;
      } else {
        ++c.neutral;
      }
      if (r.analysis.is_concern && p <= -0.05) ++c.concern;
      c.sentences += r.analysis.s_total;
      for (std::size_t e = 0; e < kEmotionCount; ++e) c.hits[e] += r.emotion_hits[e];
      c.polarity_sum += p;
    }
    out[y] = c;
  }
  return out;
}

std::map<std::string, std::size_t> word_recount(std::span<const ScoredReport> reports) {
  std::map<std::string, std::size_t> counts;
  for (const auto& r : reports) {
    if (!r.analysis.is_concern || r.analysis.a_pol > -0.05) continue;
    for (const auto& s : r.sentences) {
      for (const auto& t : s.tokens) {
        if (!t.is_stopword) counts[t.surface] += 1;
      }
    }
  }
  return counts;
}

Line normal_equation_fit(std::span<const RegressionPoint> points) {
  long double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    n += 1;
    sx += p.x;
    sy += p.y;
    sxx += static_cast<long double>(p.x) * p.x;
    sxy += static_cast<long double>(p.x) * p.y;
  }
  const long double det = n * sxx - sx * sx;
  Line l;
  l.intercept = static_cast<double>((sy * sxx - sx * sxy) / det);
  l.slope = static_cast<double>((n * sxy - sx * sy) / det);
  return l;
}

}  // namespace oracle
