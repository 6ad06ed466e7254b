#include "concern_scan/concern.hpp"

#include <algorithm>
#include <stdexcept>

#include "concern_scan/errors.hpp"

namespace concern_scan {

void ConcernThresholds::validate() const {
  for (double d : {delta1, delta2, delta3}) {
    if (!(d >= 0.0 && d <= 0.5)) throw std::invalid_argument("concern thresholds must lie in [0, 0.5]");
  }
}

double max_negative_emotion(const EmotionProfile& profile) {
  double best = 0.0;
  for (Emotion e : kNegativeEmotions) best = std::max(best, profile[e]);
  return best;
}

bool is_negative_sentence(const SentenceScore& score, const EmotionProfile& profile,
                          const ConcernThresholds& t) {
  return max_negative_emotion(profile) >= t.neg_emotion_cut || score.polarity <= t.neg_polarity_cut;
}

double sentence_negative_score(const SentenceScore& score, const EmotionProfile& profile,
                               const ConcernThresholds& t) {
  if (!is_negative_sentence(score, profile, t)) throw NotNegativeSentence();
  return std::max(max_negative_emotion(profile), std::max(0.0, -score.polarity));
}

bool concern_rule(double r_neg, double a_neg, double a_pol, const ConcernThresholds& t) {
  const bool polarity_clause =
      t.polarity_rule == PolarityRule::literal ? a_pol > t.delta3 : -a_pol > t.delta3;
  return r_neg > t.delta1 && (a_neg > t.delta2 || polarity_clause);
}

ReportAnalysis analyze_report(std::span<const SentenceScore> scores,
                              std::span<const EmotionProfile> profiles,
                              const ConcernThresholds& t) {
  if (scores.size() != profiles.size()) {
    throw std::invalid_argument("scores and profiles differ in length");
  }
  if (scores.empty()) throw EmptyReport();

  ReportAnalysis a;
  a.s_total = scores.size();
  a.neg_flags.reserve(a.s_total);
  double neg_sum = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool negative = is_negative_sentence(scores[i], profiles[i], t);
    a.neg_flags.push_back(negative);
    if (negative) {
      a.neg_scores.push_back(sentence_negative_score(scores[i], profiles[i], t));
      neg_sum += a.neg_scores.back();
    }
  }
  a.n = a.neg_scores.size();
  a.r_neg = static_cast<double>(a.n) / static_cast<double>(a.s_total);
  a.a_neg = a.n == 0 ? 0.0 : neg_sum / static_cast<double>(a.n);
  a.a_pol = report_mean_polarity(scores);
  a.sentiment_class = classify_polarity(a.a_pol);
  a.is_concern = concern_rule(a.r_neg, a.a_neg, a.a_pol, t);
  return a;
}

ReportAnalysis empty_report_analysis() { return ReportAnalysis{}; }

}  // namespace concern_scan
