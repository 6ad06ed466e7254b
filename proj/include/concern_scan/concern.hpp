#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "concern_scan/emotion.hpp"
#include "concern_scan/sentiment.hpp"

namespace concern_scan {

inline constexpr std::array<Emotion, 4> kNegativeEmotions = {Emotion::fear, Emotion::anger,
                                                             Emotion::sadness, Emotion::disgust};

/// How the mean-polarity clause of the concern rule is read.
enum class PolarityRule {
  negative_bias,  ///< -A_pol > delta3: mean polarity more negative than -delta3
  literal,        ///< A_pol > delta3, the equation as printed
};

struct ConcernThresholds {
  double delta1 = 0.35;  ///< negativity ratio
  double delta2 = 0.4;   ///< mean negative score
  double delta3 = 0.4;   ///< mean polarity
  double neg_emotion_cut = 0.05;
  double neg_polarity_cut = -0.05;
  PolarityRule polarity_rule = PolarityRule::negative_bias;

  /// Throws std::invalid_argument unless every delta lies in [0, 0.5].
  void validate() const;
};

struct ReportAnalysis {
  std::size_t s_total = 0;
  std::vector<bool> neg_flags;     ///< one per sentence
  std::vector<double> neg_scores;  ///< one per negative sentence, in sentence order
  std::size_t n = 0;               ///< negative sentence count
  double r_neg = 0.0;
  double a_neg = 0.0;
  double a_pol = 0.0;
  SentimentClass sentiment_class = SentimentClass::neutral;
  bool is_concern = false;

  bool operator==(const ReportAnalysis&) const = default;
};

/// Strongest of fear/anger/sadness/disgust.
double max_negative_emotion(const EmotionProfile& profile);

/// Negative when a negative emotion reaches the emotion cut or the polarity
/// is at or below the polarity cut (both inclusive).
bool is_negative_sentence(const SentenceScore& score, const EmotionProfile& profile,
                          const ConcernThresholds& t = {});

/// max(strongest negative emotion, max(0, -polarity)). Throws
/// NotNegativeSentence when the sentence is not negative under `t`.
double sentence_negative_score(const SentenceScore& score, const EmotionProfile& profile,
                               const ConcernThresholds& t = {});

/// R_neg > delta1 and (A_neg > delta2 or polarity clause), all strict.
bool concern_rule(double r_neg, double a_neg, double a_pol, const ConcernThresholds& t);

/// Throws EmptyReport for no sentences and std::invalid_argument when the
/// two spans differ in length.
ReportAnalysis analyze_report(std::span<const SentenceScore> scores,
                              std::span<const EmotionProfile> profiles,
                              const ConcernThresholds& t = {});

/// A Concern Report is a negative-class report that also passes the rule.
inline bool is_concern_report(const ReportAnalysis& a) {
  return a.is_concern && a.sentiment_class == SentimentClass::negative;
}

/// Result for a report whose text had no scorable sentence: neutral, never a concern.
ReportAnalysis empty_report_analysis();

}  // namespace concern_scan
