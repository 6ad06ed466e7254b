#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "concern_scan/lexicon.hpp"
#include "concern_scan/text_prep.hpp"

namespace concern_scan {

enum class SentimentClass { positive, neutral, negative };

std::string_view to_string(SentimentClass c);
std::optional<SentimentClass> parse_sentiment_class(std::string_view name);

struct SentenceScore {
  double polarity = 0.0;
  double subjectivity = 0.0;
  std::size_t matched_count = 0;

  bool operator==(const SentenceScore&) const = default;
};

struct SentimentConfig {
  /// Multiplier applied to a polarity hit preceded by a negator. Must lie in [-1, 1].
  double negation_factor = -0.5;
  /// How many preceding tokens are searched for a negator.
  std::size_t negation_window = 3;

  void validate() const;
};

inline constexpr double kPositiveCut = 0.05;
inline constexpr double kNegativeCut = -0.05;

/// Mean of per-hit polarity contributions (negated hits scaled by the
/// negation factor, once regardless of how many negators are in the window)
/// and mean of raw subjectivities. No hits scores (0, 0, 0).
SentenceScore score_sentence(std::span<const Token> tokens, const PolarityLexicon& lex,
                             const SentimentConfig& cfg = {});

/// p >= 0.05 positive, p <= -0.05 negative, otherwise neutral.
constexpr SentimentClass classify_polarity(double p) {
  if (p >= kPositiveCut) return SentimentClass::positive;
  if (p <= kNegativeCut) return SentimentClass::negative;
  return SentimentClass::neutral;
}

/// Mean sentence polarity of a report. Throws EmptyReport for no sentences.
double report_mean_polarity(std::span<const SentenceScore> scores);

}  // namespace concern_scan
