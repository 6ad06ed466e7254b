#include "concern_scan/sentiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "concern_scan/errors.hpp"

namespace concern_scan {

std::string_view to_string(SentimentClass c) {
  switch (c) {
    case SentimentClass::positive: return "positive";
    case SentimentClass::neutral: return "neutral";
    case SentimentClass::negative: return "negative";
  }
  return "neutral";
}

std::optional<SentimentClass> parse_sentiment_class(std::string_view name) {
  if (name == "positive") return SentimentClass::positive;
  if (name == "neutral") return SentimentClass::neutral;
  if (name == "negative") return SentimentClass::negative;
  return std::nullopt;
}

void SentimentConfig::validate() const {
  if (!(negation_factor >= -1.0 && negation_factor <= 1.0)) {
    throw std::invalid_argument("negation factor must lie in [-1, 1]");
  }
}

SentenceScore score_sentence(std::span<const Token> tokens, const PolarityLexicon& lex,
                             const SentimentConfig& cfg) {
  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::size_t matched = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto hit = lookup_polarity(lex, tokens[i]);
    if (!hit) continue;
    const std::size_t from = i > cfg.negation_window ? i - cfg.negation_window : 0;
    const bool negated = std::any_of(tokens.begin() + static_cast<std::ptrdiff_t>(from),
                                     tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                     [](const Token& t) { return t.is_negator; });
    polarity_sum += negated ? hit->polarity * cfg.negation_factor : hit->polarity;
    subjectivity_sum += hit->subjectivity;
    ++matched;
  }
  if (matched == 0) return {};
  const auto n = static_cast<double>(matched);
  return SentenceScore{polarity_sum / n, subjectivity_sum / n, matched};
}

double report_mean_polarity(std::span<const SentenceScore> scores) {
  if (scores.empty()) throw EmptyReport();
  double sum = 0.0;
  for (const auto& s : scores) sum += s.polarity;
  return sum / static_cast<double>(scores.size());
}

}  // namespace concern_scan
