#include "concern_scan/emotion.hpp"

namespace concern_scan {

EmotionProfile sentence_emotions(std::span<const Token> tokens, const EmotionLexicon& lex) {
  EmotionProfile profile;
  std::size_t content = 0;
  for (const auto& t : tokens) {
    if (t.is_stopword) continue;
    ++content;
    if (auto hit = lookup_emotions(lex, t)) {
      for (std::size_t e = 0; e < kEmotionCount; ++e) profile.intensity[e] += (*hit)[e];
    }
  }
  if (content == 0) return profile;
  for (double& v : profile.intensity) v /= static_cast<double>(content);
  return profile;
}

EmotionSet emotion_hits(const EmotionProfile& profile) {
  EmotionSet set;
  for (std::size_t e = 0; e < kEmotionCount; ++e) set[e] = profile.intensity[e] > 0.0;
  return set;
}

void accumulate(EmotionCounts& counts, const EmotionSet& hits) {
  for (std::size_t e = 0; e < kEmotionCount; ++e) counts[e] += hits[e] ? 1 : 0;
}

}  // namespace concern_scan
