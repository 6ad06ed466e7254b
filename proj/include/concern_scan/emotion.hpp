#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <span>

#include "concern_scan/lexicon.hpp"
#include "concern_scan/text_prep.hpp"

namespace concern_scan {

struct EmotionProfile {
  EmotionVector intensity{};

  double operator[](Emotion e) const { return intensity[static_cast<std::size_t>(e)]; }
  double& operator[](Emotion e) { return intensity[static_cast<std::size_t>(e)]; }
  bool operator==(const EmotionProfile&) const = default;
};

/// Bit i set means `static_cast<Emotion>(i)` is present.
using EmotionSet = std::bitset<kEmotionCount>;
using EmotionCounts = std::array<std::size_t, kEmotionCount>;

/// Intensity of each emotion is the lexicon mass of that emotion over the
/// sentence's non-stopword tokens divided by the count of those tokens.
EmotionProfile sentence_emotions(std::span<const Token> tokens, const EmotionLexicon& lex);

EmotionSet emotion_hits(const EmotionProfile& profile);

/// Adds one to each emotion present in `hits`.
void accumulate(EmotionCounts& counts, const EmotionSet& hits);

}  // namespace concern_scan
