#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "concern_scan/text_prep.hpp"

namespace concern_scan {

enum class Emotion : std::uint8_t { anger, fear, anticipation, trust, surprise, sadness, joy, disgust };

inline constexpr std::size_t kEmotionCount = 8;
inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::anger,    Emotion::fear,    Emotion::anticipation, Emotion::trust,
    Emotion::surprise, Emotion::sadness, Emotion::joy,          Emotion::disgust};

std::string_view to_string(Emotion e);
std::optional<Emotion> parse_emotion(std::string_view name);

/// Per-emotion values indexed by `static_cast<size_t>(Emotion)`.
using EmotionVector = std::array<double, kEmotionCount>;

struct PolarityEntry {
  double polarity = 0.0;      ///< [-1, 1]
  double subjectivity = 0.0;  ///< [0, 1]

  bool operator==(const PolarityEntry&) const = default;
};

/// word -> (polarity, subjectivity). Immutable once built.
class PolarityLexicon {
 public:
  PolarityLexicon() = default;
  /// Entries are validated; throws RangeError (line 0) on out-of-range values.
  explicit PolarityLexicon(std::vector<std::pair<std::string, PolarityEntry>> entries);

  const PolarityEntry* find(const std::string& word) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  /// Number of keys that appeared more than once in the source.
  std::size_t overwrites() const noexcept { return overwrites_; }
  /// Entries sorted by word.
  std::vector<std::pair<std::string, PolarityEntry>> sorted_entries() const;

  bool operator==(const PolarityLexicon& other) const { return entries_ == other.entries_; }

 private:
  friend PolarityLexicon parse_polarity_lexicon(std::istream&);
  std::unordered_map<std::string, PolarityEntry> entries_;
  std::size_t overwrites_ = 0;
};

/// word -> emotion intensities in [0, 1]. A zero intensity means no association.
class EmotionLexicon {
 public:
  EmotionLexicon() = default;
  explicit EmotionLexicon(std::vector<std::pair<std::string, EmotionVector>> entries);

  const EmotionVector* find(const std::string& word) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::vector<std::pair<std::string, EmotionVector>> sorted_entries() const;

  bool operator==(const EmotionLexicon& other) const { return entries_ == other.entries_; }

 private:
  friend EmotionLexicon parse_emotion_lexicon(std::istream&);
  std::unordered_map<std::string, EmotionVector> entries_;
};

/// `word,polarity,subjectivity` per line, `#` comments, no header.
PolarityLexicon load_polarity_lexicon(const std::string& path);
PolarityLexicon parse_polarity_lexicon(std::istream& in);
void write_polarity_lexicon(std::ostream& out, const PolarityLexicon& lex);

/// EmoLex flat format `word<TAB>emotion<TAB>value`. Zero values and the
/// `positive`/`negative` rows are skipped; 1 loads as intensity 1.0.
EmotionLexicon load_emotion_lexicon(const std::string& path);
EmotionLexicon parse_emotion_lexicon(std::istream& in);
void write_emotion_lexicon(std::ostream& out, const EmotionLexicon& lex);

/// Surface first, then lemma. Stopwords and negators never carry polarity.
std::optional<PolarityEntry> lookup_polarity(const PolarityLexicon& lex, const Token& token);
/// Surface first, then lemma. Stopwords return nothing.
std::optional<EmotionVector> lookup_emotions(const EmotionLexicon& lex, const Token& token);

}  // namespace concern_scan
