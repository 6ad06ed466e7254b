#include "concern_scan/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

#include "concern_scan/csv.hpp"
#include "concern_scan/errors.hpp"

namespace concern_scan {

namespace {

constexpr std::array<std::string_view, kEmotionCount> kEmotionNames = {
    "anger", "fear", "anticipation", "trust", "surprise", "sadness", "joy", "disgust"};

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Strips comments and whitespace; empty result means skip the line.
std::string_view content_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return csv::trim(line);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = line.find(sep, pos);
    parts.push_back(csv::trim(line.substr(pos, next == std::string_view::npos ? next : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

bool valid_polarity(const PolarityEntry& e) {
  return e.polarity >= -1.0 && e.polarity <= 1.0 && e.subjectivity >= 0.0 && e.subjectivity <= 1.0;
}

template <class Map>
auto sorted(const Map& map) {
  std::vector<std::pair<std::string, typename Map::mapped_type>> out(map.begin(), map.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::string_view to_string(Emotion e) { return kEmotionNames[static_cast<std::size_t>(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kEmotionNames[i] == name) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

PolarityLexicon::PolarityLexicon(std::vector<std::pair<std::string, PolarityEntry>> entries) {
  for (auto& [word, entry] : entries) {
    if (!valid_polarity(entry)) throw RangeError(0, word);
    if (!entries_.insert_or_assign(lower_ascii(word), entry).second) ++overwrites_;
  }
}

const PolarityEntry* PolarityLexicon::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, PolarityEntry>> PolarityLexicon::sorted_entries() const {
  return sorted(entries_);
}

EmotionLexicon::EmotionLexicon(std::vector<std::pair<std::string, EmotionVector>> entries) {
  for (auto& [word, values] : entries) {
    for (double v : values) {
      if (!(v >= 0.0 && v <= 1.0)) throw RangeError(0, word);
    }
    if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) continue;
    entries_.insert_or_assign(lower_ascii(word), values);
  }
}

const EmotionVector* EmotionLexicon::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, EmotionVector>> EmotionLexicon::sorted_entries() const {
  return sorted(entries_);
}

PolarityLexicon load_polarity_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotReadable(path);
  return parse_polarity_lexicon(in);
}

PolarityLexicon parse_polarity_lexicon(std::istream& in) {
  PolarityLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = content_of(line);
    if (body.empty()) continue;
    auto fields = split(body, ',');
    if (fields.size() != 3 || fields[0].empty()) {
      throw ParseError(line_no, "expected word,polarity,subjectivity");
    }
    PolarityEntry entry;
    if (!csv::parse_real(fields[1], entry.polarity)) throw ParseError(line_no, "bad polarity");
    if (!csv::parse_real(fields[2], entry.subjectivity)) throw ParseError(line_no, "bad subjectivity");
    if (!(entry.polarity >= -1.0 && entry.polarity <= 1.0)) throw RangeError(line_no, "polarity");
    if (!(entry.subjectivity >= 0.0 && entry.subjectivity <= 1.0)) {
      throw RangeError(line_no, "subjectivity");
    }
    if (!lex.entries_.insert_or_assign(lower_ascii(fields[0]), entry).second) ++lex.overwrites_;
  }
  return lex;
}

void write_polarity_lexicon(std::ostream& out, const PolarityLexicon& lex) {
  for (const auto& [word, e] : lex.sorted_entries()) {
    out << word << ',' << csv::format_real(e.polarity) << ',' << csv::format_real(e.subjectivity)
        << '\n';
  }
}

EmotionLexicon load_emotion_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotReadable(path);
  return parse_emotion_lexicon(in);
}

EmotionLexicon parse_emotion_lexicon(std::istream& in) {
  EmotionLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = content_of(line);
    if (body.empty()) continue;
    auto fields = split(body, '\t');
    if (fields.size() != 3 || fields[0].empty()) {
      throw ParseError(line_no, "expected word<TAB>emotion<TAB>value");
    }
    const std::string name = lower_ascii(fields[1]);
    double value = 0.0;
    if (!csv::parse_real(fields[2], value) || !(value >= 0.0 && value <= 1.0)) {
      throw ParseError(line_no, "bad association value");
    }
    if (name == "positive" || name == "negative") continue;
    auto emotion = parse_emotion(name);
    if (!emotion) throw UnknownEmotion(line_no, std::string(fields[1]));
    if (value == 0.0) continue;
    auto [it, inserted] = lex.entries_.try_emplace(lower_ascii(fields[0]), EmotionVector{});
    it->second[static_cast<std::size_t>(*emotion)] = value;
  }
  return lex;
}

void write_emotion_lexicon(std::ostream& out, const EmotionLexicon& lex) {
  for (const auto& [word, values] : lex.sorted_entries()) {
    for (Emotion e : kAllEmotions) {
      const double v = values[static_cast<std::size_t>(e)];
      if (v > 0.0) out << word << '\t' << to_string(e) << '\t' << csv::format_real(v) << '\n';
    }
  }
}

std::optional<PolarityEntry> lookup_polarity(const PolarityLexicon& lex, const Token& token) {
  if (token.is_stopword || token.is_negator) return std::nullopt;
  if (const auto* hit = lex.find(token.surface)) return *hit;
  if (token.lemma != token.surface) {
    if (const auto* hit = lex.find(token.lemma)) return *hit;
  }
  return std::nullopt;
}

std::optional<EmotionVector> lookup_emotions(const EmotionLexicon& lex, const Token& token) {
  if (token.is_stopword) return std::nullopt;
  if (const auto* hit = lex.find(token.surface)) return *hit;
  if (token.lemma != token.surface) {
    if (const auto* hit = lex.find(token.lemma)) return *hit;
  }
  return std::nullopt;
}

}  // namespace concern_scan
