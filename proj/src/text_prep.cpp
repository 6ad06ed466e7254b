#include "concern_scan/text_prep.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <string_view>
#include <unordered_map>

#include "concern_scan/csv.hpp"
#include "concern_scan/errors.hpp"

namespace concern_scan {

namespace {

// Classic 127-word English stopword list.
constexpr std::array<std::string_view, 127> kStopwords = {
    "i",          "me",      "my",      "myself",   "we",      "our",     "ours",    "ourselves",
    "you",        "your",    "yours",   "yourself", "yourselves",         "he",      "him",
    "his",        "himself", "she",     "her",      "hers",    "herself", "it",      "its",
    "itself",     "they",    "them",    "their",    "theirs",  "themselves",         "what",
    "which",      "who",     "whom",    "this",     "that",    "these",   "those",   "am",
    "is",         "are",     "was",     "were",     "be",      "been",    "being",   "have",
    "has",        "had",     "having",  "do",       "does",    "did",     "doing",   "a",
    "an",         "the",     "and",     "but",      "if",      "or",      "because", "as",
    "until",      "while",   "of",      "at",       "by",      "for",     "with",    "about",
    "against",    "between", "into",    "through",  "during",  "before",  "after",   "above",
    "below",      "to",      "from",    "up",       "down",    "in",      "out",     "on",
    "off",        "over",    "under",   "again",    "further", "then",    "once",    "here",
    "there",      "when",    "where",   "why",      "how",     "all",     "any",     "both",
    "each",       "few",     "more",    "most",     "other",   "some",    "such",    "no",
    "nor",        "not",     "only",    "own",      "same",    "so",      "than",    "too",
    "very",       "s",       "t",       "can",      "will",    "just",    "don",     "should",
    "now"};

constexpr std::array<std::string_view, 7> kNegators = {"no",     "not",     "never", "none",
                                                       "cannot", "n't",     "without"};

constexpr std::array<std::string_view, 14> kAbbreviations = {
    "dr", "mr", "mrs", "ms", "prof", "vs", "e.g", "i.e", "approx", "jr", "sr", "st", "inc", "fig"};

template <std::size_t N>
WordSet make_set(const std::array<std::string_view, N>& words) {
  WordSet set;
  for (auto w : words) set.emplace(w);
  return set;
}

// Irregular forms and words the suffix rules would mangle. Every value is a
// fixpoint of the rules below.
const std::unordered_map<std::string_view, std::string_view>& exceptions() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"worse", "bad"},       {"worst", "bad"},        {"better", "good"},
      {"best", "good"},       {"felt", "feel"},        {"feet", "foot"},
      {"teeth", "tooth"},     {"children", "child"},   {"men", "man"},
      {"women", "woman"},     {"was", "be"},           {"were", "be"},
      {"is", "be"},           {"are", "be"},           {"been", "be"},
      {"am", "be"},           {"went", "go"},          {"gone", "go"},
      {"had", "have"},        {"has", "have"},         {"did", "do"},
      {"does", "do"},         {"done", "do"},          {"made", "make"},
      {"said", "say"},        {"took", "take"},        {"taken", "take"},
      {"got", "get"},         {"gave", "give"},        {"given", "give"},
      {"began", "begin"},     {"begun", "begin"},      {"bled", "bleed"},
      {"lost", "lose"},       {"left", "leave"},       {"thought", "think"},
      {"told", "tell"},       {"came", "come"},        {"knew", "know"},
      {"known", "know"},      {"ran", "run"},          {"saw", "see"},
      {"seen", "see"},        {"ate", "eat"},          {"slept", "sleep"},
      {"kept", "keep"},       {"woke", "wake"},        {"brought", "bring"},
      {"bought", "buy"},      {"caught", "catch"},     {"fell", "fall"},
      {"fallen", "fall"},     {"became", "become"},    {"wore", "wear"},
      {"worn", "wear"},       {"tore", "tear"},        {"torn", "tear"},
      {"sat", "sit"},         {"stood", "stand"},      {"spent", "spend"},
      {"used", "use"},        {"died", "die"},         {"lied", "lie"},
      {"tied", "tie"},        {"dying", "die"},        {"lying", "lie"},
      {"always", "always"},   {"news", "news"},        {"series", "series"},
      {"species", "species"}, {"during", "during"},    {"nothing", "nothing"},
      {"something", "something"},                      {"anything", "anything"},
      {"everything", "everything"},                    {"morning", "morning"},
      {"evening", "evening"}, {"ceiling", "ceiling"},  {"string", "string"},
      {"spring", "spring"},   {"sibling", "sibling"},  {"hundred", "hundred"},
      {"sacred", "sacred"},   {"naked", "naked"},      {"wicked", "wicked"},
  };
  return table;
}

bool is_consonant(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return false;
    case 'y': return i == 0 || !is_consonant(w, i - 1);
    default: return true;
  }
}

bool has_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

// Number of vowel-consonant sequences.
int measure(std::string_view w) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool vowel = !is_consonant(w, i);
    if (!vowel && prev_vowel) ++m;
    prev_vowel = vowel;
  }
  return m;
}

bool ends_cvc(std::string_view w) {
  const auto n = w.size();
  if (n < 3) return false;
  const char last = w[n - 1];
  return is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1) &&
         last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool needs_silent_e(std::string_view stem) {
  const auto n = stem.size();
  if (ends_with(stem, "v") || ends_with(stem, "iz") || ends_with(stem, "c") ||
      ends_with(stem, "u")) {
    return true;
  }
  if (n >= 3 && ends_with(stem, "us") && !is_consonant(stem, n - 3)) return true;
  if (n >= 2 && stem[n - 1] == 'l' && std::string_view("bpdtgkz").find(stem[n - 2]) != std::string_view::npos) {
    return true;
  }
  if (n >= 3 && ends_with(stem, "at") && is_consonant(stem, n - 3) && measure(stem) >= 2) {
    return true;
  }
  return measure(stem) == 1 && ends_cvc(stem);
}

std::string reduce_once(std::string_view w) {
  if (auto it = exceptions().find(w); it != exceptions().end()) return std::string(it->second);
  if (w.find('\'') != std::string_view::npos) {
    if (w.size() > 2 && ends_with(w, "'s")) return std::string(w.substr(0, w.size() - 2));
    return std::string(w);
  }

  const auto n = w.size();
  if (n > 4 && ends_with(w, "ies")) return std::string(w.substr(0, n - 3)) + "y";
  if (ends_with(w, "sses")) return std::string(w.substr(0, n - 2));
  if (ends_with(w, "aches")) return std::string(w.substr(0, n - 1));
  if (n > 4 && (ends_with(w, "ches") || ends_with(w, "shes") || ends_with(w, "xes") ||
                ends_with(w, "zzes"))) {
    return std::string(w.substr(0, n - 2));
  }
  if (n > 3 && ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    return std::string(w.substr(0, n - 1));
  }

  if (n > 4 && ends_with(w, "ied")) return std::string(w.substr(0, n - 3)) + "y";

  std::string stem;
  if (ends_with(w, "ing")) {
    stem = w.substr(0, n - 3);
  } else if (ends_with(w, "ed") && !ends_with(w, "eed")) {
    stem = w.substr(0, n - 2);
  } else {
    return std::string(w);
  }
  if (stem.size() < 3 || !has_vowel(stem)) return std::string(w);

  const auto s = stem.size();
  if (stem[s - 1] == stem[s - 2] && is_consonant(stem, s - 1) &&
      std::string_view("lsz").find(stem[s - 1]) == std::string_view::npos) {
    stem.pop_back();
  } else if (needs_silent_e(stem)) {
    stem.push_back('e');
  }
  return stem;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// The word ending right before `end`, without leading brackets or quotes.
std::string word_before(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  std::string_view word = text.substr(begin, end - begin);
  while (!word.empty() && !std::isalnum(static_cast<unsigned char>(word.front()))) {
    word.remove_prefix(1);
  }
  return lower_ascii(word);
}

}  // namespace

const WordSet& default_stopwords() {
  static const WordSet set = make_set(kStopwords);
  return set;
}

const WordSet& default_negators() {
  static const WordSet set = make_set(kNegators);
  return set;
}

const WordSet& default_abbreviations() {
  static const WordSet set = make_set(kAbbreviations);
  return set;
}

PrepConfig PrepConfig::defaults() {
  return PrepConfig{default_stopwords(), default_negators(), default_abbreviations()};
}

WordSet load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileNotReadable(path);
  WordSet words;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view entry = line;
    if (auto hash = entry.find('#'); hash != std::string_view::npos) entry = entry.substr(0, hash);
    entry = csv::trim(entry);
    if (!entry.empty()) words.insert(lower_ascii(entry));
  }
  return words;
}

std::vector<std::string> split_sentences(std::string_view text, const PrepConfig& cfg) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    auto s = csv::trim(text.substr(start, end - start));
    if (!s.empty()) sentences.emplace_back(s);
    start = end;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    std::size_t j = i;
    while (j + 1 < text.size() && is_terminator(text[j + 1])) ++j;
    while (j + 1 < text.size() && std::string_view("\"')]").find(text[j + 1]) != std::string_view::npos) {
      ++j;
    }
    const std::size_t next = j + 1;
    if (next < text.size() && !is_space(text[next])) {
      i = j;
      continue;
    }
    if (text[i] == '.' && cfg.abbreviations.contains(word_before(text, i))) {
      i = j;
      continue;
    }
    emit(next);
    i = j;
  }
  emit(text.size());
  return sentences;
}

std::vector<Token> tokenize(std::string_view sentence, const PrepConfig& cfg) {
  const bool contraction_negator = cfg.negators.contains("n't");
  std::vector<Token> tokens;
  std::string chunk;
  bool has_digit = false;

  auto flush = [&] {
    std::string_view word = chunk;
    while (!word.empty() && word.front() == '\'') word.remove_prefix(1);
    while (!word.empty() && word.back() == '\'') word.remove_suffix(1);
    if (!word.empty() && !has_digit) {
      Token t;
      t.surface = std::string(word);
      t.is_negator = cfg.negators.contains(t.surface) ||
                     (contraction_negator && ends_with(t.surface, "n't"));
      t.is_stopword = !t.is_negator && cfg.stopwords.contains(t.surface);
      t.lemma = lemmatize(t.surface);
      tokens.push_back(std::move(t));
    }
    chunk.clear();
    has_digit = false;
  };

  for (std::size_t i = 0; i < sentence.size(); ++i) {
    const auto c = static_cast<unsigned char>(sentence[i]);
    // U+2018 / U+2019 quotes fold into an ASCII apostrophe.
    if (c == 0xE2 && i + 2 < sentence.size() && static_cast<unsigned char>(sentence[i + 1]) == 0x80 &&
        (static_cast<unsigned char>(sentence[i + 2]) == 0x98 ||
         static_cast<unsigned char>(sentence[i + 2]) == 0x99)) {
      chunk.push_back('\'');
      i += 2;
    } else if (std::isalpha(c) && c < 0x80) {
      chunk.push_back(static_cast<char>(std::tolower(c)));
    } else if (std::isdigit(c)) {
      chunk.push_back(static_cast<char>(c));
      has_digit = true;
    } else if (c == '\'') {
      chunk.push_back('\'');
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::string lemmatize(std::string_view surface) {
  std::string current(surface);
  for (int guard = 0; guard < 8; ++guard) {
    std::string next = reduce_once(current);
    if (next == current) break;
    current = std::move(next);
  }
  return current;
}

std::vector<Sentence> prepare_text(std::string_view text, const PrepConfig& cfg) {
  std::vector<Sentence> out;
  for (auto& raw : split_sentences(text, cfg)) {
    auto tokens = tokenize(raw, cfg);
    if (tokens.empty()) continue;
    out.push_back(Sentence{out.size(), std::move(raw), std::move(tokens)});
  }
  return out;
}

}  // namespace concern_scan
