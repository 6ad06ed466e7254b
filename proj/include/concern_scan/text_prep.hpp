#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace concern_scan {

using WordSet = std::unordered_set<std::string>;

struct Token {
  std::string surface;  ///< lowercase, [a-z] plus internal apostrophes
  std::string lemma;
  bool is_stopword = false;
  bool is_negator = false;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::size_t index = 0;
  std::string raw;
  std::vector<Token> tokens;
};

struct PrepConfig {
  WordSet stopwords;
  WordSet negators;
  /// Words whose trailing period does not end a sentence ("dr", "e.g").
  WordSet abbreviations;

  /// Bundled English stopword list, the default negators and abbreviations.
  static PrepConfig defaults();
};

const WordSet& default_stopwords();
const WordSet& default_negators();
const WordSet& default_abbreviations();

/// One lowercase entry per line; `#` starts a comment; blank lines ignored.
WordSet load_word_list(const std::string& path);

std::vector<std::string> split_sentences(std::string_view text, const PrepConfig& cfg);
std::vector<Token> tokenize(std::string_view sentence, const PrepConfig& cfg);

/// Rule-based reduction: irregular table, then plural stripping, then
/// -ing/-ed stripping with undoubling and silent-e restoration. Rules are
/// reapplied until the word stops changing, so the result is a fixpoint.
std::string lemmatize(std::string_view surface);

/// Split, then tokenize each sentence. Sentences left without tokens are
/// dropped and the remaining ones are indexed from 0.
std::vector<Sentence> prepare_text(std::string_view text, const PrepConfig& cfg);

}  // namespace concern_scan
