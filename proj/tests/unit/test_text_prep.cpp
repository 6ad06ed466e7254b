#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "concern_scan/csv.hpp"
#include "concern_scan/text_prep.hpp"
#include "doctest.h"
#include "support/random_corpus.hpp"

using namespace concern_scan;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_CASE("default stopword list") {
  const auto& sw = default_stopwords();
  CHECK(sw.size() == 127);
  for (const auto& w : sw) CHECK_FALSE(w.empty());
  CHECK(sw.count("the"));
  // "no" and "not" are in the list but tokenize as negators, never stopwords
  auto cfg = PrepConfig::defaults();
  for (const auto& n : default_negators()) {
    auto t = tokenize(n, cfg);
    REQUIRE(t.size() == 1);
    CHECK(t[0].is_negator);
    CHECK_FALSE(t[0].is_stopword);
  }
}

TEST_CASE("sentence splitting") {
  auto cfg = PrepConfig::defaults();
  auto s = split_sentences("Pain started. Dr. Smith removed it!! Why?\" Fine", cfg);
  REQUIRE(s.size() == 4);
  CHECK(s[0] == "Pain started.");
  CHECK(s[1] == "Dr. Smith removed it!!");
  CHECK(s[2] == "Why?\"");
  CHECK(s[3] == "Fine");
  CHECK(split_sentences("Version 2.5 failed.", cfg).size() == 1);
  CHECK(split_sentences("", cfg).empty());
  CHECK(split_sentences("   ", cfg).empty());
}

TEST_CASE("tokenizer") {
  auto cfg = PrepConfig::defaults();
  auto toks = tokenize("I can't walk; the pain is 10/10 and NOT improving!", cfg);
  CHECK(surfaces(toks) == std::vector<std::string>{"i", "can't", "walk", "the", "pain", "is", "and", "not", "improving"});
  CHECK(toks[0].is_stopword);
  CHECK(toks[1].is_negator);
  CHECK_FALSE(toks[1].is_stopword);
  CHECK(toks[7].is_negator);
  CHECK(toks[8].lemma == "improve");
  auto curly = tokenize("don\xE2\x80\x99t 'quoted'", cfg);
  CHECK(surfaces(curly) == std::vector<std::string>{"don't", "quoted"});
  CHECK(curly[0].is_negator);
}

TEST_CASE("tokens only contain lowercase letters and internal apostrophes") {
  auto cfg = PrepConfig::defaults();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ch(1, 255);
  for (int round = 0; round < 300; ++round) {
    std::string text;
    for (int i = 0; i < 80; ++i) text += static_cast<char>(ch(rng));
    for (const auto& t : tokenize(text, cfg)) {
      REQUIRE_FALSE(t.surface.empty());
      CHECK(t.surface.front() != '\'');
      CHECK(t.surface.back() != '\'');
      for (char c : t.surface) CHECK(((c >= 'a' && c <= 'z') || c == '\''));
    }
  }
}

TEST_CASE("lemma fixture") {
  std::ifstream in(testgen::test_data_path("lemmas.tsv"));
  REQUIRE(in);
  std::string line;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string surface = line.substr(0, tab);
    const std::string lemma = line.substr(tab + 1);
    CHECK_MESSAGE(lemmatize(surface) == lemma, surface);
    ++checked;
  }
  CHECK(checked >= 25);
}

TEST_CASE("lemmatize is a fixpoint") {
  const char* words[] = {"injuries", "hospitalized", "stopped", "caring", "feelings", "swelling", "operated",
                         "boxes",    "buses",        "was",     "worse",  "eroded",   "dying",    "removal"};
  for (const char* w : words) {
    const auto once = lemmatize(w);
    CHECK_MESSAGE(lemmatize(once) == once, w);
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(1, 12), letter('a', 'z');
  for (int i = 0; i < 3000; ++i) {
    std::string w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w += static_cast<char>(letter(rng));
    const auto once = lemmatize(w);
    CHECK_MESSAGE(lemmatize(once) == once, w);
  }
}

TEST_CASE("prepare_text drops empty sentences and reindexes") {
  auto s = prepare_text("1234. Pain again. 5678! Still bad.", PrepConfig::defaults());
  REQUIRE(s.size() == 2);
  CHECK(s[0].index == 0);
  CHECK(s[1].index == 1);
  CHECK(s[0].raw == "Pain again.");
  CHECK(prepare_text("12 34 56.", PrepConfig::defaults()).empty());
}

TEST_CASE("load_word_list") {
  auto path = std::filesystem::temp_directory_path() / "cs_words.txt";
  {
    std::ofstream out(path);
    out << "# comment\nalpha\n\n  beta  # trailing\n";
  }
  auto w = load_word_list(path.string());
  CHECK(w == WordSet{"alpha", "beta"});
  std::filesystem::remove(path);
}
