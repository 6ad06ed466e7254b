#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "concern_scan/errors.hpp"
#include "concern_scan/pipeline.hpp"
#include "concern_scan/run_io.hpp"

namespace concern_scan::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kLexiconDirEnv = "CONCERN_SCAN_LEXICON_DIR";

struct Options {
  std::string input;
  std::string polarity_lexicon;
  std::string emotion_lexicon;
  std::string from_run;
  std::string out_dir;
  std::string format = "csv";
  std::string series = "yearly";
  std::size_t jobs = 1;
  std::size_t top = 100;
  bool points = false;

  std::string delimiter = ",";
  std::string text_column = "text";
  std::string id_column = "id";
  std::string date_column = "date";
  std::string year_column = "year";
  bool no_header = false;
  bool strict = false;

  std::string stopwords;
  std::string negators;
  std::string abbreviations;

  double delta1 = 0.35;
  double delta2 = 0.4;
  double delta3 = 0.4;
  double negation_factor = -0.5;
  std::size_t negation_window = 3;
  bool literal_polarity_rule = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Explicit path wins; a relative path that does not exist is retried inside
// the lexicon directory; an unset path falls back to <dir>/<default_name>.
std::string resolve_lexicon(const std::string& given, const char* default_name, const char* flag) {
  const char* env = std::getenv(kLexiconDirEnv);
  const fs::path dir = env ? fs::path(env) : fs::path();
  if (!given.empty()) {
    const fs::path p(given);
    if (!fs::exists(p) && p.is_relative() && !dir.empty() && fs::exists(dir / p)) return (dir / p).string();
    return given;
  }
  if (!dir.empty()) return (dir / default_name).string();
  throw UsageError(std::string(flag) + " is required (or set " + kLexiconDirEnv + ")");
}

AnalysisConfig build_config(const Options& o) {
  AnalysisConfig c;
  if (o.delimiter == "\\t") {
    c.ingest.delimiter = '\t';
  } else if (o.delimiter.size() == 1) {
    c.ingest.delimiter = o.delimiter.front();
  } else {
    throw UsageError("--delimiter must be a single character");
  }
  c.ingest.text_column = o.text_column;
  c.ingest.id_column = o.id_column;
  c.ingest.date_column = o.date_column;
  c.ingest.year_column = o.year_column;
  c.ingest.has_header = !o.no_header;
  c.ingest.strict = o.strict;
  if (!o.stopwords.empty()) c.prep.stopwords = load_word_list(o.stopwords);
  if (!o.negators.empty()) c.prep.negators = load_word_list(o.negators);
  if (!o.abbreviations.empty()) c.prep.abbreviations = load_word_list(o.abbreviations);
  c.sentiment.negation_factor = o.negation_factor;
  c.sentiment.negation_window = o.negation_window;
  c.thresholds.delta1 = o.delta1;
  c.thresholds.delta2 = o.delta2;
  c.thresholds.delta3 = o.delta3;
  c.thresholds.polarity_rule = o.literal_polarity_rule ? PolarityRule::literal : PolarityRule::negative_bias;
  c.top_words = o.top;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

AnalysisRun compute(const Options& o, std::ostream& err) {
  if (o.input.empty()) throw UsageError("--input is required");
  LexiconPaths lex{resolve_lexicon(o.polarity_lexicon, "polarity.csv", "--polarity-lexicon"),
                   resolve_lexicon(o.emotion_lexicon, "emotion.tsv", "--emotion-lexicon")};
  auto run = run_analysis(o.input, lex, build_config(o), o.jobs);
  for (const auto& issue : run.issues) err << "warning: rejected " << issue.describe() << '\n';
  return run;
}

AnalysisRun obtain(const Options& o, std::ostream& err) {
  if (!o.from_run.empty()) return load_run(o.from_run);
  return compute(o, err);
}

OutputFormat format_of(const Options& o) {
  auto f = parse_output_format(o.format);
  if (!f) throw UsageError("unknown format: " + o.format);
  return *f;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  if (!o.from_run.empty()) throw UsageError("analyze reads a corpus; --from-run is not accepted");
  auto run = compute(o, err);
  if (o.out_dir.empty()) {
    write_reports(out, run.reports, fmt);
  } else {
    export_run(o.out_dir, run, fmt);
    out << "analyzed " << run.counts.analyzed << " reports (" << run.counts.rows_read << " rows read, "
        << run.counts.duplicates << " duplicates, " << run.counts.rejected << " rejected), "
        << run.counts.sentences << " sentences, " << run.counts.concern_reports << " concern reports\n";
  }
  return kExitOk;
}

int cmd_trends(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  auto run = obtain(o, err);
  if (o.series == "yearly") {
    write_yearly(out, run.yearly, fmt);
  } else if (o.series == "emotions") {
    write_emotion_series(out, run.yearly, fmt);
  } else if (o.series == "concerns") {
    write_concern_series(out, run.yearly, fmt);
  } else {
    throw UsageError("unknown series: " + o.series);
  }
  return kExitOk;
}

int cmd_regress(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  auto run = obtain(o, err);
  if (!run.regression) {
    err << "error: " << run.regression_note << '\n';
    return kExitData;
  }
  if (o.points) {
    write_regression_points(out, *run.regression, fmt);
  } else {
    write_regression(out, *run.regression, fmt);
  }
  return kExitOk;
}

int cmd_wordfreq(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = format_of(o);
  auto run = obtain(o, err);
  auto words = run.words;
  if (!o.from_run.empty() && o.top > words.size() && words.size() == run.config.top_words) {
    err << "warning: run was exported with top " << run.config.top_words << " words\n";
  }
  if (o.top != 0 && words.size() > o.top) words.resize(o.top);
  write_word_frequencies(out, words, fmt);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lexicon-based triage of adverse-event report narratives", "concern-scan"};
  app.set_config("--config", "", "key=value file setting any option; flags override it");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--input", o.input, "Delimited report corpus");
  app.add_option("--polarity-lexicon", o.polarity_lexicon, "word,polarity,subjectivity CSV");
  app.add_option("--emotion-lexicon", o.emotion_lexicon, "EmoLex-format TSV");
  app.add_option("--from-run", o.from_run, "Directory written by `analyze --out`");
  app.add_option("--out", o.out_dir, "Export directory (analyze)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{1024}));
  app.add_option("--delta1", o.delta1, "Negativity-ratio threshold")->check(CLI::Range(0.0, 0.5));
  app.add_option("--delta2", o.delta2, "Mean-negative-score threshold")->check(CLI::Range(0.0, 0.5));
  app.add_option("--delta3", o.delta3, "Mean-polarity threshold")->check(CLI::Range(0.0, 0.5));
  app.add_flag("--literal-polarity-rule", o.literal_polarity_rule, "Use A_pol > delta3 instead of -A_pol > delta3");
  app.add_option("--negation-factor", o.negation_factor, "Polarity multiplier after a negator")
      ->check(CLI::Range(-1.0, 1.0));
  app.add_option("--negation-window", o.negation_window, "Tokens searched for a negator");
  app.add_option("--delimiter", o.delimiter, "Corpus field delimiter (\\t for tab)");
  app.add_option("--text-column", o.text_column);
  app.add_option("--id-column", o.id_column);
  app.add_option("--date-column", o.date_column);
  app.add_option("--year-column", o.year_column);
  app.add_flag("--no-header", o.no_header, "Columns are 0-based indices");
  app.add_flag("--strict", o.strict, "Abort on the first invalid row");
  app.add_option("--stopwords", o.stopwords, "Stopword list file");
  app.add_option("--negators", o.negators, "Negator list file");
  app.add_option("--abbreviations", o.abbreviations, "Abbreviation list file");
  app.add_option("--top", o.top, "Number of words (0 = all)");

  auto* analyze = app.add_subcommand("analyze", "Score a corpus and write per-report results");
  auto* trends = app.add_subcommand("trends", "Yearly sentiment, emotion and concern series");
  trends->add_option("--series", o.series, "yearly | emotions | concerns")
      ->check(CLI::IsMember({"yearly", "emotions", "concerns"}));
  auto* regress = app.add_subcommand("regress", "Concern reports regressed on report volume");
  regress->add_flag("--points", o.points, "Emit per-year points instead of the summary");
  auto* wordfreq = app.add_subcommand("wordfreq", "Most frequent words in concern reports");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out, err);
    if (trends->parsed()) return cmd_trends(o, out, err);
    if (regress->parsed()) return cmd_regress(o, out, err);
    if (wordfreq->parsed()) return cmd_wordfreq(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace concern_scan::cli
