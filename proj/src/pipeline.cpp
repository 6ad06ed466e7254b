#include "concern_scan/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "concern_scan/errors.hpp"

namespace concern_scan {

void AnalysisConfig::validate() const {
  ingest.validate();
  sentiment.validate();
  thresholds.validate();
}

Engine::Engine(const PolarityLexicon& polarity, const EmotionLexicon& emotions, AnalysisConfig config)
    : polarity_(polarity), emotions_(emotions), config_(std::move(config)) {
  config_.validate();
}

ScoredReport Engine::analyze(const ReportRecord& record) const {
  ScoredReport out;
  out.record = record;
  out.sentences = prepare_text(record.text, config_.prep);
  if (out.sentences.empty()) {
    out.analysis = empty_report_analysis();
    return out;
  }
  std::vector<SentenceScore> scores;
  std::vector<EmotionProfile> profiles;
  scores.reserve(out.sentences.size());
  profiles.reserve(out.sentences.size());
  for (const auto& s : out.sentences) {
    scores.push_back(score_sentence(s.tokens, polarity_, config_.sentiment));
    profiles.push_back(sentence_emotions(s.tokens, emotions_));
    accumulate(out.emotion_hits, emotion_hits(profiles.back()));
  }
  out.analysis = analyze_report(scores, profiles, config_.thresholds);
  return out;
}

std::vector<ScoredReport> Engine::analyze_all(std::span<const ReportRecord> records,
                                              std::size_t jobs) const {
  std::vector<ScoredReport> out(records.size());
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(records.size(), 1));
  if (jobs == 1) {
    for (std::size_t i = 0; i < records.size(); ++i) out[i] = analyze(records[i]);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < records.size() && !failed; i = next++) {
            out[i] = analyze(records[i]);
          }
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

AnalysisRun Engine::run(LoadResult loaded, std::size_t jobs) const {
  if (loaded.records.empty()) throw EmptyCorpus();

  AnalysisRun run;
  run.config = config_;
  run.counts.rows_read = loaded.rows_read;
  run.counts.duplicates = loaded.duplicates;
  run.counts.rejected = loaded.issues.size();
  run.issues = std::move(loaded.issues);
  run.reports = analyze_all(loaded.records, jobs);
  std::sort(run.reports.begin(), run.reports.end(),
            [](const ScoredReport& a, const ScoredReport& b) { return a.record.id < b.record.id; });

  std::vector<ScoredReport> concerns;
  for (const auto& r : run.reports) {
    ++run.counts.analyzed;
    run.counts.sentences += r.analysis.s_total;
    if (r.sentences.empty()) ++run.counts.empty_reports;
    if (is_concern_report(r.analysis)) {
      ++run.counts.concern_reports;
      concerns.push_back(r);
    }
  }

  run.yearly = aggregate_by_year(run.reports);
  try {
    run.regression = fit_linear(concern_volume_points(run.yearly));
  } catch (const TooFewPoints& e) {
    run.regression_note = e.what();
  } catch (const DegenerateX& e) {
    run.regression_note = e.what();
  }
  run.words = word_frequencies(concerns, config_.top_words);
  return run;
}

AnalysisRun run_analysis(const std::string& corpus_path, const LexiconPaths& lexicons,
                         const AnalysisConfig& config, std::size_t jobs) {
  config.validate();
  LoadResult loaded;
  try {
    loaded = load_reports(corpus_path, config.ingest);
  } catch (const Error& e) {
    throw StageError("ingest", e.what());
  }

  PolarityLexicon polarity;
  EmotionLexicon emotions;
  try {
    polarity = load_polarity_lexicon(lexicons.polarity);
  } catch (const Error& e) {
    throw StageError("polarity lexicon", e.what());
  }
  try {
    emotions = load_emotion_lexicon(lexicons.emotion);
  } catch (const Error& e) {
    throw StageError("emotion lexicon", e.what());
  }

  Engine engine(polarity, emotions, config);
  AnalysisRun run;
  try {
    run = engine.run(std::move(loaded), jobs);
  } catch (const Error& e) {
    throw StageError("analyze", e.what());
  }
  run.corpus_path = corpus_path;
  run.lexicons = lexicons;
  return run;
}

}  // namespace concern_scan
