#include "semorient/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "semorient/classification.h"
#include "semorient/errors.h"
#include "semorient/evaluation.h"
#include "semorient/hit_backend.h"
#include "semorient/hit_index.h"
#include "semorient/orientation.h"
#include "semorient/query_cache.h"
#include "semorient/review_io.h"
#include "semorient/tagging.h"

#ifndef SEMORIENT_DEFAULT_LEXICON
#define SEMORIENT_DEFAULT_LEXICON "data/lexicon.tsv"
#endif

namespace semorient {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string index_path;
  std::string corpus_path;
  std::string fixture_path;
  std::string cache_path;
  std::string lexicon_path = SEMORIENT_DEFAULT_LEXICON;
  std::string pos_ref = "excellent";
  std::string neg_ref = "poor";
  double epsilon = 0.01;
  uint64_t min_hits = 4;
  uint32_t window = kDefaultNearWindow;
  std::string log_base = "e";
  std::vector<std::string> exclude;
  std::string tagger = "baseline";
  std::string fallback = "recommended";
  std::string format = "text";
  unsigned jobs = 1;

  std::string out_path;
  std::string in_path;
  std::string results_path;
  std::string reviews_path;
  std::string phrase;
};

SoConfig MakeSoConfig(const Options& o) {
  SoConfig cfg;
  cfg.positive_ref = ToLower(o.pos_ref);
  cfg.negative_ref = ToLower(o.neg_ref);
  cfg.epsilon = o.epsilon;
  cfg.min_hits = o.min_hits;
  cfg.window = o.window;
  if (o.log_base == "e") {
    cfg.log_base = kNaturalLogBase;
  } else {
    try {
      size_t used = 0;
      cfg.log_base = std::stod(o.log_base, &used);
      if (used != o.log_base.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("--log-base must be 'e' or a number > 1");
    }
  }
  cfg.exclusions.insert(o.exclude.begin(), o.exclude.end());
  try {
    cfg.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Prediction ParseFallback(const std::string& s) {
  auto p = ParsePrediction(s);
  if (!p || *p == Prediction::kUndetermined) {
    throw UsageError("--fallback must be recommended or not_recommended");
  }
  return *p;
}

// Owns whatever backend stack the flags ask for: base backend, optionally
// wrapped in a persistent cache.
class BackendStack {
 public:
  BackendStack(const Options& o, bool required) {
    int sources = !o.index_path.empty() + !o.corpus_path.empty() +
                  !o.fixture_path.empty();
    if (sources > 1) {
      throw UsageError("give only one of --index, --corpus, --fixture");
    }
    if (sources == 0) {
      if (required) throw UsageError("one of --index, --corpus, --fixture is required");
      return;
    }
    if (!o.index_path.empty()) {
      base_ = std::make_unique<IndexBackend>(
          std::make_shared<const HitIndex>(HitIndex::LoadFile(o.index_path)));
    } else if (!o.corpus_path.empty()) {
      base_ = std::make_unique<IndexBackend>(std::make_shared<const HitIndex>(
          HitIndex::Build(LoadCorpus(o.corpus_path))));
    } else {
      base_ = std::make_unique<FixtureBackend>(
          FixtureBackend::LoadFile(o.fixture_path));
    }
    if (!o.cache_path.empty()) {
      cache_ = std::make_unique<QueryCache>(o.cache_path);
      cached_ = std::make_unique<CachingBackend>(*cache_, *base_);
    }
  }

  HitBackend* get() {
    if (cached_) return cached_.get();
    return base_.get();
  }

 private:
  std::unique_ptr<HitBackend> base_;
  std::unique_ptr<QueryCache> cache_;
  std::unique_ptr<CachingBackend> cached_;
};

TaggerMode ParseTaggerMode(const std::string& s) {
  if (s == "baseline") return TaggerMode::kBaseline;
  if (s == "pretagged") return TaggerMode::kPretagged;
  throw UsageError("--tagger must be baseline or pretagged");
}

Lexicon LoadLexiconFor(const Options& o) {
  if (ParseTaggerMode(o.tagger) == TaggerMode::kPretagged) return Lexicon();
  return Lexicon::Load(o.lexicon_path);
}

void CheckFormat(const Options& o) {
  if (o.format != "text" && o.format != "json") {
    throw UsageError("--format must be text or json");
  }
}

std::string FormatDouble(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

nlohmann::json CountsJson(const HitCounts& c, const SoConfig& cfg) {
  return {{"near_" + cfg.positive_ref, c.near_positive},
          {"near_" + cfg.negative_ref, c.near_negative},
          {"hits_" + cfg.positive_ref, c.positive_total},
          {"hits_" + cfg.negative_ref, c.negative_total}};
}

int CmdIndexBuild(const Options& o, std::ostream& out) {
  if (o.corpus_path.empty()) throw UsageError("index build needs --corpus");
  std::vector<CorpusDocument> docs = LoadCorpus(o.corpus_path);
  HitIndex index = HitIndex::Build(docs);
  index.SaveFile(o.out_path);
  out << "indexed " << index.document_count() << " documents, "
      << index.vocabulary_size() << " distinct words -> " << o.out_path << "\n";
  return kExitOk;
}

int CmdSo(const Options& o, std::ostream& out) {
  CheckFormat(o);
  std::istringstream words(o.phrase);
  std::vector<std::string> parts;
  for (std::string w; words >> w;) parts.push_back(ToLower(w));
  if (parts.size() != 2) throw UsageError("phrase must be exactly two words");
  SoConfig cfg = MakeSoConfig(o);
  BackendStack backends(o, true);
  SoEstimate est = EstimateSo(parts[0], parts[1], *backends.get(), cfg);
  const std::string text = parts[0] + " " + parts[1];
  if (o.format == "json") {
    nlohmann::json j;
    j["phrase"] = text;
    j["status"] = est.computed() ? "computed" : "skipped";
    j["so"] = est.value ? nlohmann::json(*est.value) : nlohmann::json(nullptr);
    j["log_base"] = cfg.log_base;
    j["counts"] = CountsJson(est.counts, cfg);
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << text << "\t";
  if (est.computed()) {
    out << FormatDouble(*est.value, 3) << "\t"
        << (*est.value > 0 ? "positive" : "negative") << "\n";
  } else {
    out << "SKIPPED\n";
  }
  const HitCounts& c = est.counts;
  out << "hits(phrase NEAR " << cfg.positive_ref << ") = " << c.near_positive
      << "\n"
      << "hits(phrase NEAR " << cfg.negative_ref << ") = " << c.near_negative
      << "\n"
      << "hits(" << cfg.positive_ref << ") = " << c.positive_total << "\n"
      << "hits(" << cfg.negative_ref << ") = " << c.negative_total << "\n";
  return kExitOk;
}

void PrintPhraseTable(const Review& review, const ClassificationResult& result,
                      bool with_so, std::ostream& out) {
  char line[256];
  out << "review " << review.id;
  if (!review.domain.empty()) out << " (" << review.domain << ")";
  out << "\n";
  if (with_so) {
    std::snprintf(line, sizeof(line), "  %-32s %-10s %-8s %s\n",
                  "Extracted Phrase", "Tags", "Pattern", "Semantic Orientation");
  } else {
    std::snprintf(line, sizeof(line), "  %-32s %-10s %s\n", "Extracted Phrase",
                  "Tags", "Pattern");
  }
  out << line;
  for (const ScoredPhrase& sp : result.phrases) {
    std::string tags = std::string(TagName(sp.phrase.tag1)) + " " +
                       std::string(TagName(sp.phrase.tag2));
    if (with_so) {
      std::string so =
          sp.so.value ? FormatDouble(*sp.so.value, 3) : std::string("skipped");
      std::snprintf(line, sizeof(line), "  %-32s %-10s %-8d %s\n",
                    sp.phrase.text().c_str(), tags.c_str(),
                    PatternRow(sp.phrase.pattern), so.c_str());
    } else {
      std::snprintf(line, sizeof(line), "  %-32s %-10s %d\n",
                    sp.phrase.text().c_str(), tags.c_str(),
                    PatternRow(sp.phrase.pattern));
    }
    out << line;
  }
  if (with_so) {
    std::string avg = result.average_so ? FormatDouble(*result.average_so, 3)
                                        : std::string("n/a");
    std::snprintf(line, sizeof(line), "  %-52s %s (%s)\n",
                  "Average Semantic Orientation", avg.c_str(),
                  std::string(PredictionName(result.label)).c_str());
    out << line;
  }
}

int CmdExtract(const Options& o, std::ostream& out) {
  CheckFormat(o);
  std::vector<Review> reviews = LoadReviews(o.in_path);
  Lexicon lexicon = LoadLexiconFor(o);
  BackendStack backends(o, false);
  HitBackend* backend = backends.get();
  FixtureBackend unused;
  SoConfig cfg = MakeSoConfig(o);
  ReviewClassifier classifier(lexicon, backend ? *backend : unused, cfg,
                              ParseTaggerMode(o.tagger));
  for (const Review& review : reviews) {
    ClassificationResult result;
    if (backend) {
      result = classifier.Classify(review);
    } else {
      std::vector<ScoredPhrase> phrases;
      for (CandidatePhrase& p : classifier.Extract(review)) {
        phrases.push_back(ScoredPhrase{std::move(p), SoEstimate{}});
      }
      result = Summarize(review.id, std::move(phrases));
    }
    if (o.format == "json") {
      nlohmann::json j;
      j["id"] = review.id;
      j["phrases"] = nlohmann::json::array();
      for (const ScoredPhrase& sp : result.phrases) {
        nlohmann::json p;
        p["phrase"] = sp.phrase.text();
        p["tags"] = std::string(TagName(sp.phrase.tag1)) + " " +
                    std::string(TagName(sp.phrase.tag2));
        p["pattern"] = PatternRow(sp.phrase.pattern);
        p["position"] = sp.phrase.start_position;
        if (backend) {
          p["so"] = sp.so.value ? nlohmann::json(*sp.so.value)
                                : nlohmann::json(nullptr);
        }
        j["phrases"].push_back(std::move(p));
      }
      if (backend) {
        j["average_so"] = result.average_so ? nlohmann::json(*result.average_so)
                                            : nlohmann::json(nullptr);
      }
      out << j.dump() << "\n";
    } else {
      PrintPhraseTable(review, result, backend != nullptr, out);
    }
  }
  return kExitOk;
}

int CmdClassify(const Options& o, std::ostream& out) {
  Prediction fallback = ParseFallback(o.fallback);
  SoConfig cfg = MakeSoConfig(o);
  TaggerMode mode = ParseTaggerMode(o.tagger);
  std::vector<Review> reviews = LoadReviews(o.in_path);
  Lexicon lexicon = LoadLexiconFor(o);
  BackendStack backends(o, true);
  ReviewClassifier classifier(lexicon, *backends.get(), cfg, mode);
  std::vector<ClassificationResult> results =
      ClassifyBatch(reviews, classifier, std::max(1u, o.jobs));

  std::vector<StoredResult> stored;
  size_t undetermined = 0;
  for (ClassificationResult& r : results) {
    if (r.label == Prediction::kUndetermined) ++undetermined;
    Prediction decision = ApplyFallback(r.label, fallback);
    stored.push_back(StoredResult{std::move(r), decision});
  }
  if (o.out_path == "-") {
    WriteResults(out, stored);
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::trunc);
  if (!file) throw IoError("cannot write results: " + o.out_path);
  WriteResults(file, stored);
  file.flush();
  if (!file) throw IoError("failed writing results: " + o.out_path);
  out << "classified " << stored.size() << " reviews (" << undetermined
      << " undetermined) -> " << o.out_path << "\n";
  return kExitOk;
}

int CmdEvaluate(const Options& o, std::ostream& out) {
  CheckFormat(o);
  std::vector<StoredResult> results = LoadResults(o.results_path);
  std::vector<Review> reviews = LoadReviews(o.reviews_path);
  std::vector<Outcome> outcomes = JoinOutcomes(results, reviews);
  EvalReport report = Evaluate(outcomes);
  if (o.format == "json") {
    out << ReportToJson(report).dump(2) << "\n";
  } else {
    out << RenderReportText(report);
  }
  return kExitOk;
}

int CmdCacheStats(const Options& o, std::ostream& out) {
  if (o.cache_path.empty()) throw UsageError("cache stats needs --cache");
  QueryCache cache(o.cache_path);
  std::error_code ec;
  auto bytes = std::filesystem::file_size(o.cache_path, ec);
  out << "cache: " << o.cache_path << "\n"
      << "entries: " << cache.size() << "\n"
      << "bytes: " << (ec ? 0 : bytes) << "\n";
  return kExitOk;
}

int CmdCacheClear(const Options& o, std::ostream& out) {
  if (o.cache_path.empty()) throw UsageError("cache clear needs --cache");
  QueryCache cache(o.cache_path);
  size_t n = cache.size();
  cache.Clear();
  out << "cleared " << n << " entries from " << o.cache_path << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Unsupervised review orientation by phrase semantic orientation",
               "semorient"};
  app.set_config("--config", "", "key=value file supplying option defaults");
  app.fallthrough();
  app.require_subcommand(1);

  app.add_option("--index", o.index_path, "Hit index file");
  app.add_option("--corpus", o.corpus_path, "Reference corpus (JSON Lines)");
  app.add_option("--fixture", o.fixture_path,
                 "JSON map of canonical query -> count");
  app.add_option("--cache", o.cache_path, "Persistent query cache file");
  app.add_option("--lexicon", o.lexicon_path, "Lexicon for the baseline tagger");
  app.add_option("--pos-ref", o.pos_ref, "Positive reference word");
  app.add_option("--neg-ref", o.neg_ref, "Negative reference word");
  app.add_option("--epsilon", o.epsilon, "Smoothing added to every hit count");
  app.add_option("--min-hits", o.min_hits,
                 "Skip phrases whose NEAR counts are both below this");
  app.add_option("--window", o.window, "NEAR window in words");
  app.add_option("--log-base", o.log_base, "Logarithm base: e or a number > 1");
  app.add_option("--exclude", o.exclude, "Source label never counted")
      ->allow_extra_args(false);
  app.add_option("--tagger", o.tagger, "baseline or pretagged");
  app.add_option("--fallback", o.fallback,
                 "Label for undetermined reviews: recommended or not_recommended");
  app.add_option("--format", o.format, "text or json");
  app.add_option("--jobs", o.jobs, "Worker threads for classify");

  CLI::App* index = app.add_subcommand("index", "Manage hit indexes");
  index->require_subcommand(1);
  CLI::App* index_build = index->add_subcommand("build", "Build an index from --corpus");
  index_build->add_option("--out", o.out_path, "Index file to write")->required();

  CLI::App* so = app.add_subcommand("so", "Semantic orientation of one phrase");
  so->add_option("phrase", o.phrase, "Two-word phrase")->required();

  CLI::App* extract = app.add_subcommand("extract", "List extracted phrases per review");
  extract->add_option("--in", o.in_path, "Reviews (JSON Lines)")->required();

  CLI::App* classify = app.add_subcommand("classify", "Classify reviews");
  classify->add_option("--in", o.in_path, "Reviews (JSON Lines)")->required();
  classify->add_option("--out", o.out_path, "Results (JSON Lines), - for stdout")
      ->required();

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score results against author labels");
  evaluate->add_option("--results", o.results_path, "Output of classify")->required();
  evaluate->add_option("--reviews", o.reviews_path, "Labeled reviews")->required();

  CLI::App* cache = app.add_subcommand("cache", "Inspect or clear the query cache");
  cache->require_subcommand(1);
  CLI::App* cache_stats = cache->add_subcommand("stats", "Entry count and size");
  CLI::App* cache_clear = cache->add_subcommand("clear", "Remove every entry");

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1),
                                  args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (index_build->parsed()) return CmdIndexBuild(o, out);
    if (so->parsed()) return CmdSo(o, out);
    if (extract->parsed()) return CmdExtract(o, out);
    if (classify->parsed()) return CmdClassify(o, out);
    if (evaluate->parsed()) return CmdEvaluate(o, out);
    if (cache_stats->parsed()) return CmdCacheStats(o, out);
    if (cache_clear->parsed()) return CmdCacheClear(o, out);
    err << "semorient: no command given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "semorient: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "semorient: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "semorient: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "semorient: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace semorient
