#include "semorient/classification.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "semorient/errors.h"

namespace semorient {

std::string_view AuthorLabelName(AuthorLabel label) {
  switch (label) {
    case AuthorLabel::kRecommended: return "recommended";
    case AuthorLabel::kNotRecommended: return "not_recommended";
    case AuthorLabel::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view PredictionName(Prediction p) {
  switch (p) {
    case Prediction::kRecommended: return "recommended";
    case Prediction::kNotRecommended: return "not_recommended";
    case Prediction::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

std::optional<AuthorLabel> ParseAuthorLabel(std::string_view s) {
  std::string lower = ToLower(s);
  if (lower == "recommended") return AuthorLabel::kRecommended;
  if (lower == "not_recommended") return AuthorLabel::kNotRecommended;
  return std::nullopt;
}

std::optional<Prediction> ParsePrediction(std::string_view s) {
  std::string lower = ToLower(s);
  if (lower == "recommended") return Prediction::kRecommended;
  if (lower == "not_recommended") return Prediction::kNotRecommended;
  if (lower == "undetermined") return Prediction::kUndetermined;
  return std::nullopt;
}

Prediction Decide(std::optional<double> average_so) {
  if (!average_so) return Prediction::kUndetermined;
  return *average_so > 0.0 ? Prediction::kRecommended
                           : Prediction::kNotRecommended;
}

ClassificationResult Summarize(std::string review_id,
                               std::vector<ScoredPhrase> phrases) {
  ClassificationResult result;
  result.review_id = std::move(review_id);
  double sum = 0.0;
  for (const ScoredPhrase& p : phrases) {
    if (p.so.computed()) {
      sum += *p.so.value;
      ++result.used_count;
    } else {
      ++result.skipped_count;
    }
  }
  if (result.used_count > 0) {
    result.average_so = sum / static_cast<double>(result.used_count);
  }
  result.label = Decide(result.average_so);
  result.phrases = std::move(phrases);
  return result;
}

ReviewClassifier::ReviewClassifier(const Lexicon& lexicon, HitBackend& backend,
                                   SoConfig cfg, TaggerMode mode)
    : lexicon_(lexicon), backend_(backend), cfg_(std::move(cfg)), mode_(mode) {
  cfg_.Validate();
}

std::vector<TaggedToken> ReviewClassifier::Tag(const Review& review) const {
  if (review.tagged) {
    try {
      return ParsePretagged(*review.tagged);
    } catch (const MalformedPretagged& e) {
      throw MalformedReview("review " + review.id + ": " + e.what(),
                            review.line);
    }
  }
  if (mode_ == TaggerMode::kPretagged) {
    throw MalformedReview("review " + review.id + " has no \"tagged\" field",
                          review.line);
  }
  std::vector<Token> tokens = Tokenize(review.text);
  return TagBaseline(tokens, lexicon_);
}

std::vector<CandidatePhrase> ReviewClassifier::Extract(
    const Review& review) const {
  std::vector<TaggedToken> tagged = Tag(review);
  return ExtractPhrases(tagged);
}

ClassificationResult ReviewClassifier::Classify(const Review& review) const {
  std::vector<ScoredPhrase> scored;
  for (CandidatePhrase& phrase : Extract(review)) {
    SoEstimate so = EstimateSo(phrase, backend_, cfg_);
    scored.push_back(ScoredPhrase{std::move(phrase), std::move(so)});
  }
  return Summarize(review.id, std::move(scored));
}

std::vector<ClassificationResult> ClassifyBatch(
    std::span<const Review> reviews, const ReviewClassifier& classifier,
    unsigned jobs) {
  std::vector<ClassificationResult> results(reviews.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(
                                                   std::max<size_t>(reviews.size(), 1))));
  if (jobs == 1) {
    for (size_t i = 0; i < reviews.size(); ++i) {
      results[i] = classifier.Classify(reviews[i]);
    }
    return results;
  }

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!failed.load()) {
      size_t i = next.fetch_add(1);
      if (i >= reviews.size()) return;
      try {
        results[i] = classifier.Classify(reviews[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace semorient
