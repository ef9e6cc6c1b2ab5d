#ifndef SEMORIENT_CLASSIFICATION_H_
#define SEMORIENT_CLASSIFICATION_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semorient/hit_backend.h"
#include "semorient/orientation.h"
#include "semorient/phrases.h"
#include "semorient/tagging.h"

namespace semorient {

// Recommendation as given by a review's author.
enum class AuthorLabel { kRecommended, kNotRecommended, kUnknown };

// What the classifier concluded. kUndetermined means no phrase survived the
// skip rule.
enum class Prediction { kRecommended, kNotRecommended, kUndetermined };

std::string_view AuthorLabelName(AuthorLabel label);
std::string_view PredictionName(Prediction p);
// Accepts "recommended" / "not_recommended" (case-insensitive); nullopt
// otherwise.
std::optional<AuthorLabel> ParseAuthorLabel(std::string_view s);
std::optional<Prediction> ParsePrediction(std::string_view s);

struct Review {
  std::string id;
  std::string domain;
  AuthorLabel label = AuthorLabel::kUnknown;
  std::optional<int> stars;  // 1..5
  std::string text;
  // "surface/TAG ..." form; when present it is used instead of `text`.
  std::optional<std::string> tagged;
  size_t line = 0;  // source line, for diagnostics
};

struct ScoredPhrase {
  CandidatePhrase phrase;
  SoEstimate so;
};

struct ClassificationResult {
  std::string review_id;
  std::vector<ScoredPhrase> phrases;  // extraction order
  size_t used_count = 0;
  size_t skipped_count = 0;
  std::optional<double> average_so;
  Prediction label = Prediction::kUndetermined;
};

// Recommended iff the average is strictly positive.
Prediction Decide(std::optional<double> average_so);

// Folds per-phrase estimates into a result: mean of computed values
// accumulated in the given order, then Decide().
ClassificationResult Summarize(std::string review_id,
                               std::vector<ScoredPhrase> phrases);

enum class TaggerMode { kBaseline, kPretagged };

// Tag -> extract -> estimate -> average. Holds references; the lexicon and
// backend must outlive it. Classify() is safe to call concurrently when the
// backend is.
class ReviewClassifier {
 public:
  ReviewClassifier(const Lexicon& lexicon, HitBackend& backend, SoConfig cfg,
                   TaggerMode mode = TaggerMode::kBaseline);

  // Pre-tagged reviews are used as-is in either mode; kPretagged rejects
  // reviews without a tagged form (MalformedReview).
  std::vector<TaggedToken> Tag(const Review& review) const;
  std::vector<CandidatePhrase> Extract(const Review& review) const;
  ClassificationResult Classify(const Review& review) const;

  const SoConfig& config() const { return cfg_; }

 private:
  const Lexicon& lexicon_;
  HitBackend& backend_;
  SoConfig cfg_;
  TaggerMode mode_;
};

// Classifies every review on up to `jobs` threads. Output order equals
// input order. The first exception thrown by any worker is rethrown.
std::vector<ClassificationResult> ClassifyBatch(
    std::span<const Review> reviews, const ReviewClassifier& classifier,
    unsigned jobs = 1);

}  // namespace semorient

#endif  // SEMORIENT_CLASSIFICATION_H_
