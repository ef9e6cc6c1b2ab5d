#ifndef SEMORIENT_EVALUATION_H_
#define SEMORIENT_EVALUATION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "semorient/classification.h"
#include "semorient/review_io.h"

namespace semorient {

// One review's outcome joined with its author-supplied metadata.
struct Outcome {
  std::string domain;
  AuthorLabel author = AuthorLabel::kUnknown;
  Prediction label = Prediction::kUndetermined;  // before fallback
  Prediction decision = Prediction::kUndetermined;  // after fallback
  std::optional<double> average_so;
  std::optional<int> stars;
  size_t phrase_count = 0;
};

// Percentage of outcomes whose decision equals the author label. Outcomes
// must carry an author label. Throws EmptyEvaluation on empty input.
double Accuracy(std::span<const Outcome> outcomes);

// Rows: predicted Positive / Negative; columns: author recommended / not.
// Cells are percentages of all outcomes.
struct ConfusionMatrix {
  double positive_up = 0;
  double positive_down = 0;
  double negative_up = 0;
  double negative_down = 0;
  size_t total = 0;

  double positive_sum() const { return positive_up + positive_down; }
  double negative_sum() const { return negative_up + negative_down; }
  double up_sum() const { return positive_up + negative_up; }
  double down_sum() const { return positive_down + negative_down; }
  double diagonal() const { return positive_up + negative_down; }
};

// Throws EmptyEvaluation.
ConfusionMatrix Confusion(std::span<const Outcome> outcomes);

// Sample Pearson correlation. Throws InsufficientData when the lengths differ
// or fewer than two pairs are given, ZeroVariance when either side is
// constant.
double Pearson(std::span<const double> xs, std::span<const double> ys);

// Pearson over average ranks (ties share the mean rank).
double Spearman(std::span<const double> xs, std::span<const double> ys);

struct DomainSummary {
  std::string domain;
  size_t reviews = 0;
  size_t phrases = 0;
  double average_phrases = 0.0;
  bool empty = true;
};

// Review counts and mean extracted phrases per domain (sorted by name), plus
// an "All" row last.
std::vector<DomainSummary> SummarizeCorpus(std::span<const Outcome> outcomes,
                                           std::span<const std::string>
                                               extra_domains = {});

struct DomainReport {
  std::string domain;
  size_t total = 0;         // reviews seen
  size_t labeled = 0;       // with an author label
  size_t determined = 0;    // classifier reached a verdict
  size_t undetermined = 0;  // fell back
  double average_phrases = 0.0;
  std::optional<double> accuracy;             // labeled, after fallback
  std::optional<double> determined_accuracy;  // labeled and determined only
  std::optional<ConfusionMatrix> confusion;
  std::optional<double> correlation;  // Pearson, stars vs average SO
  std::optional<double> spearman;
  size_t correlated = 0;  // pairs behind the correlation
};

struct EvalReport {
  std::vector<DomainReport> domains;  // sorted by name
  DomainReport overall;
};

EvalReport Evaluate(std::span<const Outcome> outcomes);

// Joins stored results with their reviews by id. Throws FormatError when a
// result names an unknown review.
std::vector<Outcome> JoinOutcomes(std::span<const StoredResult> results,
                                  std::span<const Review> reviews);

std::string RenderReportText(const EvalReport& report);
nlohmann::json ReportToJson(const EvalReport& report);

}  // namespace semorient

#endif  // SEMORIENT_EVALUATION_H_
