#ifndef SEMORIENT_REVIEW_IO_H_
#define SEMORIENT_REVIEW_IO_H_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "semorient/classification.h"

namespace semorient {

// JSON Lines, one review per line:
//   {"id", "domain", "label"?, "stars"?, "text"} or "tagged" instead of "text".
// Blank lines are skipped. Throws IoError or MalformedReview(line).
std::vector<Review> LoadReviews(const std::string& path);
std::vector<Review> ParseReviews(std::istream& in);

nlohmann::json ReviewToJson(const Review& review);

// A classification as persisted by `classify`: the raw result plus the label
// after mapping kUndetermined to the configured fallback.
struct StoredResult {
  ClassificationResult result;
  Prediction decision = Prediction::kUndetermined;
};

Prediction ApplyFallback(Prediction label, Prediction fallback);

// Keys are emitted in sorted order, so serialization is deterministic.
nlohmann::json ResultToJson(const ClassificationResult& result,
                            Prediction decision);
StoredResult ResultFromJson(const nlohmann::json& j);

void WriteResults(std::ostream& out, const std::vector<StoredResult>& results);
// Throws IoError or FormatError(line).
std::vector<StoredResult> LoadResults(const std::string& path);
std::vector<StoredResult> ParseResults(std::istream& in);

}  // namespace semorient

#endif  // SEMORIENT_REVIEW_IO_H_
