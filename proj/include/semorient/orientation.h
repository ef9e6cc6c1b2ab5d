#ifndef SEMORIENT_ORIENTATION_H_
#define SEMORIENT_ORIENTATION_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "semorient/hit_backend.h"
#include "semorient/hit_query.h"
#include "semorient/phrases.h"

namespace semorient {

inline constexpr double kNaturalLogBase = 2.718281828459045;

struct SoConfig {
  std::string positive_ref = "excellent";
  std::string negative_ref = "poor";
  // Added to every one of the four hit counts before taking the ratio.
  double epsilon = 0.01;
  // A phrase is skipped when both NEAR counts are below this.
  uint64_t min_hits = 4;
  double log_base = kNaturalLogBase;
  uint32_t window = kDefaultNearWindow;
  std::set<std::string> exclusions;

  // Throws std::invalid_argument describing the first violated constraint.
  void Validate() const;
};

struct HitCounts {
  uint64_t near_positive = 0;
  uint64_t near_negative = 0;
  uint64_t positive_total = 0;
  uint64_t negative_total = 0;

  bool operator==(const HitCounts&) const = default;
};

struct SoEstimate {
  // Absent when the phrase was skipped for lack of evidence.
  std::optional<double> value;
  HitCounts counts;

  bool computed() const { return value.has_value(); }
  bool skipped() const { return !value.has_value(); }
};

// Pointwise mutual information log_base(p_joint / (p1 * p2)). Throws
// DomainError unless all three probabilities lie in (0, 1] and the base
// exceeds 1.
double Pmi(double p_joint, double p1, double p2, double log_base = 2.0);

// Smoothed log-odds ratio of the four counts:
//   log_base((np + eps)(tn + eps) / ((nn + eps)(tp + eps)))
double SoFromCounts(const HitCounts& counts, double epsilon, double log_base);

// Skip rule on raw counts: both NEAR counts below min_hits.
bool ShouldSkip(const HitCounts& counts, uint64_t min_hits);

// Issues the four queries for `word1 word2` (NEAR positive, NEAR negative,
// positive total, negative total) and applies the skip rule. Throws
// BackendUnavailable (from the backend) and DegenerateReference when both
// reference totals are zero for a phrase that was not skipped.
SoEstimate EstimateSo(const std::string& word1, const std::string& word2,
                      HitBackend& backend, const SoConfig& cfg);

inline SoEstimate EstimateSo(const CandidatePhrase& phrase, HitBackend& backend,
                             const SoConfig& cfg) {
  return EstimateSo(phrase.word1, phrase.word2, backend, cfg);
}

}  // namespace semorient

#endif  // SEMORIENT_ORIENTATION_H_
