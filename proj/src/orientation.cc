#include "semorient/orientation.h"

#include <stdexcept>

#include "semorient/errors.h"

namespace semorient {
namespace {

double LogIn(double x, double base) {
  if (base == kNaturalLogBase) return std::log(x);
  return std::log(x) / std::log(base);
}

}  // namespace

void SoConfig::Validate() const {
  if (positive_ref.empty() || negative_ref.empty()) {
    throw std::invalid_argument("reference words must be non-empty");
  }
  if (positive_ref == negative_ref) {
    throw std::invalid_argument("positive and negative reference words must differ");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::invalid_argument("log base must be greater than 1");
  }
  if (window == 0) throw std::invalid_argument("window must be at least 1");
}

double Pmi(double p_joint, double p1, double p2, double log_base) {
  auto in_range = [](double p) { return p > 0.0 && p <= 1.0; };
  if (!in_range(p_joint) || !in_range(p1) || !in_range(p2)) {
    throw DomainError("PMI probabilities must lie in (0, 1]");
  }
  if (!(log_base > 1.0)) throw DomainError("PMI log base must exceed 1");
  return LogIn(p_joint / (p1 * p2), log_base);
}

double SoFromCounts(const HitCounts& c, double epsilon, double log_base) {
  const double np = static_cast<double>(c.near_positive) + epsilon;
  const double nn = static_cast<double>(c.near_negative) + epsilon;
  const double tp = static_cast<double>(c.positive_total) + epsilon;
  const double tn = static_cast<double>(c.negative_total) + epsilon;
  return LogIn((np * tn) / (nn * tp), log_base);
}

bool ShouldSkip(const HitCounts& c, uint64_t min_hits) {
  return c.near_positive < min_hits && c.near_negative < min_hits;
}

SoEstimate EstimateSo(const std::string& word1, const std::string& word2,
                      HitBackend& backend, const SoConfig& cfg) {
  SoEstimate est;
  est.counts.near_positive = backend.Hits(HitQuery::Near(
      word1, word2, cfg.positive_ref, cfg.window, cfg.exclusions));
  est.counts.near_negative = backend.Hits(HitQuery::Near(
      word1, word2, cfg.negative_ref, cfg.window, cfg.exclusions));
  est.counts.positive_total =
      backend.Hits(HitQuery::Term(cfg.positive_ref, cfg.exclusions));
  est.counts.negative_total =
      backend.Hits(HitQuery::Term(cfg.negative_ref, cfg.exclusions));
  if (ShouldSkip(est.counts, cfg.min_hits)) return est;
  if (est.counts.positive_total == 0 && est.counts.negative_total == 0) {
    throw DegenerateReference("hits for '" + cfg.positive_ref + "' and '" +
                              cfg.negative_ref + "' are both zero");
  }
  est.value = SoFromCounts(est.counts, cfg.epsilon, cfg.log_base);
  return est;
}

}  // namespace semorient
