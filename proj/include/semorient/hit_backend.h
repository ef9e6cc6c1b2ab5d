#ifndef SEMORIENT_HIT_BACKEND_H_
#define SEMORIENT_HIT_BACKEND_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "semorient/hit_index.h"
#include "semorient/hit_query.h"

namespace semorient {

// Courtesy delay a remote search backend declares between queries.
inline constexpr std::chrono::milliseconds kRemoteQueryInterval{5000};

// Anything that can answer hit-count queries. Implementations must be safe
// to call from several threads.
class HitBackend {
 public:
  virtual ~HitBackend() = default;

  // Throws BackendUnavailable when the query cannot be answered.
  virtual uint64_t Hits(const HitQuery& query) = 0;

  // Minimum spacing between consecutive calls to Hits(). Local backends
  // return zero; remote ones should return kRemoteQueryInterval or more.
  virtual std::chrono::milliseconds MinQueryInterval() const {
    return std::chrono::milliseconds::zero();
  }
};

class IndexBackend : public HitBackend {
 public:
  explicit IndexBackend(std::shared_ptr<const HitIndex> index)
      : index_(std::move(index)) {}

  uint64_t Hits(const HitQuery& query) override { return index_->Hits(query); }

 private:
  std::shared_ptr<const HitIndex> index_;
};

// Answers by linear scan over the documents.
class ScanBackend : public HitBackend {
 public:
  explicit ScanBackend(std::vector<CorpusDocument> docs)
      : docs_(std::move(docs)) {}

  uint64_t Hits(const HitQuery& query) override {
    return HitsOracle(docs_, query);
  }

 private:
  std::vector<CorpusDocument> docs_;
};

// Replays recorded counts keyed by canonical query string. Unknown queries
// raise BackendUnavailable.
class FixtureBackend : public HitBackend {
 public:
  FixtureBackend() = default;
  explicit FixtureBackend(std::map<std::string, uint64_t> counts)
      : counts_(std::move(counts)) {}

  // JSON object {"<canonical query>": count, ...}. Throws IoError or
  // FormatError.
  static FixtureBackend LoadFile(const std::string& path);
  static FixtureBackend Parse(const std::string& json_text);

  void Set(const HitQuery& query, uint64_t count) {
    counts_[query.Canonical()] = count;
  }
  uint64_t Hits(const HitQuery& query) override;

 private:
  std::map<std::string, uint64_t> counts_;
};

// Pass-through that counts the calls reaching the wrapped backend.
class CountingBackend : public HitBackend {
 public:
  explicit CountingBackend(HitBackend& inner) : inner_(inner) {}

  uint64_t Hits(const HitQuery& query) override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.Hits(query);
  }
  std::chrono::milliseconds MinQueryInterval() const override {
    return inner_.MinQueryInterval();
  }
  uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  HitBackend& inner_;
  std::atomic<uint64_t> calls_{0};
};

}  // namespace semorient

#endif  // SEMORIENT_HIT_BACKEND_H_
