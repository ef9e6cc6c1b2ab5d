#ifndef SEMORIENT_QUERY_CACHE_H_
#define SEMORIENT_QUERY_CACHE_H_

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "semorient/hit_backend.h"
#include "semorient/hit_query.h"

namespace semorient {

// Canonical query string -> hit count, optionally persisted to an
// append-only text file of "key<TAB>count" lines (later lines win).
class QueryCache {
 public:
  // In-memory only.
  QueryCache() = default;

  // Loads `path` if it exists and appends new entries to it. Throws
  // CacheIoError when the file cannot be opened or holds a corrupt line.
  explicit QueryCache(const std::string& path);

  QueryCache(const QueryCache&) = delete;
  QueryCache& operator=(const QueryCache&) = delete;

  std::optional<uint64_t> Get(const std::string& key) const;
  // Throws CacheIoError if the entry cannot be appended.
  void Put(const std::string& key, uint64_t count);

  // Returns the cached count for `key`, or runs `compute` once and stores
  // its result. Concurrent callers of the same key wait for the single
  // in-flight computation. If `compute` throws, nothing is stored and every
  // waiter sees the exception.
  uint64_t GetOrCompute(const std::string& key,
                        const std::function<uint64_t()>& compute);

  size_t size() const;
  // Drops every entry and truncates the backing file.
  void Clear();

  const std::string& path() const { return path_; }

 private:
  void AppendLocked(const std::string& key, uint64_t count);

  std::string path_;
  std::ofstream log_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, uint64_t> entries_;
  std::unordered_map<std::string, std::shared_future<uint64_t>> in_flight_;
};

// Serializes calls and keeps at least `interval` between their starts.
// Clock and sleep are injectable for tests.
class Throttle {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;
  using Sleep = std::function<void(std::chrono::steady_clock::duration)>;

  explicit Throttle(std::chrono::milliseconds interval, Clock clock = {},
                    Sleep sleep = {});

  template <typename F>
  auto Run(F&& f) -> decltype(f()) {
    if (interval_.count() == 0) return f();
    std::lock_guard<std::mutex> lock(mu_);
    WaitLocked();
    return f();
  }

  std::chrono::milliseconds interval() const { return interval_; }

 private:
  void WaitLocked();

  std::chrono::milliseconds interval_;
  Clock clock_;
  Sleep sleep_;
  std::mutex mu_;
  std::optional<std::chrono::steady_clock::time_point> last_;
};

// Memoized lookup: cached count when present, otherwise one throttled
// backend call whose result is stored. Backend errors propagate and leave
// the cache untouched.
uint64_t CachedHits(QueryCache& cache, HitBackend& backend, Throttle& throttle,
                    const HitQuery& query);

// HitBackend adapter applying CachedHits with the wrapped backend's declared
// interval.
class CachingBackend : public HitBackend {
 public:
  CachingBackend(QueryCache& cache, HitBackend& inner,
                 Throttle::Clock clock = {}, Throttle::Sleep sleep = {})
      : cache_(cache),
        inner_(inner),
        throttle_(inner.MinQueryInterval(), std::move(clock),
                  std::move(sleep)) {}

  uint64_t Hits(const HitQuery& query) override {
    return CachedHits(cache_, inner_, throttle_, query);
  }

 private:
  QueryCache& cache_;
  HitBackend& inner_;
  Throttle throttle_;
};

}  // namespace semorient

#endif  // SEMORIENT_QUERY_CACHE_H_
