#include "semorient/query_cache.h"

#include <charconv>
#include <filesystem>
#include <thread>

#include "semorient/errors.h"

namespace semorient {

QueryCache::QueryCache(const std::string& path) : path_(path) {
  {
    std::ifstream in(path);
    if (in) {
      std::string line;
      size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        size_t tab = line.rfind('\t');
        uint64_t count = 0;
        const char* first = line.data() + (tab == std::string::npos ? 0 : tab + 1);
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, count);
        if (tab == std::string::npos || tab == 0 || ec != std::errc() ||
            ptr != last) {
          throw CacheIoError("corrupt cache line " + std::to_string(line_no) +
                             " in " + path);
        }
        entries_[line.substr(0, tab)] = count;
      }
    } else if (std::filesystem::exists(path)) {
      throw CacheIoError("cannot read cache: " + path);
    }
  }
  log_.open(path, std::ios::app);
  if (!log_) throw CacheIoError("cannot open cache for append: " + path);
}

std::optional<uint64_t> QueryCache::Get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void QueryCache::Put(const std::string& key, uint64_t count) {
  std::lock_guard<std::mutex> lock(mu_);
  AppendLocked(key, count);
  entries_[key] = count;
}

void QueryCache::AppendLocked(const std::string& key, uint64_t count) {
  if (path_.empty()) return;
  log_ << key << '\t' << count << '\n';
  log_.flush();
  if (!log_) throw CacheIoError("failed appending to cache: " + path_);
}

uint64_t QueryCache::GetOrCompute(const std::string& key,
                                  const std::function<uint64_t()>& compute) {
  std::promise<uint64_t> promise;
  {
    std::unique_lock<std::mutex> lock(mu_);
    auto hit = entries_.find(key);
    if (hit != entries_.end()) return hit->second;
    auto pending = in_flight_.find(key);
    if (pending != in_flight_.end()) {
      std::shared_future<uint64_t> wait_for = pending->second;
      lock.unlock();
      return wait_for.get();
    }
    in_flight_.emplace(key, promise.get_future().share());
  }

  uint64_t count = 0;
  try {
    count = compute();
    std::lock_guard<std::mutex> lock(mu_);
    AppendLocked(key, count);
    entries_[key] = count;
    in_flight_.erase(key);
  } catch (...) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      in_flight_.erase(key);
    }
    promise.set_exception(std::current_exception());
    throw;
  }
  promise.set_value(count);
  return count;
}

size_t QueryCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

void QueryCache::Clear() {
  std::lock_guard<std::mutex> lock(mu_);
  entries_.clear();
  if (path_.empty()) return;
  log_.close();
  log_.open(path_, std::ios::trunc | std::ios::out);
  if (!log_) throw CacheIoError("cannot truncate cache: " + path_);
  log_.close();
  log_.open(path_, std::ios::app);
  if (!log_) throw CacheIoError("cannot reopen cache: " + path_);
}

Throttle::Throttle(std::chrono::milliseconds interval, Clock clock, Sleep sleep)
    : interval_(interval), clock_(std::move(clock)), sleep_(std::move(sleep)) {
  if (!clock_) clock_ = [] { return std::chrono::steady_clock::now(); };
  if (!sleep_) {
    sleep_ = [](std::chrono::steady_clock::duration d) {
      std::this_thread::sleep_for(d);
    };
  }
}

void Throttle::WaitLocked() {
  auto now = clock_();
  if (last_ && now < *last_ + interval_) {
    sleep_(*last_ + interval_ - now);
    now = clock_();
  }
  last_ = now;
}

uint64_t CachedHits(QueryCache& cache, HitBackend& backend, Throttle& throttle,
                    const HitQuery& query) {
  return cache.GetOrCompute(query.Canonical(), [&] {
    return throttle.Run([&] { return backend.Hits(query); });
  });
}

}  // namespace semorient
