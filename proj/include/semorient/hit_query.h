#ifndef SEMORIENT_HIT_QUERY_H_
#define SEMORIENT_HIT_QUERY_H_

#include <cstdint>
#include <set>
#include <string>
#include <variant>

namespace semorient {

inline constexpr uint32_t kDefaultNearWindow = 10;

struct TermQuery {
  std::string word;

  bool operator==(const TermQuery&) const = default;
};

// Documents holding the adjacent pair (word1 word2) within `window` words of
// `term`, in either order.
struct NearQuery {
  std::string word1;
  std::string word2;
  std::string term;
  uint32_t window = kDefaultNearWindow;

  bool operator==(const NearQuery&) const = default;
};

// A hit-count query plus the source labels whose documents never count.
class HitQuery {
 public:
  // Both factories throw InvalidQuery on empty or non-lowercase words,
  // words containing whitespace or '|', or a zero window.
  static HitQuery Term(std::string word, std::set<std::string> exclusions = {});
  static HitQuery Near(std::string word1, std::string word2, std::string term,
                       uint32_t window = kDefaultNearWindow,
                       std::set<std::string> exclusions = {});

  // Inverse of Canonical(). Throws InvalidQuery.
  static HitQuery FromCanonical(const std::string& key);

  bool is_term() const { return std::holds_alternative<TermQuery>(body_); }
  const TermQuery& term() const { return std::get<TermQuery>(body_); }
  const NearQuery& near() const { return std::get<NearQuery>(body_); }
  const std::set<std::string>& exclusions() const { return exclusions_; }

  // "term|word|a,b" or "near|w1 w2|term|window|a,b" with sorted exclusions.
  std::string Canonical() const;

  bool operator==(const HitQuery&) const = default;

 private:
  HitQuery(std::variant<TermQuery, NearQuery> body,
           std::set<std::string> exclusions)
      : body_(std::move(body)), exclusions_(std::move(exclusions)) {}

  std::variant<TermQuery, NearQuery> body_;
  std::set<std::string> exclusions_;
};

}  // namespace semorient

#endif  // SEMORIENT_HIT_QUERY_H_
