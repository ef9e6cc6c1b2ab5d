#include <doctest.h>

#include <random>

#include "semorient/phrases.h"
#include "test_util.h"

namespace semorient {
namespace {

using testing::MakeDoc;
using T = PosTag;

// Independent restatement of the pattern table, row by row.
bool RowHolds(int row, T a, T b, std::optional<T> c) {
  auto in = [](T t, std::initializer_list<T> set) {
    for (T s : set) {
      if (s == t) return true;
    }
    return false;
  };
  const bool c_ok = !c || !in(*c, {T::kNN, T::kNNS});
  switch (row) {
    case 1: return a == T::kJJ && in(b, {T::kNN, T::kNNS});
    case 2: return in(a, {T::kRB, T::kRBR, T::kRBS}) && b == T::kJJ && c_ok;
    case 3: return a == T::kJJ && b == T::kJJ && c_ok;
    case 4: return in(a, {T::kNN, T::kNNS}) && b == T::kJJ && c_ok;
    case 5:
      return in(a, {T::kRB, T::kRBR, T::kRBS}) &&
             in(b, {T::kVB, T::kVBD, T::kVBN, T::kVBG});
  }
  return false;
}

std::vector<CandidatePhrase> BruteForceExtract(
    const std::vector<TaggedToken>& doc) {
  std::vector<CandidatePhrase> out;
  for (size_t i = 0; i + 1 < doc.size(); ++i) {
    std::optional<T> c;
    if (i + 2 < doc.size()) c = doc[i + 2].tag;
    for (int row = 1; row <= 5; ++row) {
      if (!RowHolds(row, doc[i].tag, doc[i + 1].tag, c)) continue;
      out.push_back(CandidatePhrase{ToLower(doc[i].surface()),
                                    ToLower(doc[i + 1].surface()), doc[i].tag,
                                    doc[i + 1].tag, static_cast<Pattern>(row),
                                    static_cast<uint32_t>(i)});
    }
  }
  return out;
}

TEST_CASE("match_pattern rows") {
  CHECK(MatchPattern(T::kJJ, T::kNN, T::kVB) == Pattern::kAdjectiveNoun);
  CHECK(MatchPattern(T::kJJ, T::kNN, std::nullopt) == Pattern::kAdjectiveNoun);
  CHECK_FALSE(MatchPattern(T::kRB, T::kJJ, T::kNN).has_value());
  CHECK(MatchPattern(T::kRBR, T::kJJ, std::nullopt) == Pattern::kAdverbAdjective);
  CHECK(MatchPattern(T::kRB, T::kVBN, T::kNN) == Pattern::kAdverbVerb);
  CHECK(MatchPattern(T::kJJ, T::kJJ, T::kDT) == Pattern::kAdjectiveAdjective);
  CHECK_FALSE(MatchPattern(T::kJJ, T::kJJ, T::kNNS).has_value());
  CHECK(MatchPattern(T::kNNS, T::kJJ, T::kOther) == Pattern::kNounAdjective);
  CHECK_FALSE(MatchPattern(T::kRB, T::kVBZ, std::nullopt).has_value());
  CHECK_FALSE(MatchPattern(T::kNNP, T::kNN, std::nullopt).has_value());
  // A proper noun as third word is not a common noun.
  CHECK(MatchPattern(T::kRB, T::kJJ, T::kNNP) == Pattern::kAdverbAdjective);
}

TEST_CASE("at most one row matches any triple, and match_pattern finds it") {
  std::vector<std::optional<T>> thirds = {std::nullopt};
  for (T t : AllTags()) thirds.push_back(t);
  for (T a : AllTags()) {
    for (T b : AllTags()) {
      for (const auto& c : thirds) {
        int matches = 0;
        int row = 0;
        for (int r = 1; r <= 5; ++r) {
          if (RowHolds(r, a, b, c)) {
            ++matches;
            row = r;
          }
        }
        REQUIRE(matches <= 1);
        auto got = MatchPattern(a, b, c);
        if (matches == 0) {
          CHECK_FALSE(got.has_value());
        } else {
          REQUIRE(got.has_value());
          CHECK(PatternRow(*got) == row);
        }
      }
    }
  }
}

TEST_CASE("extract_phrases examples") {
  auto one = ExtractPhrases(MakeDoc({"low", "fees"}, {T::kJJ, T::kNN}));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == CandidatePhrase{"low", "fees", T::kJJ, T::kNN,
                                  Pattern::kAdjectiveNoun, 0});

  CHECK(ExtractPhrases(MakeDoc({"Bank", "fees"}, {T::kNNP, T::kNN})).empty());

  auto blocked = ExtractPhrases(
      MakeDoc({"very", "good", "movie"}, {T::kRB, T::kJJ, T::kNN}));
  REQUIRE(blocked.size() == 1);
  CHECK(blocked[0] == CandidatePhrase{"good", "movie", T::kJJ, T::kNN,
                                      Pattern::kAdjectiveNoun, 1});

  // Overlapping pairs are both emitted; surfaces are lowercased.
  auto overlap = ExtractPhrases(
      MakeDoc({"Really", "Nice", "big"}, {T::kRB, T::kJJ, T::kJJ}));
  REQUIRE(overlap.size() == 2);
  CHECK(overlap[0].text() == "really nice");
  CHECK(overlap[1].text() == "nice big");
  CHECK(ExtractPhrases({}).empty());
}

TEST_CASE("extract_phrases agrees with brute force on random documents") {
  std::mt19937 rng(42);
  // Bias towards the tags the patterns care about.
  const std::vector<T> pool = {T::kJJ, T::kJJ, T::kNN, T::kNNS, T::kRB,
                               T::kRBR, T::kRBS, T::kVB, T::kVBD, T::kVBN,
                               T::kVBG, T::kVBZ, T::kNNP, T::kNNPS, T::kDT,
                               T::kOther, T::kJJR};
  for (int trial = 0; trial < 2000; ++trial) {
    size_t n = rng() % 15;
    std::vector<std::string> words;
    std::vector<T> tags;
    for (size_t i = 0; i < n; ++i) {
      words.push_back("W" + std::to_string(rng() % 5));
      tags.push_back(pool[rng() % pool.size()]);
    }
    auto doc = MakeDoc(words, tags);
    auto got = ExtractPhrases(doc);
    REQUIRE(got == BruteForceExtract(doc));
    CHECK(got.size() <= (n == 0 ? 0 : n - 1));
    for (size_t i = 0; i < got.size(); ++i) {
      CHECK_FALSE(IsProperNoun(got[i].tag1));
      CHECK_FALSE(IsProperNoun(got[i].tag2));
      if (i > 0) CHECK(got[i - 1].start_position < got[i].start_position);
    }
    CHECK(ExtractPhrases(doc) == got);
  }
}

}  // namespace
}  // namespace semorient
