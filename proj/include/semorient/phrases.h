#ifndef SEMORIENT_PHRASES_H_
#define SEMORIENT_PHRASES_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semorient/pos_tag.h"
#include "semorient/tagging.h"

namespace semorient {

// The five two-word extraction patterns. The numeric value is the row number
// used in reports.
//
//   row  first word       second word            third word (not extracted)
//   1    JJ               NN, NNS                anything
//   2    RB, RBR, RBS     JJ                     not NN nor NNS
//   3    JJ               JJ                     not NN nor NNS
//   4    NN, NNS          JJ                     not NN nor NNS
//   5    RB, RBR, RBS     VB, VBD, VBN, VBG      anything
enum class Pattern : uint8_t {
  kAdjectiveNoun = 1,
  kAdverbAdjective = 2,
  kAdjectiveAdjective = 3,
  kNounAdjective = 4,
  kAdverbVerb = 5,
};

inline int PatternRow(Pattern p) { return static_cast<int>(p); }

struct CandidatePhrase {
  std::string word1;  // lowercased
  std::string word2;  // lowercased
  PosTag tag1 = PosTag::kOther;
  PosTag tag2 = PosTag::kOther;
  Pattern pattern = Pattern::kAdjectiveNoun;
  uint32_t start_position = 0;

  std::string text() const { return word1 + " " + word2; }

  bool operator==(const CandidatePhrase&) const = default;
};

// Returns the row matched by (tag1, tag2) with lookahead `tag3`. An absent
// third tag (pair ends the document) counts as "not NN nor NNS".
std::optional<Pattern> MatchPattern(PosTag tag1, PosTag tag2,
                                    std::optional<PosTag> tag3);

// Every adjacent pair matching a pattern, overlapping pairs included, in
// position order.
std::vector<CandidatePhrase> ExtractPhrases(std::span<const TaggedToken> doc);

}  // namespace semorient

#endif  // SEMORIENT_PHRASES_H_
