#include "semorient/phrases.h"

namespace semorient {
namespace {

bool IsVerbForPattern(PosTag t) {
  return t == PosTag::kVB || t == PosTag::kVBD || t == PosTag::kVBN ||
         t == PosTag::kVBG;
}

}  // namespace

std::optional<Pattern> MatchPattern(PosTag tag1, PosTag tag2,
                                    std::optional<PosTag> tag3) {
  const bool third_not_noun = !tag3.has_value() || !IsNoun(*tag3);
  if (tag1 == PosTag::kJJ && IsNoun(tag2)) return Pattern::kAdjectiveNoun;
  if (IsAdverb(tag1) && tag2 == PosTag::kJJ && third_not_noun) {
    return Pattern::kAdverbAdjective;
  }
  if (tag1 == PosTag::kJJ && tag2 == PosTag::kJJ && third_not_noun) {
    return Pattern::kAdjectiveAdjective;
  }
  if (IsNoun(tag1) && tag2 == PosTag::kJJ && third_not_noun) {
    return Pattern::kNounAdjective;
  }
  if (IsAdverb(tag1) && IsVerbForPattern(tag2)) return Pattern::kAdverbVerb;
  return std::nullopt;
}

std::vector<CandidatePhrase> ExtractPhrases(std::span<const TaggedToken> doc) {
  std::vector<CandidatePhrase> phrases;
  for (size_t i = 0; i + 1 < doc.size(); ++i) {
    std::optional<PosTag> third;
    if (i + 2 < doc.size()) third = doc[i + 2].tag;
    auto pattern = MatchPattern(doc[i].tag, doc[i + 1].tag, third);
    if (!pattern) continue;
    phrases.push_back(CandidatePhrase{
        ToLower(doc[i].surface()), ToLower(doc[i + 1].surface()), doc[i].tag,
        doc[i + 1].tag, *pattern, doc[i].position()});
  }
  return phrases;
}

}  // namespace semorient
