#ifndef SEMORIENT_POS_TAG_H_
#define SEMORIENT_POS_TAG_H_

#include <cstdint>
#include <span>
#include <string_view>

namespace semorient {

// Penn Treebank part-of-speech tags. Anything outside the Treebank word-class
// inventory (punctuation, unknown labels) collapses to kOther.
enum class PosTag : uint8_t {
  kCC, kCD, kDT, kEX, kFW, kIN,
  kJJ, kJJR, kJJS,
  kLS, kMD,
  kNN, kNNS, kNNP, kNNPS,
  kPDT, kPOS, kPRP, kPRPS,
  kRB, kRBR, kRBS, kRP,
  kSYM, kTO, kUH,
  kVB, kVBD, kVBG, kVBN, kVBP, kVBZ,
  kWDT, kWP, kWPS, kWRB,
  kOther,
};

// Canonical Treebank spelling ("JJ", "PRP$", ...); kOther renders as "OTHER".
std::string_view TagName(PosTag tag);

// Inverse of TagName. Unknown strings map to kOther.
PosTag ParseTag(std::string_view name);

// Every tag value, in enum order.
std::span<const PosTag> AllTags();

inline bool IsNoun(PosTag t) { return t == PosTag::kNN || t == PosTag::kNNS; }
inline bool IsProperNoun(PosTag t) {
  return t == PosTag::kNNP || t == PosTag::kNNPS;
}
inline bool IsAdverb(PosTag t) {
  return t == PosTag::kRB || t == PosTag::kRBR || t == PosTag::kRBS;
}

}  // namespace semorient

#endif  // SEMORIENT_POS_TAG_H_
