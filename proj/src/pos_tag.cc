#include "semorient/pos_tag.h"

#include <array>

namespace semorient {
namespace {

constexpr std::array<PosTag, 37> kAllTags = {
    PosTag::kCC,  PosTag::kCD,   PosTag::kDT,   PosTag::kEX,   PosTag::kFW,
    PosTag::kIN,  PosTag::kJJ,   PosTag::kJJR,  PosTag::kJJS,  PosTag::kLS,
    PosTag::kMD,  PosTag::kNN,   PosTag::kNNS,  PosTag::kNNP,  PosTag::kNNPS,
    PosTag::kPDT, PosTag::kPOS,  PosTag::kPRP,  PosTag::kPRPS, PosTag::kRB,
    PosTag::kRBR, PosTag::kRBS,  PosTag::kRP,   PosTag::kSYM,  PosTag::kTO,
    PosTag::kUH,  PosTag::kVB,   PosTag::kVBD,  PosTag::kVBG,  PosTag::kVBN,
    PosTag::kVBP, PosTag::kVBZ,  PosTag::kWDT,  PosTag::kWP,   PosTag::kWPS,
    PosTag::kWRB, PosTag::kOther,
};

constexpr std::array<std::string_view, 37> kNames = {
    "CC",  "CD",  "DT",  "EX",   "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",
    "MD",  "NN",  "NNS", "NNP",  "NNPS", "PDT", "POS", "PRP", "PRP$", "RB",
    "RBR", "RBS", "RP",  "SYM",  "TO",  "UH",  "VB",  "VBD", "VBG", "VBN",
    "VBP", "VBZ", "WDT", "WP",   "WP$", "WRB", "OTHER",
};

}  // namespace

std::string_view TagName(PosTag tag) {
  return kNames[static_cast<size_t>(tag)];
}

PosTag ParseTag(std::string_view name) {
  for (size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllTags[i];
  }
  return PosTag::kOther;
}

std::span<const PosTag> AllTags() { return kAllTags; }

}  // namespace semorient
