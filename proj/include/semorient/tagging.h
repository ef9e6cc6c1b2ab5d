#ifndef SEMORIENT_TAGGING_H_
#define SEMORIENT_TAGGING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semorient/pos_tag.h"

namespace semorient {

// A whitespace-free surface word and its zero-based index in the document.
struct Token {
  std::string surface;
  uint32_t position = 0;

  bool operator==(const Token&) const = default;
};

struct TaggedToken {
  Token token;
  PosTag tag = PosTag::kOther;

  const std::string& surface() const { return token.surface; }
  uint32_t position() const { return token.position; }

  bool operator==(const TaggedToken&) const = default;
};

// Splits on whitespace. Sentence punctuation (. , ! ? ; : " ( ) ) at either
// end of a chunk is peeled off into one-character tokens of its own.
std::vector<Token> Tokenize(std::string_view text);

// True for the punctuation characters Tokenize peels off.
bool IsSentencePunct(char c);

// ASCII lowercase; bytes >= 0x80 pass through untouched.
std::string ToLower(std::string_view s);

// Lowercase surface -> tag. Loaded from "surface<TAB>TAG" lines.
class Lexicon {
 public:
  Lexicon() = default;

  // Blank lines and lines starting with '#' are ignored. Throws IoError when
  // the file cannot be read and FormatError on a line without a tab.
  static Lexicon Load(const std::string& path);
  static Lexicon Parse(std::string_view contents);

  void Add(std::string surface, PosTag tag);
  std::optional<PosTag> Lookup(std::string_view lower) const;
  size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PosTag> entries_;
};

// Deterministic lexicon + suffix tagger. Per token, first rule that fires:
//   punctuation -> OTHER, digits -> CD,
//   lexicon lookup of the lowercased surface,
//   suffixes: -ly RB, -ing VBG, -ed VBN, -est JJS, -er JJR (adjective stem),
//             -s/-es NNS (noun stem),
//   capitalized and not sentence-initial -> NNP,
//   NN.
std::vector<TaggedToken> TagBaseline(std::span<const Token> tokens,
                                     const Lexicon& lexicon);

// Parses "surface/TAG surface/TAG ...", splitting each item on its last '/'.
// Throws MalformedPretagged for items without '/' or with an empty side.
std::vector<TaggedToken> ParsePretagged(std::string_view line);

// Inverse of ParsePretagged.
std::string RenderPretagged(std::span<const TaggedToken> tokens);

}  // namespace semorient

#endif  // SEMORIENT_TAGGING_H_
