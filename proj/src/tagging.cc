#include "semorient/tagging.h"

#include <cctype>
#include <fstream>
#include <sstream>

#include "semorient/errors.h"

namespace semorient {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsAllPunct(std::string_view s) {
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)) ||
        static_cast<unsigned char>(c) >= 0x80) {
      return false;
    }
  }
  return !s.empty();
}

bool IsNumber(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',' && c != '-' && c != '$' && c != '%') {
      return false;
    }
  }
  return digit;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool LexiconHas(const Lexicon& lexicon, std::string_view word, PosTag tag) {
  auto found = lexicon.Lookup(word);
  return found.has_value() && *found == tag;
}

// "-er" comparative of an adjective already in the lexicon: tall-er,
// nice-r, bigg-er, happi-er.
bool IsComparativeOfKnownAdjective(const Lexicon& lexicon,
                                   std::string_view w) {
  if (!EndsWith(w, "er") || w.size() < 5) return false;
  std::string_view base = w.substr(0, w.size() - 2);
  if (LexiconHas(lexicon, base, PosTag::kJJ)) return true;
  if (LexiconHas(lexicon, w.substr(0, w.size() - 1), PosTag::kJJ)) return true;
  if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2] &&
      LexiconHas(lexicon, base.substr(0, base.size() - 1), PosTag::kJJ)) {
    return true;
  }
  if (base.back() == 'i') {
    std::string y(base.substr(0, base.size() - 1));
    y += 'y';
    if (LexiconHas(lexicon, y, PosTag::kJJ)) return true;
  }
  return false;
}

bool IsPluralOfKnownNoun(const Lexicon& lexicon, std::string_view w) {
  if (w.size() < 3 || w.back() != 's') return false;
  if (LexiconHas(lexicon, w.substr(0, w.size() - 1), PosTag::kNN)) return true;
  if (EndsWith(w, "es") &&
      LexiconHas(lexicon, w.substr(0, w.size() - 2), PosTag::kNN)) {
    return true;
  }
  if (EndsWith(w, "ies") && w.size() > 4) {
    std::string y(w.substr(0, w.size() - 3));
    y += 'y';
    if (LexiconHas(lexicon, y, PosTag::kNN)) return true;
  }
  return false;
}

std::optional<PosTag> SuffixTag(const Lexicon& lexicon, std::string_view w) {
  // Length guards keep short words ("fly", "red", "best") from being read
  // as bare suffixes.
  if (EndsWith(w, "ly") && w.size() >= 5) return PosTag::kRB;
  if (EndsWith(w, "ing") && w.size() >= 6) return PosTag::kVBG;
  if (EndsWith(w, "ed") && w.size() >= 5) return PosTag::kVBN;
  if (EndsWith(w, "est") && w.size() >= 6) return PosTag::kJJS;
  if (IsComparativeOfKnownAdjective(lexicon, w)) return PosTag::kJJR;
  if (IsPluralOfKnownNoun(lexicon, w)) return PosTag::kNNS;
  return std::nullopt;
}

bool IsSentenceStart(std::span<const Token> tokens, size_t i) {
  if (i == 0) return true;
  const std::string& prev = tokens[i - 1].surface;
  return prev == "." || prev == "!" || prev == "?";
}

}  // namespace

bool IsSentencePunct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '(': case ')':
      return true;
    default:
      return false;
  }
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  auto push = [&tokens](std::string_view s) {
    tokens.push_back(Token{std::string(s), static_cast<uint32_t>(tokens.size())});
  };
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t end = i;
    while (end < text.size() && !IsSpace(text[end])) ++end;
    if (end == i) break;
    std::string_view chunk = text.substr(i, end - i);
    i = end;

    size_t lead = 0;
    while (lead < chunk.size() && IsSentencePunct(chunk[lead])) ++lead;
    size_t trail = chunk.size();
    while (trail > lead && IsSentencePunct(chunk[trail - 1])) --trail;

    for (size_t k = 0; k < lead; ++k) push(chunk.substr(k, 1));
    if (trail > lead) push(chunk.substr(lead, trail - lead));
    for (size_t k = trail; k < chunk.size(); ++k) push(chunk.substr(k, 1));
  }
  return tokens;
}

Lexicon Lexicon::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

Lexicon Lexicon::Parse(std::string_view contents) {
  Lexicon lexicon;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= contents.size()) {
    size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) nl = contents.size();
    std::string_view line = contents.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
      throw FormatError("lexicon entry must be surface<TAB>TAG", line_no);
    }
    lexicon.Add(ToLower(line.substr(0, tab)), ParseTag(line.substr(tab + 1)));
  }
  return lexicon;
}

void Lexicon::Add(std::string surface, PosTag tag) {
  entries_.insert_or_assign(std::move(surface), tag);
}

std::optional<PosTag> Lexicon::Lookup(std::string_view lower) const {
  auto it = entries_.find(std::string(lower));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<TaggedToken> TagBaseline(std::span<const Token> tokens,
                                     const Lexicon& lexicon) {
  std::vector<TaggedToken> tagged;
  tagged.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& surface = tokens[i].surface;
    PosTag tag = PosTag::kNN;
    if (IsAllPunct(surface)) {
      tag = PosTag::kOther;
    } else if (IsNumber(surface)) {
      tag = PosTag::kCD;
    } else {
      std::string lower = ToLower(surface);
      if (auto known = lexicon.Lookup(lower)) {
        tag = *known;
      } else if (auto by_suffix = SuffixTag(lexicon, lower)) {
        tag = *by_suffix;
      } else if (surface[0] >= 'A' && surface[0] <= 'Z' &&
                 !IsSentenceStart(tokens, i)) {
        tag = PosTag::kNNP;
      }
    }
    tagged.push_back(TaggedToken{tokens[i], tag});
  }
  return tagged;
}

std::vector<TaggedToken> ParsePretagged(std::string_view line) {
  std::vector<TaggedToken> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    size_t end = i;
    while (end < line.size() && !IsSpace(line[end])) ++end;
    if (end == i) break;
    std::string_view item = line.substr(i, end - i);
    i = end;
    size_t slash = item.rfind('/');
    if (slash == std::string_view::npos) {
      throw MalformedPretagged("item without '/': " + std::string(item));
    }
    if (slash == 0 || slash + 1 == item.size()) {
      throw MalformedPretagged("empty surface or tag: " + std::string(item));
    }
    out.push_back(TaggedToken{
        Token{std::string(item.substr(0, slash)),
              static_cast<uint32_t>(out.size())},
        ParseTag(item.substr(slash + 1))});
  }
  return out;
}

std::string RenderPretagged(std::span<const TaggedToken> tokens) {
  std::string out;
  for (const TaggedToken& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.surface();
    out += '/';
    out += TagName(t.tag);
  }
  return out;
}

}  // namespace semorient
