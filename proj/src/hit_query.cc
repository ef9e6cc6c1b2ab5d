#include "semorient/hit_query.h"

#include <charconv>
#include <vector>

#include "semorient/errors.h"

namespace semorient {
namespace {

void CheckWord(const std::string& word) {
  if (word.empty()) throw InvalidQuery("empty query word");
  for (char c : word) {
    if ((c >= 'A' && c <= 'Z') || c == ' ' || c == '\t' || c == '\n' ||
        c == '\r' || c == '|' || c == ',') {
      throw InvalidQuery("query word must be lowercase without separators: '" +
                         word + "'");
    }
  }
}

void CheckExclusions(const std::set<std::string>& exclusions) {
  for (const std::string& source : exclusions) {
    if (source.empty() || source.find_first_of("|,\t\n") != std::string::npos) {
      throw InvalidQuery("bad exclusion label: '" + source + "'");
    }
  }
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

HitQuery HitQuery::Term(std::string word, std::set<std::string> exclusions) {
  CheckWord(word);
  CheckExclusions(exclusions);
  return HitQuery(TermQuery{std::move(word)}, std::move(exclusions));
}

HitQuery HitQuery::Near(std::string word1, std::string word2, std::string term,
                        uint32_t window, std::set<std::string> exclusions) {
  CheckWord(word1);
  CheckWord(word2);
  CheckWord(term);
  CheckExclusions(exclusions);
  if (window == 0) throw InvalidQuery("NEAR window must be at least 1");
  return HitQuery(NearQuery{std::move(word1), std::move(word2), std::move(term),
                            window},
                  std::move(exclusions));
}

std::string HitQuery::Canonical() const {
  std::string key;
  if (is_term()) {
    key = "term|" + term().word + "|";
  } else {
    const NearQuery& n = near();
    key = "near|" + n.word1 + " " + n.word2 + "|" + n.term + "|" +
          std::to_string(n.window) + "|";
  }
  bool first = true;
  for (const std::string& source : exclusions_) {
    if (!first) key += ',';
    key += source;
    first = false;
  }
  return key;
}

HitQuery HitQuery::FromCanonical(const std::string& key) {
  std::vector<std::string> fields = Split(key, '|');
  auto exclusions_of = [](const std::string& field) {
    std::set<std::string> out;
    if (field.empty()) return out;
    for (std::string& s : Split(field, ',')) out.insert(std::move(s));
    return out;
  };
  if (fields.size() == 3 && fields[0] == "term") {
    return Term(fields[1], exclusions_of(fields[2]));
  }
  if (fields.size() == 5 && fields[0] == "near") {
    size_t space = fields[1].find(' ');
    if (space == std::string::npos) {
      throw InvalidQuery("NEAR phrase needs two words: " + key);
    }
    uint32_t window = 0;
    const std::string& w = fields[3];
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), window);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
      throw InvalidQuery("bad NEAR window: " + key);
    }
    return Near(fields[1].substr(0, space), fields[1].substr(space + 1),
                fields[2], window, exclusions_of(fields[4]));
  }
  throw InvalidQuery("unrecognized canonical query: " + key);
}

}  // namespace semorient
