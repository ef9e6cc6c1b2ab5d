#include "semorient/hit_index.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

#include "semorient/errors.h"
#include "semorient/tagging.h"

namespace semorient {
namespace {

// Upper bound on any length field read back from an index file; guards
// allocations against corrupt input.
constexpr uint32_t kMaxCount = 1u << 30;

void PutU32(std::ostream& out, uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
               static_cast<char>((v >> 16) & 0xff),
               static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void PutString(std::ostream& out, const std::string& s) {
  PutU32(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

uint32_t GetU32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw IndexFormatError("truncated index file");
  }
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) |
         (static_cast<uint32_t>(b[3]) << 24);
}

uint32_t GetCount(std::istream& in) {
  uint32_t n = GetU32(in);
  if (n > kMaxCount) throw IndexFormatError("implausible length field");
  return n;
}

std::string GetString(std::istream& in) {
  std::string s(GetCount(in), '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(s.size()))) {
    throw IndexFormatError("truncated index file");
  }
  return s;
}

bool NearMatchInDocument(std::span<const std::string> words,
                         const NearQuery& q) {
  for (size_t p = 0; p + 1 < words.size(); ++p) {
    if (words[p] != q.word1 || words[p + 1] != q.word2) continue;
    for (size_t t = 0; t < words.size(); ++t) {
      if (words[t] != q.term) continue;
      long long dt = static_cast<long long>(t);
      long long dp = static_cast<long long>(p);
      long long distance = std::min(std::llabs(dt - dp), std::llabs(dt - dp - 1));
      if (distance <= q.window) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<CorpusDocument> ParseCorpus(std::istream& in) {
  std::vector<CorpusDocument> docs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!j.is_object() || !j.contains("id") || !j["id"].is_string() ||
        !j.contains("text") || !j["text"].is_string()) {
      throw FormatError("corpus line needs string fields \"id\" and \"text\"",
                        line_no);
    }
    CorpusDocument doc;
    doc.id = j["id"].get<std::string>();
    if (j.contains("source")) {
      if (!j["source"].is_string()) {
        throw FormatError("\"source\" must be a string", line_no);
      }
      doc.source = j["source"].get<std::string>();
    }
    for (Token& t : Tokenize(j["text"].get<std::string>())) {
      if (t.surface.size() == 1 && IsSentencePunct(t.surface[0])) continue;
      doc.words.push_back(ToLower(t.surface));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<CorpusDocument> LoadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus: " + path);
  return ParseCorpus(in);
}

HitIndex HitIndex::Build(std::span<const CorpusDocument> docs) {
  HitIndex index;
  std::unordered_set<std::string> seen;
  std::map<std::string, uint32_t> source_ids;
  // Sources are numbered in first-seen order so rebuilds are identical.
  for (const CorpusDocument& doc : docs) {
    if (!seen.insert(doc.id).second) {
      throw DuplicateDocId("duplicate document id: " + doc.id);
    }
    auto [it, inserted] = source_ids.try_emplace(
        doc.source, static_cast<uint32_t>(index.sources_.size()));
    if (inserted) index.sources_.push_back(doc.source);
    const uint32_t doc_no = static_cast<uint32_t>(index.doc_ids_.size());
    index.doc_ids_.push_back(doc.id);
    index.doc_sources_.push_back(it->second);
    for (uint32_t pos = 0; pos < doc.words.size(); ++pos) {
      std::vector<Posting>& list = index.postings_[doc.words[pos]];
      if (list.empty() || list.back().doc != doc_no) {
        list.push_back(Posting{doc_no, {}});
      }
      list.back().positions.push_back(pos);
    }
  }
  return index;
}

const std::vector<HitIndex::Posting>* HitIndex::PostingsFor(
    const std::string& word) const {
  auto it = postings_.find(word);
  return it == postings_.end() ? nullptr : &it->second;
}

std::vector<bool> HitIndex::ExcludedSources(
    const std::set<std::string>& labels) const {
  std::vector<bool> excluded(sources_.size(), false);
  for (size_t i = 0; i < sources_.size(); ++i) {
    excluded[i] = labels.count(sources_[i]) > 0;
  }
  return excluded;
}

uint64_t HitIndex::Hits(const HitQuery& query) const {
  std::vector<bool> excluded = ExcludedSources(query.exclusions());
  return query.is_term() ? TermHits(query.term(), excluded)
                         : NearHits(query.near(), excluded);
}

uint64_t HitIndex::TermHits(const TermQuery& q,
                            const std::vector<bool>& excluded) const {
  const std::vector<Posting>* list = PostingsFor(q.word);
  if (list == nullptr) return 0;
  uint64_t count = 0;
  for (const Posting& p : *list) {
    if (!excluded[doc_sources_[p.doc]]) ++count;
  }
  return count;
}

uint64_t HitIndex::NearHits(const NearQuery& q,
                            const std::vector<bool>& excluded) const {
  const std::vector<Posting>* first = PostingsFor(q.word1);
  const std::vector<Posting>* second = PostingsFor(q.word2);
  const std::vector<Posting>* term = PostingsFor(q.term);
  if (first == nullptr || second == nullptr || term == nullptr) return 0;

  uint64_t count = 0;
  auto second_it = second->begin();
  auto term_it = term->begin();
  for (const Posting& a : *first) {
    if (excluded[doc_sources_[a.doc]]) continue;
    while (second_it != second->end() && second_it->doc < a.doc) ++second_it;
    while (term_it != term->end() && term_it->doc < a.doc) ++term_it;
    if (second_it == second->end() || term_it == term->end()) break;
    if (second_it->doc != a.doc || term_it->doc != a.doc) continue;

    const std::vector<uint32_t>& next = second_it->positions;
    const std::vector<uint32_t>& targets = term_it->positions;
    auto next_it = next.begin();
    bool matched = false;
    for (uint32_t p : a.positions) {
      next_it = std::lower_bound(next_it, next.end(), p + 1);
      if (next_it == next.end()) break;
      if (*next_it != p + 1) continue;
      // Any term position in [p - window, p + 1 + window] is within `window`
      // of one of the two phrase tokens.
      uint32_t lo = p >= q.window ? p - q.window : 0;
      auto t = std::lower_bound(targets.begin(), targets.end(), lo);
      if (t != targets.end() &&
          static_cast<uint64_t>(*t) <= static_cast<uint64_t>(p) + 1 + q.window) {
        matched = true;
        break;
      }
    }
    if (matched) ++count;
  }
  return count;
}

void HitIndex::Save(std::ostream& out) const {
  out.write(kMagic, 4);
  PutU32(out, kFormatVersion);
  PutU32(out, static_cast<uint32_t>(sources_.size()));
  for (const std::string& s : sources_) PutString(out, s);
  PutU32(out, static_cast<uint32_t>(doc_ids_.size()));
  for (size_t i = 0; i < doc_ids_.size(); ++i) {
    PutString(out, doc_ids_[i]);
    PutU32(out, doc_sources_[i]);
  }
  std::vector<const std::string*> words;
  words.reserve(postings_.size());
  for (const auto& [word, list] : postings_) words.push_back(&word);
  std::sort(words.begin(), words.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  PutU32(out, static_cast<uint32_t>(words.size()));
  for (const std::string* word : words) {
    PutString(out, *word);
    const std::vector<Posting>& list = postings_.at(*word);
    PutU32(out, static_cast<uint32_t>(list.size()));
    for (const Posting& p : list) {
      PutU32(out, p.doc);
      PutU32(out, static_cast<uint32_t>(p.positions.size()));
      for (uint32_t pos : p.positions) PutU32(out, pos);
    }
  }
  if (!out) throw IoError("failed writing index");
}

void HitIndex::SaveFile(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write index: " + path);
  Save(out);
  out.flush();
  if (!out) throw IoError("failed writing index: " + path);
}

HitIndex HitIndex::Load(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
    throw IndexFormatError("not an index file (bad magic)");
  }
  uint32_t version = GetU32(in);
  if (version != kFormatVersion) {
    throw IndexFormatError("unsupported index format version " +
                           std::to_string(version));
  }
  HitIndex index;
  uint32_t n_sources = GetCount(in);
  for (uint32_t i = 0; i < n_sources; ++i) index.sources_.push_back(GetString(in));
  uint32_t n_docs = GetCount(in);
  for (uint32_t i = 0; i < n_docs; ++i) {
    index.doc_ids_.push_back(GetString(in));
    uint32_t source = GetU32(in);
    if (source >= n_sources) throw IndexFormatError("document source out of range");
    index.doc_sources_.push_back(source);
  }
  uint32_t n_words = GetCount(in);
  for (uint32_t w = 0; w < n_words; ++w) {
    std::string word = GetString(in);
    std::vector<Posting>& list = index.postings_[word];
    uint32_t n_postings = GetCount(in);
    for (uint32_t i = 0; i < n_postings; ++i) {
      Posting p;
      p.doc = GetU32(in);
      if (p.doc >= n_docs || (!list.empty() && list.back().doc >= p.doc)) {
        throw IndexFormatError("posting list out of order for '" + word + "'");
      }
      uint32_t n_pos = GetCount(in);
      for (uint32_t k = 0; k < n_pos; ++k) {
        uint32_t pos = GetU32(in);
        if (!p.positions.empty() && p.positions.back() >= pos) {
          throw IndexFormatError("positions out of order for '" + word + "'");
        }
        p.positions.push_back(pos);
      }
      list.push_back(std::move(p));
    }
  }
  return index;
}

HitIndex HitIndex::LoadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index: " + path);
  return Load(in);
}

uint64_t HitsOracle(std::span<const CorpusDocument> docs,
                    const HitQuery& query) {
  uint64_t count = 0;
  for (const CorpusDocument& doc : docs) {
    if (query.exclusions().count(doc.source) > 0) continue;
    bool match;
    if (query.is_term()) {
      match = std::find(doc.words.begin(), doc.words.end(), query.term().word) !=
              doc.words.end();
    } else {
      match = NearMatchInDocument(doc.words, query.near());
    }
    if (match) ++count;
  }
  return count;
}

}  // namespace semorient
