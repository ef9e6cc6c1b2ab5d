#ifndef SEMORIENT_HIT_INDEX_H_
#define SEMORIENT_HIT_INDEX_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "semorient/hit_query.h"

namespace semorient {

// Local stand-in for a web page: a labeled, lowercased word sequence.
struct CorpusDocument {
  std::string id;
  std::string source;
  std::vector<std::string> words;
};

// Reads JSON Lines {"id", "source", "text"}; text is tokenized and
// lowercased, and punctuation tokens are dropped. Throws IoError or
// FormatError (with line number).
std::vector<CorpusDocument> LoadCorpus(const std::string& path);
std::vector<CorpusDocument> ParseCorpus(std::istream& in);

// Positional inverted index answering document-level hit counts.
// Immutable once built, so concurrent Hits() calls are safe.
class HitIndex {
 public:
  static constexpr char kMagic[4] = {'S', 'O', 'H', 'X'};
  static constexpr uint32_t kFormatVersion = 1;

  struct Posting {
    uint32_t doc = 0;
    std::vector<uint32_t> positions;  // strictly increasing

    bool operator==(const Posting&) const = default;
  };

  HitIndex() = default;

  // Throws DuplicateDocId.
  static HitIndex Build(std::span<const CorpusDocument> docs);

  // Number of non-excluded documents matching `query`.
  uint64_t Hits(const HitQuery& query) const;

  size_t document_count() const { return doc_ids_.size(); }
  size_t vocabulary_size() const { return postings_.size(); }
  const std::vector<Posting>* PostingsFor(const std::string& word) const;
  const std::string& DocumentId(uint32_t doc) const { return doc_ids_[doc]; }
  const std::string& DocumentSource(uint32_t doc) const {
    return sources_[doc_sources_[doc]];
  }

  // Binary layout: 4-byte magic, little-endian u32 version, then the payload.
  // Throws IoError on stream failure.
  void Save(std::ostream& out) const;
  void SaveFile(const std::string& path) const;
  // Throws IndexFormatError on bad magic, unknown version or a truncated or
  // inconsistent payload.
  static HitIndex Load(std::istream& in);
  static HitIndex LoadFile(const std::string& path);

  bool operator==(const HitIndex&) const = default;

 private:
  std::vector<bool> ExcludedSources(const std::set<std::string>& labels) const;
  uint64_t TermHits(const TermQuery& q, const std::vector<bool>& excluded) const;
  uint64_t NearHits(const NearQuery& q, const std::vector<bool>& excluded) const;

  std::unordered_map<std::string, std::vector<Posting>> postings_;
  std::vector<std::string> doc_ids_;
  std::vector<uint32_t> doc_sources_;  // index into sources_
  std::vector<std::string> sources_;
};

// Linear scan with no index; the reference answer for HitIndex::Hits.
uint64_t HitsOracle(std::span<const CorpusDocument> docs,
                    const HitQuery& query);

}  // namespace semorient

#endif  // SEMORIENT_HIT_INDEX_H_
