#ifndef SEMORIENT_TESTS_HIT_TEST_SUPPORT_H_
#define SEMORIENT_TESTS_HIT_TEST_SUPPORT_H_

#include <random>
#include <string>
#include <vector>

#include "semorient/hit_index.h"

namespace semorient::testing {

struct RandomCorpusSpec {
  size_t max_docs = 200;
  size_t vocabulary = 50;
  size_t max_words = 60;
  size_t sources = 3;
};

inline std::string VocabWord(size_t i) { return "w" + std::to_string(i); }

inline std::vector<CorpusDocument> RandomCorpus(std::mt19937_64& rng,
                                                const RandomCorpusSpec& spec) {
  std::vector<CorpusDocument> docs;
  size_t n_docs = rng() % (spec.max_docs + 1);
  // A skewed word distribution makes adjacent pairs and nearby terms common.
  std::geometric_distribution<size_t> pick(0.12);
  for (size_t d = 0; d < n_docs; ++d) {
    CorpusDocument doc;
    doc.id = "d" + std::to_string(d);
    doc.source = "s" + std::to_string(rng() % spec.sources);
    size_t len = rng() % (spec.max_words + 1);
    for (size_t i = 0; i < len; ++i) {
      doc.words.push_back(VocabWord(pick(rng) % spec.vocabulary));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

inline HitQuery RandomQuery(std::mt19937_64& rng, size_t vocabulary,
                            size_t sources) {
  std::geometric_distribution<size_t> pick(0.12);
  std::set<std::string> exclusions;
  for (size_t s = 0; s < sources; ++s) {
    if (rng() % 4 == 0) exclusions.insert("s" + std::to_string(s));
  }
  if (rng() % 4 == 0) {
    return HitQuery::Term(VocabWord(pick(rng) % vocabulary), exclusions);
  }
  static const uint32_t kWindows[] = {1, 5, 10};
  return HitQuery::Near(VocabWord(pick(rng) % vocabulary),
                        VocabWord(pick(rng) % vocabulary),
                        VocabWord(pick(rng) % vocabulary), kWindows[rng() % 3],
                        exclusions);
}

}  // namespace semorient::testing

#endif  // SEMORIENT_TESTS_HIT_TEST_SUPPORT_H_
