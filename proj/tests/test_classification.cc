#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "semorient/classification.h"
#include "semorient/errors.h"
#include "semorient/review_io.h"
#include "test_util.h"

namespace semorient {
namespace {

ScoredPhrase Scored(std::string w1, std::string w2, std::optional<double> so) {
  ScoredPhrase sp;
  sp.phrase.word1 = std::move(w1);
  sp.phrase.word2 = std::move(w2);
  sp.phrase.tag1 = PosTag::kJJ;
  sp.phrase.tag2 = PosTag::kNN;
  sp.so.value = so;
  return sp;
}

struct BankSetup {
  FixtureBackend fixture =
      FixtureBackend::LoadFile(testing::DataPath("bank_fixture.json"));
  std::vector<Review> reviews =
      LoadReviews(testing::DataPath("bank_reviews.jsonl"));
  Lexicon lexicon;
  SoConfig cfg = [] {
    SoConfig c;
    c.exclusions = {"epinions"};
    return c;
  }();
};

TEST_CASE("worked bank reviews replay their averages") {
  BankSetup s;
  ReviewClassifier classifier(s.lexicon, s.fixture, s.cfg, TaggerMode::kPretagged);
  REQUIRE(s.reviews.size() == 2);

  ClassificationResult up = classifier.Classify(s.reviews[0]);
  CHECK(up.phrases.size() == 11);
  CHECK(up.used_count == 11);
  REQUIRE(up.average_so.has_value());
  CHECK(std::abs(*up.average_so - 0.322) <= 0.001);
  CHECK(up.label == Prediction::kRecommended);
  CHECK(up.phrases[0].phrase.text() == "online experience");
  CHECK(up.phrases[8].phrase.pattern == Pattern::kAdverbVerb);

  ClassificationResult down = classifier.Classify(s.reviews[1]);
  CHECK(down.phrases.size() == 17);
  REQUIRE(down.average_so.has_value());
  CHECK(std::abs(*down.average_so - -1.218) <= 0.001);
  CHECK(down.label == Prediction::kNotRecommended);
  CHECK(down.phrases[16].phrase.text() == "lesser evil");
  CHECK(down.phrases[16].phrase.pattern == Pattern::kAdverbAdjective);
}

TEST_CASE("summarize edge cases") {
  ClassificationResult none = Summarize("r", {Scored("a", "b", std::nullopt),
                                              Scored("c", "d", std::nullopt)});
  CHECK(none.label == Prediction::kUndetermined);
  CHECK_FALSE(none.average_so.has_value());
  CHECK(none.skipped_count == 2);

  ClassificationResult empty = Summarize("r", {});
  CHECK(empty.label == Prediction::kUndetermined);

  ClassificationResult zero = Summarize("r", {Scored("a", "b", 0.0)});
  CHECK(zero.label == Prediction::kNotRecommended);
  CHECK(*zero.average_so == 0.0);

  ClassificationResult mixed = Summarize(
      "r", {Scored("a", "b", 1.5), Scored("c", "d", std::nullopt),
            Scored("e", "f", -0.5)});
  CHECK(mixed.used_count == 2);
  CHECK(mixed.skipped_count == 1);
  CHECK(*mixed.average_so == 0.5);
  CHECK(mixed.label == Prediction::kRecommended);
}

TEST_CASE("label depends only on the mean: permutation and positive scaling") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> so(0.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<ScoredPhrase> phrases;
    size_t n = rng() % 12;
    double sum = 0;
    size_t used = 0;
    for (size_t i = 0; i < n; ++i) {
      std::optional<double> v;
      if (rng() % 4 != 0) {
        v = so(rng);
        sum += *v;
        ++used;
      }
      phrases.push_back(Scored("a", "b", v));
    }
    ClassificationResult base = Summarize("r", phrases);
    CHECK(base.used_count + base.skipped_count == n);
    if (used > 0) {
      CHECK(*base.average_so == sum / static_cast<double>(used));
    }
    auto shuffled = phrases;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(Summarize("r", shuffled).label == base.label);
    auto scaled = phrases;
    for (auto& p : scaled) {
      if (p.so.value) *p.so.value *= 1.0 / std::log(2.0);
    }
    CHECK(Summarize("r", scaled).label == base.label);
  }
}

TEST_CASE("baseline-tagged review through the classifier") {
  Lexicon lex = Lexicon::Load(SEMORIENT_LEXICON);
  FixtureBackend fixture;
  SoConfig cfg;
  auto set = [&](const std::string& a, const std::string& b, uint64_t np,
                 uint64_t nn) {
    fixture.Set(HitQuery::Near(a, b, "excellent"), np);
    fixture.Set(HitQuery::Near(a, b, "poor"), nn);
  };
  fixture.Set(HitQuery::Term("excellent"), 1000);
  fixture.Set(HitQuery::Term("poor"), 1000);
  set("low", "fees", 40, 10);
  set("rude", "staff", 1, 2);

  ReviewClassifier classifier(lex, fixture, cfg);
  Review r;
  r.id = "x";
  r.text = "Low fees at Bank of America, but rude staff.";
  auto phrases = classifier.Extract(r);
  REQUIRE(phrases.size() == 2);
  CHECK(phrases[0].text() == "low fees");
  CHECK(phrases[1].text() == "rude staff");
  ClassificationResult result = classifier.Classify(r);
  CHECK(result.used_count == 1);
  CHECK(result.skipped_count == 1);
  CHECK(result.label == Prediction::kRecommended);

  ReviewClassifier pretagged_only(lex, fixture, cfg, TaggerMode::kPretagged);
  CHECK_THROWS_AS(pretagged_only.Classify(r), MalformedReview);

  Review broken;
  broken.id = "y";
  broken.tagged = "no-slash-here";
  CHECK_THROWS_AS(classifier.Classify(broken), MalformedReview);
}

TEST_CASE("batch classification preserves order and is width independent") {
  BankSetup s;
  ReviewClassifier classifier(s.lexicon, s.fixture, s.cfg);
  std::vector<Review> many;
  for (int i = 0; i < 30; ++i) {
    Review r = s.reviews[i % 2];
    r.id = "r" + std::to_string(i);
    many.push_back(r);
  }
  auto serial = ClassifyBatch(many, classifier, 1);
  auto parallel = ClassifyBatch(many, classifier, 4);
  REQUIRE(serial.size() == many.size());
  for (size_t i = 0; i < many.size(); ++i) {
    CHECK(serial[i].review_id == many[i].id);
    CHECK(parallel[i].review_id == many[i].id);
    CHECK(ResultToJson(serial[i], serial[i].label).dump() ==
          ResultToJson(parallel[i], parallel[i].label).dump());
  }
  CHECK(ClassifyBatch({}, classifier, 3).empty());

  FixtureBackend empty;
  ReviewClassifier failing(s.lexicon, empty, s.cfg);
  CHECK_THROWS_AS(ClassifyBatch(many, failing, 3), BackendUnavailable);
}

TEST_CASE("review ingestion") {
  std::stringstream ok(
      "{\"id\":\"a\",\"domain\":\"movies\",\"label\":\"recommended\","
      "\"stars\":5,\"text\":\"Great film\"}\n"
      "\n"
      "{\"id\":\"b\",\"tagged\":\"good/JJ film/NN\"}\n");
  auto reviews = ParseReviews(ok);
  REQUIRE(reviews.size() == 2);
  CHECK(reviews[0].label == AuthorLabel::kRecommended);
  CHECK(reviews[0].stars == 5);
  CHECK(reviews[0].line == 1);
  CHECK(reviews[1].label == AuthorLabel::kUnknown);
  CHECK(reviews[1].tagged == "good/JJ film/NN");
  CHECK(reviews[1].line == 3);

  std::stringstream empty("");
  CHECK(ParseReviews(empty).empty());

  std::stringstream missing("{\"id\":\"a\",\"text\":\"x\"}\n{\"id\":\"b\"}\n");
  CHECK_THROWS_WITH_AS(ParseReviews(missing), doctest::Contains("line 2"),
                       MalformedReview);
  std::stringstream stars("{\"id\":\"a\",\"text\":\"x\",\"stars\":6}\n");
  CHECK_THROWS_AS(ParseReviews(stars), MalformedReview);
  std::stringstream label("{\"id\":\"a\",\"text\":\"x\",\"label\":\"meh\"}\n");
  CHECK_THROWS_AS(ParseReviews(label), MalformedReview);
  std::stringstream junk("{oops\n");
  CHECK_THROWS_AS(ParseReviews(junk), MalformedReview);
  CHECK_THROWS_AS(LoadReviews("/nonexistent/reviews.jsonl"), IoError);
}

TEST_CASE("stored results round-trip through JSON") {
  BankSetup s;
  ReviewClassifier classifier(s.lexicon, s.fixture, s.cfg);
  std::vector<StoredResult> stored;
  for (const Review& r : s.reviews) {
    ClassificationResult res = classifier.Classify(r);
    Prediction label = res.label;
    stored.push_back(StoredResult{std::move(res), label});
  }
  stored.push_back(StoredResult{Summarize("none", {}), Prediction::kRecommended});
  std::stringstream buffer;
  WriteResults(buffer, stored);
  std::string first = buffer.str();
  auto parsed = ParseResults(buffer);
  REQUIRE(parsed.size() == stored.size());
  std::stringstream again;
  WriteResults(again, parsed);
  CHECK(again.str() == first);
  CHECK(parsed[2].decision == Prediction::kRecommended);
  CHECK(parsed[2].result.label == Prediction::kUndetermined);

  std::stringstream bad("{\"id\":\"x\"}\n");
  CHECK_THROWS_AS(ParseResults(bad), FormatError);
}

}  // namespace
}  // namespace semorient
