#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "planted_corpus.h"
#include "semorient/cli.h"
#include "test_util.h"

using namespace semorient;
using semorient::testing::DataPath;
using semorient::testing::TempDir;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "semorient");
  std::ostringstream out, err;
  int code = RunCli(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

const std::string kLexicon = SEMORIENT_LEXICON;

}  // namespace

TEST_CASE("cli so reproduces a fixture phrase") {
  Run r = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
               "epinions", "so", "online experience"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("online experience\t2.253\tpositive\n", 0) == 0);
  CHECK(r.out.find("hits(excellent) = 2471810") != std::string::npos);
}

TEST_CASE("cli so log base changes scale only") {
  for (const std::string phrase :
       {"online experience", "low fees", "inconveniently located"}) {
    Run e = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
                 "epinions", "--format", "json", "so", phrase});
    Run two = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
                   "epinions", "--format", "json", "--log-base", "2", "so",
                   phrase});
    REQUIRE(e.code == kExitOk);
    REQUIRE(two.code == kExitOk);
    auto je = nlohmann::json::parse(e.out);
    auto j2 = nlohmann::json::parse(two.out);
    double se = je["so"].get<double>();
    double s2 = j2["so"].get<double>();
    CHECK((se > 0) == (s2 > 0));
    CHECK(std::abs(se / s2 - std::log(2.0)) < 1e-9);
    CHECK(je["counts"] == j2["counts"]);
  }
}

TEST_CASE("cli classify on an empty file") {
  TempDir dir;
  WriteText(dir.File("empty.jsonl"), "");
  Run r = Cli({"--fixture", DataPath("bank_fixture.json"), "classify", "--in",
               dir.File("empty.jsonl"), "--out", dir.File("out.jsonl")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("classified 0 reviews") != std::string::npos);
  CHECK(Slurp(dir.File("out.jsonl")).empty());
}

TEST_CASE("cli pretagged fixture reviews") {
  TempDir dir;
  Run r = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
               "epinions", "--tagger", "pretagged", "classify", "--in",
               DataPath("bank_reviews.jsonl"), "--out", dir.File("out.jsonl")});
  REQUIRE(r.code == kExitOk);
  std::ifstream in(dir.File("out.jsonl"));
  std::vector<nlohmann::json> rows;
  for (std::string line; std::getline(in, line);) {
    rows.push_back(nlohmann::json::parse(line));
  }
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["label"] == "recommended");
  CHECK(std::abs(rows[0]["average_so"].get<double>() - 0.322) < 1e-3);
  CHECK(rows[1]["label"] == "not_recommended");
  CHECK(std::abs(rows[1]["average_so"].get<double>() + 1.218) < 1e-3);
}

TEST_CASE("cli end to end on a planted corpus") {
  TempDir dir;
  auto set = semorient::testing::MakePlantedSet(7, 40);
  semorient::testing::WriteCorpusJsonl(set.corpus, dir.File("corpus.jsonl"));
  semorient::testing::WriteReviewsJsonl(set.reviews, dir.File("reviews.jsonl"));

  Run built = Cli({"--corpus", dir.File("corpus.jsonl"), "index", "build",
                   "--out", dir.File("corpus.idx")});
  REQUIRE(built.code == kExitOk);

  std::vector<std::string> common = {"--index", dir.File("corpus.idx"),
                                     "--exclude", "reviewsite", "--lexicon",
                                     kLexicon};
  auto with = [&](std::vector<std::string> tail) {
    std::vector<std::string> args = common;
    args.insert(args.end(), tail.begin(), tail.end());
    return Cli(args);
  };

  Run c1 = with({"--jobs", "3", "classify", "--in", dir.File("reviews.jsonl"),
                 "--out", dir.File("r1.jsonl")});
  Run c2 = with({"classify", "--in", dir.File("reviews.jsonl"), "--out",
                 dir.File("r2.jsonl")});
  REQUIRE(c1.code == kExitOk);
  REQUIRE(c2.code == kExitOk);
  const std::string bytes = Slurp(dir.File("r1.jsonl"));
  CHECK(!bytes.empty());
  CHECK(bytes == Slurp(dir.File("r2.jsonl")));

  // Hand-score the stored decisions against the planted labels.
  std::ifstream in(dir.File("r1.jsonl"));
  size_t idx = 0, correct = 0;
  for (std::string line; std::getline(in, line); ++idx) {
    auto j = nlohmann::json::parse(line);
    REQUIRE(j["id"] == set.reviews[idx].id);
    bool up = j["decision"] == "recommended";
    bool truth = set.reviews[idx].label == AuthorLabel::kRecommended;
    if (up == truth) ++correct;
  }
  REQUIRE(idx == set.reviews.size());
  double expected = 100.0 * correct / idx;

  Run ev = Cli({"--format", "json", "evaluate", "--results",
                dir.File("r1.jsonl"), "--reviews", dir.File("reviews.jsonl")});
  REQUIRE(ev.code == kExitOk);
  auto report = nlohmann::json::parse(ev.out);
  CHECK(report["overall"]["accuracy"].get<double>() ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected >= 80.0);

  Run text = Cli({"evaluate", "--results", dir.File("r1.jsonl"), "--reviews",
                  dir.File("reviews.jsonl")});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("All") != std::string::npos);
}

TEST_CASE("cli exclusion matches removing the documents") {
  TempDir dir;
  auto set = semorient::testing::MakePlantedSet(11, 20);
  semorient::testing::WriteCorpusJsonl(set.corpus, dir.File("all.jsonl"));
  std::vector<CorpusDocument> kept;
  for (const CorpusDocument& d : set.corpus) {
    if (d.source != "reviewsite") kept.push_back(d);
  }
  semorient::testing::WriteCorpusJsonl(kept, dir.File("kept.jsonl"));
  for (const auto& [a, b] : set.positive) {
    Run excluded = Cli({"--corpus", dir.File("all.jsonl"), "--exclude",
                        "reviewsite", "--format", "json", "so", a + " " + b});
    Run removed = Cli({"--corpus", dir.File("kept.jsonl"), "--format", "json",
                       "so", a + " " + b});
    Run included = Cli({"--corpus", dir.File("all.jsonl"), "--format", "json",
                        "so", a + " " + b});
    REQUIRE(excluded.code == kExitOk);
    auto je = nlohmann::json::parse(excluded.out);
    auto jr = nlohmann::json::parse(removed.out);
    auto ji = nlohmann::json::parse(included.out);
    CHECK(je["counts"] == jr["counts"]);
    CHECK(je["so"] == jr["so"]);
    CHECK(je["counts"] != ji["counts"]);
  }
}

TEST_CASE("cli cache stats and clear") {
  TempDir dir;
  const std::string cache = dir.File("q.cache");
  Run r = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
               "epinions", "--cache", cache, "so", "low fees"});
  REQUIRE(r.code == kExitOk);
  Run stats = Cli({"--cache", cache, "cache", "stats"});
  CHECK(stats.code == kExitOk);
  CHECK(stats.out.find("entries: 4") != std::string::npos);

  // Cached answers are served without consulting the fixture.
  Run again = Cli({"--fixture", DataPath("bank_fixture.json"), "--exclude",
                   "epinions", "--cache", cache, "so", "low fees"});
  CHECK(again.out == r.out);

  Run cleared = Cli({"--cache", cache, "cache", "clear"});
  CHECK(cleared.code == kExitOk);
  CHECK(cleared.out.find("cleared 4 entries") != std::string::npos);
  CHECK(Cli({"--cache", cache, "cache", "stats"}).out.find("entries: 0") !=
        std::string::npos);
}

TEST_CASE("cli config file supplies defaults that flags override") {
  TempDir dir;
  WriteText(dir.File("so.ini"),
            "fixture=" + DataPath("bank_fixture.json") +
                "\nexclude=epinions\nlog-base=2\nformat=json\n");
  Run from_config = Cli({"--config", dir.File("so.ini"), "so", "low fees"});
  REQUIRE(from_config.code == kExitOk);
  CHECK(nlohmann::json::parse(from_config.out)["log_base"] == 2.0);

  Run overridden = Cli({"--config", dir.File("so.ini"), "--log-base", "10",
                        "so", "low fees"});
  REQUIRE(overridden.code == kExitOk);
  CHECK(nlohmann::json::parse(overridden.out)["log_base"] == 10.0);
}

TEST_CASE("cli exit codes") {
  TempDir dir;
  SUBCASE("usage") {
    CHECK(Cli({}).code == kExitUsage);
    CHECK(Cli({"bogus"}).code == kExitUsage);
    CHECK(Cli({"so", "low fees"}).code == kExitUsage);
    CHECK(Cli({"--fixture", DataPath("bank_fixture.json"), "so", "one"}).code ==
          kExitUsage);
    CHECK(Cli({"--fixture", "a", "--index", "b", "so", "low fees"}).code ==
          kExitUsage);
    CHECK(Cli({"--fixture", DataPath("bank_fixture.json"), "--log-base", "1",
               "so", "low fees"})
              .code == kExitUsage);
    CHECK(Cli({"--fixture", DataPath("bank_fixture.json"), "--format", "xml",
               "so", "low fees"})
              .code == kExitUsage);
  }
  SUBCASE("io") {
    CHECK(Cli({"--fixture", dir.File("missing.json"), "so", "low fees"}).code ==
          kExitIo);
    CHECK(Cli({"--fixture", DataPath("bank_fixture.json"), "classify", "--in",
               dir.File("missing.jsonl"), "--out", "-"})
              .code == kExitIo);
  }
  SUBCASE("data") {
    WriteText(dir.File("bad.jsonl"),
              "{\"id\":\"a\",\"domain\":\"d\",\"text\":\"fine\"}\n{oops\n");
    Run r = Cli({"--fixture", DataPath("bank_fixture.json"), "classify", "--in",
                 dir.File("bad.jsonl"), "--out", "-"});
    CHECK(r.code == kExitData);
    CHECK(r.err.find("line 2") != std::string::npos);

    Run miss = Cli({"--fixture", DataPath("bank_fixture.json"), "so",
                    "purple elephant"});
    CHECK(miss.code == kExitData);
  }
}

TEST_CASE("cli extract without a backend lists phrases") {
  TempDir dir;
  WriteText(dir.File("r.jsonl"),
            "{\"id\":\"x\",\"domain\":\"d\",\"text\":\"We noticed the friendly "
            "staff here.\"}\n");
  Run r = Cli({"--lexicon", kLexicon, "--format", "json", "extract", "--in",
               dir.File("r.jsonl")});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["phrases"].size() == 1);
  CHECK(j["phrases"][0]["phrase"] == "friendly staff");
  CHECK(j["phrases"][0]["tags"] == "JJ NN");
  CHECK(!j.contains("average_so"));
}
