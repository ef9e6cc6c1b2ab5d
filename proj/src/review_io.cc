#include "semorient/review_io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "semorient/errors.h"

namespace semorient {
namespace {

using nlohmann::json;

Review ReviewFromJson(const json& j, size_t line) {
  if (!j.is_object()) throw MalformedReview("review must be a JSON object", line);
  Review r;
  r.line = line;
  if (!j.contains("id") || !j["id"].is_string()) {
    throw MalformedReview("missing string field \"id\"", line);
  }
  r.id = j["id"].get<std::string>();
  if (j.contains("domain")) {
    if (!j["domain"].is_string()) {
      throw MalformedReview("\"domain\" must be a string", line);
    }
    r.domain = j["domain"].get<std::string>();
  }
  if (j.contains("label") && !j["label"].is_null()) {
    if (!j["label"].is_string()) {
      throw MalformedReview("\"label\" must be a string", line);
    }
    auto label = ParseAuthorLabel(j["label"].get<std::string>());
    if (!label) {
      throw MalformedReview("\"label\" must be recommended or not_recommended",
                            line);
    }
    r.label = *label;
  }
  if (j.contains("stars") && !j["stars"].is_null()) {
    if (!j["stars"].is_number_integer()) {
      throw MalformedReview("\"stars\" must be an integer", line);
    }
    int stars = j["stars"].get<int>();
    if (stars < 1 || stars > 5) {
      throw MalformedReview("\"stars\" must be in 1..5", line);
    }
    r.stars = stars;
  }
  const bool has_text = j.contains("text") && j["text"].is_string();
  const bool has_tagged = j.contains("tagged") && j["tagged"].is_string();
  if (!has_text && !has_tagged) {
    throw MalformedReview("review needs a string \"text\" or \"tagged\" field",
                          line);
  }
  if (has_text) r.text = j["text"].get<std::string>();
  if (has_tagged) r.tagged = j["tagged"].get<std::string>();
  return r;
}

template <typename F>
void ForEachJsonLine(std::istream& in, F&& handle) {
  std::string text;
  size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    handle(j, line_no);
  }
}

std::string TagsText(const CandidatePhrase& p) {
  return std::string(TagName(p.tag1)) + " " + std::string(TagName(p.tag2));
}

}  // namespace

std::vector<Review> ParseReviews(std::istream& in) {
  std::vector<Review> reviews;
  try {
    ForEachJsonLine(in, [&](const json& j, size_t line) {
      reviews.push_back(ReviewFromJson(j, line));
    });
  } catch (const MalformedReview&) {
    throw;
  } catch (const FormatError& e) {
    throw MalformedReview(e.what());
  }
  return reviews;
}

std::vector<Review> LoadReviews(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open reviews: " + path);
  return ParseReviews(in);
}

json ReviewToJson(const Review& r) {
  json j;
  j["id"] = r.id;
  j["domain"] = r.domain;
  if (r.label != AuthorLabel::kUnknown) {
    j["label"] = std::string(AuthorLabelName(r.label));
  }
  if (r.stars) j["stars"] = *r.stars;
  if (r.tagged) {
    j["tagged"] = *r.tagged;
  } else {
    j["text"] = r.text;
  }
  return j;
}

Prediction ApplyFallback(Prediction label, Prediction fallback) {
  return label == Prediction::kUndetermined ? fallback : label;
}

json ResultToJson(const ClassificationResult& result, Prediction decision) {
  json phrases = json::array();
  for (const ScoredPhrase& sp : result.phrases) {
    json p;
    p["phrase"] = sp.phrase.text();
    p["tags"] = TagsText(sp.phrase);
    p["pattern"] = PatternRow(sp.phrase.pattern);
    p["position"] = sp.phrase.start_position;
    p["so"] = sp.so.value ? json(*sp.so.value) : json(nullptr);
    p["counts"] = json::array({sp.so.counts.near_positive,
                               sp.so.counts.near_negative,
                               sp.so.counts.positive_total,
                               sp.so.counts.negative_total});
    phrases.push_back(std::move(p));
  }
  json j;
  j["id"] = result.review_id;
  j["label"] = std::string(PredictionName(result.label));
  j["decision"] = std::string(PredictionName(decision));
  j["average_so"] = result.average_so ? json(*result.average_so) : json(nullptr);
  j["used"] = result.used_count;
  j["skipped"] = result.skipped_count;
  j["phrases"] = std::move(phrases);
  return j;
}

StoredResult ResultFromJson(const json& j) {
  StoredResult stored;
  ClassificationResult& r = stored.result;
  try {
    r.review_id = j.at("id").get<std::string>();
    auto label = ParsePrediction(j.at("label").get<std::string>());
    auto decision = ParsePrediction(j.at("decision").get<std::string>());
    if (!label || !decision) throw FormatError("unknown label in result");
    r.label = *label;
    stored.decision = *decision;
    if (!j.at("average_so").is_null()) {
      r.average_so = j.at("average_so").get<double>();
    }
    r.used_count = j.at("used").get<size_t>();
    r.skipped_count = j.at("skipped").get<size_t>();
    for (const json& p : j.at("phrases")) {
      ScoredPhrase sp;
      std::string text = p.at("phrase").get<std::string>();
      std::string tags = p.at("tags").get<std::string>();
      size_t ws = text.find(' ');
      size_t ts = tags.find(' ');
      if (ws == std::string::npos || ts == std::string::npos) {
        throw FormatError("phrase and tags must hold two words");
      }
      sp.phrase.word1 = text.substr(0, ws);
      sp.phrase.word2 = text.substr(ws + 1);
      sp.phrase.tag1 = ParseTag(tags.substr(0, ts));
      sp.phrase.tag2 = ParseTag(tags.substr(ts + 1));
      int row = p.at("pattern").get<int>();
      if (row < 1 || row > 5) throw FormatError("pattern row out of range");
      sp.phrase.pattern = static_cast<Pattern>(row);
      sp.phrase.start_position = p.at("position").get<uint32_t>();
      if (!p.at("so").is_null()) sp.so.value = p.at("so").get<double>();
      const json& c = p.at("counts");
      if (!c.is_array() || c.size() != 4) {
        throw FormatError("counts must hold four integers");
      }
      sp.so.counts = HitCounts{c[0].get<uint64_t>(), c[1].get<uint64_t>(),
                               c[2].get<uint64_t>(), c[3].get<uint64_t>()};
      r.phrases.push_back(std::move(sp));
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed result: ") + e.what());
  }
  return stored;
}

void WriteResults(std::ostream& out, const std::vector<StoredResult>& results) {
  for (const StoredResult& s : results) {
    out << ResultToJson(s.result, s.decision).dump() << '\n';
  }
}

std::vector<StoredResult> ParseResults(std::istream& in) {
  std::vector<StoredResult> results;
  ForEachJsonLine(in, [&](const json& j, size_t line) {
    try {
      results.push_back(ResultFromJson(j));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), line);
    }
  });
  return results;
}

std::vector<StoredResult> LoadResults(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open results: " + path);
  return ParseResults(in);
}

}  // namespace semorient
