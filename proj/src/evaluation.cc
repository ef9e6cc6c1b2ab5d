#include "semorient/evaluation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>

#include "semorient/errors.h"

namespace semorient {
namespace {

bool DecidedRecommended(const Outcome& o) {
  return o.decision == Prediction::kRecommended;
}

std::vector<double> AverageRanks(std::span<const double> v) {
  std::vector<size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

DomainReport BuildDomainReport(const std::string& name,
                               std::span<const Outcome> outcomes) {
  DomainReport r;
  r.domain = name;
  r.total = outcomes.size();
  size_t phrases = 0;
  std::vector<Outcome> labeled;
  std::vector<Outcome> labeled_determined;
  std::vector<double> so;
  std::vector<double> stars;
  for (const Outcome& o : outcomes) {
    phrases += o.phrase_count;
    const bool determined = o.label != Prediction::kUndetermined;
    if (determined) {
      ++r.determined;
    } else {
      ++r.undetermined;
    }
    if (o.author != AuthorLabel::kUnknown &&
        o.decision != Prediction::kUndetermined) {
      labeled.push_back(o);
      if (determined) labeled_determined.push_back(o);
    }
    if (determined && o.stars && o.average_so) {
      so.push_back(*o.average_so);
      stars.push_back(static_cast<double>(*o.stars));
    }
  }
  r.labeled = labeled.size();
  if (r.total > 0) {
    r.average_phrases =
        static_cast<double>(phrases) / static_cast<double>(r.total);
  }
  if (!labeled.empty()) {
    r.accuracy = Accuracy(labeled);
    r.confusion = Confusion(labeled);
  }
  if (!labeled_determined.empty()) {
    r.determined_accuracy = Accuracy(labeled_determined);
  }
  r.correlated = so.size();
  try {
    r.correlation = Pearson(so, stars);
    r.spearman = Spearman(so, stars);
  } catch (const InsufficientData&) {
  } catch (const ZeroVariance&) {
  }
  return r;
}

std::string Percent(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f %%", *v);
  return buf;
}

std::string Fixed(const std::optional<double>& v, int digits) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, *v);
  return buf;
}

nlohmann::json OptionalJson(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json DomainJson(const DomainReport& d) {
  nlohmann::json j;
  j["domain"] = d.domain;
  j["total"] = d.total;
  j["labeled"] = d.labeled;
  j["determined"] = d.determined;
  j["undetermined"] = d.undetermined;
  j["average_phrases"] = d.average_phrases;
  j["accuracy"] = OptionalJson(d.accuracy);
  j["determined_accuracy"] = OptionalJson(d.determined_accuracy);
  j["correlation"] = OptionalJson(d.correlation);
  j["spearman"] = OptionalJson(d.spearman);
  j["correlated"] = d.correlated;
  if (d.confusion) {
    const ConfusionMatrix& c = *d.confusion;
    j["confusion"] = {{"positive_up", c.positive_up},
                      {"positive_down", c.positive_down},
                      {"negative_up", c.negative_up},
                      {"negative_down", c.negative_down}};
  } else {
    j["confusion"] = nullptr;
  }
  return j;
}

}  // namespace

double Accuracy(std::span<const Outcome> outcomes) {
  if (outcomes.empty()) throw EmptyEvaluation("accuracy of an empty set");
  size_t correct = 0;
  for (const Outcome& o : outcomes) {
    const bool up = o.author == AuthorLabel::kRecommended;
    if (DecidedRecommended(o) == up) ++correct;
  }
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(outcomes.size());
}

ConfusionMatrix Confusion(std::span<const Outcome> outcomes) {
  if (outcomes.empty()) throw EmptyEvaluation("confusion matrix of an empty set");
  size_t pu = 0, pd = 0, nu = 0, nd = 0;
  for (const Outcome& o : outcomes) {
    const bool up = o.author == AuthorLabel::kRecommended;
    if (DecidedRecommended(o)) {
      up ? ++pu : ++pd;
    } else {
      up ? ++nu : ++nd;
    }
  }
  const double n = static_cast<double>(outcomes.size());
  ConfusionMatrix m;
  m.total = outcomes.size();
  m.positive_up = 100.0 * static_cast<double>(pu) / n;
  m.positive_down = 100.0 * static_cast<double>(pd) / n;
  m.negative_up = 100.0 * static_cast<double>(nu) / n;
  m.negative_down = 100.0 * static_cast<double>(nd) / n;
  return m;
}

double Pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw InsufficientData("correlation needs equally many x and y values");
  }
  if (xs.size() < 2) throw InsufficientData("correlation needs two pairs");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ZeroVariance("correlation of a constant sequence");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double Spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) return Pearson(xs, ys);
  std::vector<double> rx = AverageRanks(xs);
  std::vector<double> ry = AverageRanks(ys);
  return Pearson(rx, ry);
}

std::vector<DomainSummary> SummarizeCorpus(
    std::span<const Outcome> outcomes,
    std::span<const std::string> extra_domains) {
  std::map<std::string, DomainSummary> by_domain;
  for (const std::string& d : extra_domains) by_domain[d].domain = d;
  DomainSummary all;
  all.domain = "All";
  for (const Outcome& o : outcomes) {
    DomainSummary& s = by_domain[o.domain];
    s.domain = o.domain;
    ++s.reviews;
    s.phrases += o.phrase_count;
    ++all.reviews;
    all.phrases += o.phrase_count;
  }
  std::vector<DomainSummary> out;
  auto finish = [](DomainSummary& s) {
    s.empty = s.reviews == 0;
    s.average_phrases = s.empty ? 0.0
                                : static_cast<double>(s.phrases) /
                                      static_cast<double>(s.reviews);
  };
  for (auto& [name, s] : by_domain) {
    finish(s);
    out.push_back(s);
  }
  finish(all);
  out.push_back(all);
  return out;
}

EvalReport Evaluate(std::span<const Outcome> outcomes) {
  std::map<std::string, std::vector<Outcome>> by_domain;
  for (const Outcome& o : outcomes) by_domain[o.domain].push_back(o);
  EvalReport report;
  for (const auto& [name, group] : by_domain) {
    report.domains.push_back(BuildDomainReport(name, group));
  }
  report.overall = BuildDomainReport("All", outcomes);
  return report;
}

std::vector<Outcome> JoinOutcomes(std::span<const StoredResult> results,
                                  std::span<const Review> reviews) {
  std::unordered_map<std::string, const Review*> by_id;
  for (const Review& r : reviews) by_id[r.id] = &r;
  std::vector<Outcome> outcomes;
  outcomes.reserve(results.size());
  for (const StoredResult& s : results) {
    auto it = by_id.find(s.result.review_id);
    if (it == by_id.end()) {
      throw FormatError("result for unknown review id: " + s.result.review_id);
    }
    const Review& review = *it->second;
    Outcome o;
    o.domain = review.domain;
    o.author = review.label;
    o.label = s.result.label;
    o.decision = s.decision;
    o.average_so = s.result.average_so;
    o.stars = review.stars;
    o.phrase_count = s.result.phrases.size();
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

std::string RenderReportText(const EvalReport& report) {
  std::string out;
  char line[256];
  std::vector<const DomainReport*> rows;
  for (const DomainReport& d : report.domains) rows.push_back(&d);
  rows.push_back(&report.overall);

  out += "Corpus summary\n";
  std::snprintf(line, sizeof(line), "%-24s %10s %12s %14s\n", "Domain",
                "Reviews", "Undetermined", "Avg phrases");
  out += line;
  for (const DomainReport* d : rows) {
    std::snprintf(line, sizeof(line), "%-24s %10zu %12zu %14.2f\n",
                  d->domain.c_str(), d->total, d->undetermined,
                  d->average_phrases);
    out += line;
  }

  out += "\nAccuracy and correlation\n";
  std::snprintf(line, sizeof(line), "%-24s %10s %12s %12s %10s\n", "Domain",
                "Accuracy", "Determined", "Correlation", "Spearman");
  out += line;
  for (const DomainReport* d : rows) {
    std::snprintf(line, sizeof(line), "%-24s %10s %12s %12s %10s\n",
                  d->domain.c_str(), Percent(d->accuracy).c_str(),
                  Percent(d->determined_accuracy).c_str(),
                  Fixed(d->correlation, 4).c_str(),
                  Fixed(d->spearman, 4).c_str());
    out += line;
  }

  for (const DomainReport* d : rows) {
    if (!d->confusion) continue;
    const ConfusionMatrix& c = *d->confusion;
    out += "\nConfusion matrix: " + d->domain + "\n";
    std::snprintf(line, sizeof(line), "%-10s %12s %12s %12s\n", "Avg SO",
                  "Author Up", "Author Down", "Sum");
    out += line;
    std::snprintf(line, sizeof(line), "%-10s %10.2f %% %10.2f %% %10.2f %%\n",
                  "Positive", c.positive_up, c.positive_down, c.positive_sum());
    out += line;
    std::snprintf(line, sizeof(line), "%-10s %10.2f %% %10.2f %% %10.2f %%\n",
                  "Negative", c.negative_up, c.negative_down, c.negative_sum());
    out += line;
    std::snprintf(line, sizeof(line), "%-10s %10.2f %% %10.2f %% %10.2f %%\n",
                  "Sum", c.up_sum(), c.down_sum(), c.up_sum() + c.down_sum());
    out += line;
  }
  return out;
}

nlohmann::json ReportToJson(const EvalReport& report) {
  nlohmann::json j;
  j["domains"] = nlohmann::json::array();
  for (const DomainReport& d : report.domains) {
    j["domains"].push_back(DomainJson(d));
  }
  j["overall"] = DomainJson(report.overall);
  return j;
}

}  // namespace semorient
