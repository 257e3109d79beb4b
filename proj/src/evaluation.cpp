#include "lexent/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lexent/error.hpp"
#include "lexent/simd.hpp"

namespace lexent {

using nlohmann::json;

Metric metric_from_string(std::string_view s) {
  if (s == "macro_f1" || s == "macro") return Metric::macro_f1;
  if (s == "weighted_f1" || s == "weighted") return Metric::weighted_f1;
  throw ConfigError("unknown metric: '" + std::string(s) + "'");
}

std::string_view to_string(Metric m) {
  return m == Metric::macro_f1 ? "macro_f1" : "weighted_f1";
}

EvalReport score(std::span<const std::string> gold,
                 std::span<const std::string> predicted,
                 const std::vector<std::string>& classes) {
  if (gold.size() != predicted.size()) {
    throw EvalError("gold and predicted lengths differ: " +
                    std::to_string(gold.size()) + " vs " +
                    std::to_string(predicted.size()));
  }
  if (gold.empty()) throw EvalError("empty label sequences");
  if (classes.empty()) throw EvalError("empty class list");

  std::map<std::string_view, std::size_t> class_index;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    class_index.emplace(classes[c], c);
  }

  const std::size_t k = classes.size();
  EvalReport report;
  report.classes = classes;
  report.confusion.assign(k, std::vector<double>(k, 0.0));

  for (std::size_t i = 0; i < gold.size(); ++i) {
    auto git = class_index.find(gold[i]);
    auto pit = class_index.find(predicted[i]);
    if (git == class_index.end()) {
      throw EvalError("gold label not in class list: '" + gold[i] + "'");
    }
    if (pit == class_index.end()) {
      throw EvalError("predicted label not in class list: '" + predicted[i] +
                      "'");
    }
    report.confusion[git->second][pit->second] += 1.0;
  }

  report.per_relation.resize(k);
  double correct = 0.0;
  double weighted_sum = 0.0;
  double macro_sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    double tp = report.confusion[c][c];
    double gold_count = 0.0;
    double pred_count = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      gold_count += report.confusion[c][j];
      pred_count += report.confusion[j][c];
    }
    correct += tp;
    RelationScore& rs = report.per_relation[c];
    rs.support = gold_count;
    rs.precision = pred_count > 0.0 ? tp / pred_count : 0.0;
    rs.recall = gold_count > 0.0 ? tp / gold_count : 0.0;
    double pr = rs.precision + rs.recall;
    rs.f1 = pr > 0.0 ? 2.0 * rs.precision * rs.recall / pr : 0.0;
    macro_sum += rs.f1;
    weighted_sum += rs.support * rs.f1;
  }
  report.accuracy = correct / static_cast<double>(gold.size());
  report.macro_f1 = macro_sum / static_cast<double>(k);
  report.weighted_f1 = weighted_sum / static_cast<double>(gold.size());
  return report;
}

EvalReport aggregate_ood(const std::vector<EvalReport>& fold_reports) {
  if (fold_reports.empty()) throw EvalError("no fold reports to aggregate");
  const EvalReport& first = fold_reports.front();
  for (const EvalReport& r : fold_reports) {
    if (r.classes != first.classes) {
      throw EvalError("fold reports have inconsistent class lists");
    }
  }

  const std::size_t k = first.classes.size();
  const double n = static_cast<double>(fold_reports.size());
  EvalReport out;
  out.classes = first.classes;
  out.per_relation.resize(k);
  out.confusion.assign(k, std::vector<double>(k, 0.0));
  for (const EvalReport& r : fold_reports) {
    out.macro_f1 += r.macro_f1;
    out.weighted_f1 += r.weighted_f1;
    out.accuracy += r.accuracy;
    for (std::size_t c = 0; c < k; ++c) {
      out.per_relation[c].precision += r.per_relation[c].precision;
      out.per_relation[c].recall += r.per_relation[c].recall;
      out.per_relation[c].f1 += r.per_relation[c].f1;
      out.per_relation[c].support += r.per_relation[c].support;  // summed
      for (std::size_t j = 0; j < k; ++j) {
        out.confusion[c][j] += r.confusion[c][j];  // summed
      }
    }
  }
  out.macro_f1 /= n;
  out.weighted_f1 /= n;
  out.accuracy /= n;
  for (std::size_t c = 0; c < k; ++c) {
    out.per_relation[c].precision /= n;
    out.per_relation[c].recall /= n;
    out.per_relation[c].f1 /= n;
  }
  return out;
}

json EvalReport::to_json() const {
  json j;
  j["classes"] = classes;
  json per;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    per[classes[c]] = {{"precision", per_relation[c].precision},
                       {"recall", per_relation[c].recall},
                       {"f1", per_relation[c].f1},
                       {"support", per_relation[c].support}};
  }
  j["per_relation"] = per;
  j["macro_f1"] = macro_f1;
  j["weighted_f1"] = weighted_f1;
  j["accuracy"] = accuracy;
  j["confusion"] = confusion;
  return j;
}

EvalReport EvalReport::from_json(const json& j) {
  EvalReport r;
  r.classes = j.at("classes").get<std::vector<std::string>>();
  r.per_relation.resize(r.classes.size());
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const json& p = j.at("per_relation").at(r.classes[c]);
    r.per_relation[c] = {p.at("precision").get<double>(),
                         p.at("recall").get<double>(),
                         p.at("f1").get<double>(),
                         p.at("support").get<double>()};
  }
  r.macro_f1 = j.at("macro_f1").get<double>();
  r.weighted_f1 = j.at("weighted_f1").get<double>();
  r.accuracy = j.at("accuracy").get<double>();
  r.confusion = j.at("confusion").get<std::vector<std::vector<double>>>();
  return r;
}

std::string EvalReport::to_csv() const {
  std::ostringstream out;
  out << "relation,precision,recall,f1,support\n";
  out.precision(6);
  out << std::fixed;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const RelationScore& rs = per_relation[c];
    out << classes[c] << ',' << rs.precision << ',' << rs.recall << ','
        << rs.f1 << ',' << rs.support << '\n';
  }
  out << "macro,,," << macro_f1 << ",\n";
  out << "weighted,,," << weighted_f1 << ",\n";
  out << "accuracy,,," << accuracy << ",\n";
  return std::move(out).str();
}

std::string render_markdown(const EvalReport& report) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed;
  out << "| relation | precision | recall | F1 | support |\n";
  out << "|---|---|---|---|---|\n";
  for (std::size_t c = 0; c < report.classes.size(); ++c) {
    const RelationScore& rs = report.per_relation[c];
    out << "| " << report.classes[c] << " | " << 100.0 * rs.precision << " | "
        << 100.0 * rs.recall << " | " << 100.0 * rs.f1 << " | " << rs.support
        << " |\n";
  }
  out << "| **macro** |  |  | " << 100.0 * report.macro_f1 << " |  |\n";
  out << "| **weighted** |  |  | " << 100.0 * report.weighted_f1 << " |  |\n";
  out << "| **accuracy** |  |  | " << 100.0 * report.accuracy << " |  |\n";
  return std::move(out).str();
}

json SimilarityProfile::to_json() const {
  json j;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    j[classes[c]] = {{"mean_cosine", mean_cosine[c]},
                     {"pairs", pair_count[c]},
                     {"skipped_oov", skipped_oov[c]},
                     {"skipped_zero", skipped_zero[c]}};
  }
  return j;
}

SimilarityProfile similarity_profile(const Dataset& dataset,
                                     const EmbeddingTable& table,
                                     const LookupPolicy& policy,
                                     bool include_oov) {
  const auto& classes = dataset.meta.relation_set;
  std::map<std::string_view, std::size_t> class_index;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    class_index.emplace(classes[c], c);
  }

  SimilarityProfile profile;
  profile.classes = classes;
  profile.mean_cosine.assign(classes.size(), 0.0);
  profile.pair_count.assign(classes.size(), 0);
  profile.skipped_oov.assign(classes.size(), 0);
  profile.skipped_zero.assign(classes.size(), 0);

  std::vector<double> sums(classes.size(), 0.0);
  for (const RelationInstance& inst : dataset.instances) {
    std::size_t c = class_index.at(inst.relation);
    if (!include_oov && (!table.contains(inst.x, policy) ||
                         !table.contains(inst.y, policy))) {
      ++profile.skipped_oov[c];
      continue;
    }
    std::vector<float> vx = table.lookup(inst.x, policy);
    std::vector<float> vy = table.lookup(inst.y, policy);
    std::span<const float> sx(vx);
    std::span<const float> sy(vy);
    if (simd::dot(sx, sx) == 0.0 || simd::dot(sy, sy) == 0.0) {
      ++profile.skipped_zero[c];
      continue;
    }
    sums[c] += simd::cosine(sx, sy);
    ++profile.pair_count[c];
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (profile.pair_count[c] > 0) {
      profile.mean_cosine[c] =
          sums[c] / static_cast<double>(profile.pair_count[c]);
    }
  }
  return profile;
}

std::vector<DiffRow> diff_report(std::span<const std::string> gold,
                                 std::span<const std::string> preds_a,
                                 std::span<const std::string> preds_b,
                                 const Dataset& dataset,
                                 std::span<const std::uint32_t> indices,
                                 const EmbeddingTable& table,
                                 const LookupPolicy& policy) {
  if (gold.size() != preds_a.size() || gold.size() != preds_b.size() ||
      gold.size() != indices.size()) {
    throw EvalError("diff_report inputs are not aligned");
  }
  std::vector<DiffRow> rows;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (preds_a[i] == gold[i] || preds_b[i] != gold[i]) continue;
    const RelationInstance& inst = dataset.instances[indices[i]];
    std::vector<float> vx = table.lookup(inst.x, policy);
    std::vector<float> vy = table.lookup(inst.y, policy);
    double cos = simd::cosine(std::span<const float>(vx),
                              std::span<const float>(vy));
    rows.push_back({inst.x, inst.relation, inst.y, cos, preds_a[i], preds_b[i]});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DiffRow& a, const DiffRow& b) {
                     return a.cosine < b.cosine;
                   });
  return rows;
}

}  // namespace lexent
