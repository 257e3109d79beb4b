#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lexent/datasets.hpp"
#include "lexent/embeddings.hpp"

namespace lexent {

enum class Metric { macro_f1, weighted_f1 };

Metric metric_from_string(std::string_view s);
std::string_view to_string(Metric m);

struct RelationScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double support = 0.0;

  bool operator==(const RelationScore&) const = default;
};

struct EvalReport {
  std::vector<std::string> classes;
  std::vector<RelationScore> per_relation;  // aligned with classes
  double macro_f1 = 0.0;
  double weighted_f1 = 0.0;
  double accuracy = 0.0;
  // confusion[gold][predicted]; doubles so OOD sums stay exact
  std::vector<std::vector<double>> confusion;

  double metric(Metric m) const {
    return m == Metric::macro_f1 ? macro_f1 : weighted_f1;
  }

  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
  std::string to_csv() const;  // one row per relation plus aggregate rows
};

/// Multiclass precision/recall/F1 over the declared class list. F1 is 0 when
/// P + R is 0. macro averages classes unweighted; weighted averages by gold
/// support. EvalError on length mismatch, empty input, or labels outside
/// `classes`.
EvalReport score(std::span<const std::string> gold,
                 std::span<const std::string> predicted,
                 const std::vector<std::string>& classes);

/// Unweighted mean of every scalar over folds; supports and confusion counts
/// are summed. EvalError when class lists differ.
EvalReport aggregate_ood(const std::vector<EvalReport>& fold_reports);

struct SimilarityProfile {
  std::vector<std::string> classes;
  std::vector<double> mean_cosine;        // aligned with classes
  std::vector<std::size_t> pair_count;    // pairs contributing to the mean
  std::vector<std::size_t> skipped_oov;   // pairs excluded by include_oov=false
  std::vector<std::size_t> skipped_zero;  // zero-norm vectors (warned, skipped)

  nlohmann::json to_json() const;
};

/// Mean intra-pair cosine similarity per relation. With include_oov, missing
/// tokens contribute through the table's OOV policy; otherwise such pairs are
/// counted in skipped_oov.
SimilarityProfile similarity_profile(const Dataset& dataset,
                                     const EmbeddingTable& table,
                                     const LookupPolicy& policy,
                                     bool include_oov = true);

struct DiffRow {
  std::string x;
  std::string relation;
  std::string y;
  double cosine = 0.0;
  std::string label_a;
  std::string label_b;
};

/// Instances where model A is wrong and model B is right, with intra-pair
/// cosine, sorted by cosine ascending.
std::vector<DiffRow> diff_report(std::span<const std::string> gold,
                                 std::span<const std::string> preds_a,
                                 std::span<const std::string> preds_b,
                                 const Dataset& dataset,
                                 std::span<const std::uint32_t> indices,
                                 const EmbeddingTable& table,
                                 const LookupPolicy& policy);

/// Markdown table: one row per relation plus the aggregate line.
std::string render_markdown(const EvalReport& report);

}  // namespace lexent
