#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lexent/learners/grid.hpp"
#include "lexent/matrix.hpp"

namespace lexent {

enum class KernelKind { linear, rbf, ksim, precomputed };

KernelKind kernel_kind_from_string(std::string_view s);
std::string_view to_string(KernelKind k);

struct KernelConfig {
  KernelKind kind = KernelKind::linear;
  double gamma = 0.0;  // rbf
  double alpha = 0.0;  // ksim mixing exponent

  bool operator==(const KernelConfig&) const = default;
};

/// One-vs-rest linear families: per-class weight row plus bias.
struct LinearParams {
  std::size_t input_dim = 0;
  RowMatrix weights;  // classes x input_dim
  std::vector<double> biases;

  bool operator==(const LinearParams&) const = default;
};

struct SvmClassParams {
  std::vector<std::uint32_t> sv_index;  // rows of support_vectors, or train
                                        // indices for precomputed kernels
  std::vector<double> coef;             // y_i * alpha_i
  double bias = 0.0;

  bool operator==(const SvmClassParams&) const = default;
};

struct SvmParams {
  KernelConfig kernel;
  std::size_t input_dim = 0;
  RowMatrix support_vectors;  // unique support vectors (empty for precomputed)
  std::vector<SvmClassParams> per_class;

  bool operator==(const SvmParams&) const = default;
};

/// Single hidden layer, rectified-linear, softmax output.
struct MlpParams {
  std::size_t input_dim = 0;
  std::size_t hidden = 0;
  RowMatrix w1;  // hidden x input_dim
  std::vector<double> b1;
  RowMatrix w2;  // classes x hidden
  std::vector<double> b2;

  bool operator==(const MlpParams&) const = default;
};

struct TrainedModel {
  Family family = Family::lr;
  HyperPoint hyperparameters;
  std::vector<std::string> classes;
  std::uint64_t training_seed = 0;
  std::variant<LinearParams, SvmParams, MlpParams> params;
  std::vector<std::string> warnings;

  /// Per-row decision values, one column per class.
  RowMatrix decision_values(const RowMatrix& X, std::size_t workers = 1) const;

  /// argmax of decision values; ties go to the earlier class.
  std::vector<std::string> predict(const RowMatrix& X,
                                   std::size_t workers = 1) const;

  nlohmann::json to_json() const;
  static TrainedModel from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static TrainedModel load(const std::filesystem::path& path);
};

/// Prediction for models trained on a precomputed kernel: K_test_by_train
/// holds k(test_i, train_j).
std::vector<std::string> predict_svm_precomputed(const TrainedModel& model,
                                                 const RowMatrix& K_test_by_train);

std::vector<std::string> argmax_labels(const RowMatrix& decision_values,
                                       const std::vector<std::string>& classes);

}  // namespace lexent
