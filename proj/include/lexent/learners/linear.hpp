#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexent/learners/model.hpp"
#include "lexent/matrix.hpp"

namespace lexent {

/// Binary L2-regularized logistic objective over ±1 labels:
///   f(w, b) = 0.5 ||w||^2 + C * sum_i log(1 + exp(-y_i (w.x_i + b)))
/// with the bias unregularized. `wb` packs [w..., b]. Exposed so tests can
/// check the analytic gradient against finite differences.
struct LogisticObjective {
  const RowMatrix& X;
  std::span<const double> y;
  double C;

  double value(std::span<const double> wb) const;
  double value_and_gradient(std::span<const double> wb,
                            std::span<double> grad) const;
};

struct LrOptions {
  double gradient_tolerance = 1e-5;  // L2 norm of the gradient
  std::size_t max_iterations = 1000;
  std::size_t workers = 1;
  // when set, one objective-per-iteration history is appended per class
  std::vector<std::vector<double>>* objective_trace = nullptr;
};

/// One-vs-rest logistic regression solved by L-BFGS with backtracking line
/// search (objective decreases monotonically). TrainError on fewer than two
/// distinct labels or non-positive C.
TrainedModel train_logistic_regression(const RowMatrix& X,
                                       const std::vector<std::string>& labels,
                                       const std::vector<std::string>& classes,
                                       double C, std::uint64_t seed,
                                       const LrOptions& opts = {});

}  // namespace lexent
