#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lexent/learners/model.hpp"
#include "lexent/matrix.hpp"

namespace lexent {

/// A word pair presented to the pair kernel: the two raw word vectors.
struct PairKernelInput {
  std::span<const double> x_vec;
  std::span<const double> y_vec;
};

/// Pair similarity kernel:
///   ((1 + cos(x1, x2)) / 2)^alpha * ((1 + cos(y1, y2)) / 2)^(1 - alpha)
/// Value in [0, 1]; symmetric; invariant to positive rescaling of the inputs.
/// KernelError on zero vectors (cosine undefined).
double ksim_kernel(const PairKernelInput& p1, const PairKernelInput& p2,
                   double alpha);

// ---------------------------------------------------------------------------
// Training-side kernel matrices. Rows are served as float32: enough for a
// dual solver at eps 1e-3, half the memory of doubles, and identical values
// whether a row is cached or recomputed.
// ---------------------------------------------------------------------------

class KernelMatrix {
 public:
  virtual ~KernelMatrix() = default;
  virtual std::size_t size() const = 0;
  /// Kernel row i over all training points. The span stays valid until the
  /// next row() call on the same object (LRU implementations may evict).
  virtual std::span<const float> row(std::size_t i) const = 0;
};

class DenseKernelMatrix final : public KernelMatrix {
 public:
  DenseKernelMatrix(std::size_t n, std::vector<float> data);
  std::size_t size() const override { return n_; }
  std::span<const float> row(std::size_t i) const override {
    return {data_.data() + i * n_, n_};
  }
  const std::vector<float>& storage() const { return data_; }

 private:
  std::size_t n_;
  std::vector<float> data_;
};

/// Per-slot ksim similarities: sx, sy hold (1 + cos)/2 for the x-slot and
/// y-slot of every training pair combination. alpha-independent, so one base
/// serves the whole (C, alpha) grid.
struct KsimBase {
  std::size_t n = 0;
  std::vector<float> sx;
  std::vector<float> sy;
};

/// Computes the n x n Gram matrix for linear or rbf kernels over X's rows.
std::shared_ptr<DenseKernelMatrix> compute_gram(const RowMatrix& X,
                                                const KernelConfig& kernel,
                                                std::size_t workers = 1);

/// X rows are pairs [x | y] of width 2d. KernelError on zero slot vectors.
std::shared_ptr<KsimBase> compute_ksim_base(const RowMatrix& pairs,
                                            std::size_t workers = 1);

std::shared_ptr<DenseKernelMatrix> ksim_gram_from_base(const KsimBase& base,
                                                       double alpha,
                                                       std::size_t workers = 1);

// ---------------------------------------------------------------------------
// Solver.
// ---------------------------------------------------------------------------

struct SvmOptions {
  double epsilon = 1e-3;           // max KKT violation at convergence
  std::size_t max_iterations = 0;  // 0 -> max(10^7, 100 n)
  std::size_t workers = 1;
};

struct BinarySvmSolution {
  std::vector<double> alpha;
  double rho = 0.0;  // decision = sum coef k(.) - rho
  std::size_t iterations = 0;
  bool non_psd = false;  // a non-positive curvature pair was clamped
  bool converged = false;
};

/// Two-variable working-set dual solver (second-order pair selection).
/// y holds ±1. Stops when the maximal KKT violation drops to eps.
BinarySvmSolution smo_solve(const KernelMatrix& K,
                            std::span<const signed char> y, double C,
                            double eps, std::size_t max_iterations);

/// One-vs-rest soft-margin SVM. `shared_kernel` lets callers reuse a Gram
/// matrix across C values; when null one is computed internally. For
/// KernelKind::precomputed a matrix is required and the model keeps train
/// indices instead of support vectors (predict via predict_svm_precomputed).
TrainedModel train_svm(const RowMatrix& X, const std::vector<std::string>& labels,
                       const std::vector<std::string>& classes, double C,
                       const KernelConfig& kernel, std::uint64_t seed,
                       const SvmOptions& opts = {},
                       std::shared_ptr<const KernelMatrix> shared_kernel = nullptr);

}  // namespace lexent
