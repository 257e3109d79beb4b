#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexent {

enum class Family { lr, lin_svm, rbf_svm, mlp, ksim_svm };

Family family_from_string(std::string_view s);
std::string_view to_string(Family f);

/// One grid point: (axis name, value) pairs in axis declaration order.
using HyperPoint = std::vector<std::pair<std::string, double>>;

double hyper_get(const HyperPoint& point, std::string_view name);
std::string hyper_to_string(const HyperPoint& point);

struct HyperGrid {
  Family family = Family::lr;
  // axes in declared order; enumeration runs the last axis fastest
  std::vector<std::pair<std::string, std::vector<double>>> axes;

  /// The per-family default grids:
  ///   lr        C in {2^-1, 2^1, 2^3, 2^5}
  ///   lin_svm   C in {2^-5, 2^-3, 2^-1, 2^1}
  ///   rbf_svm   C in {2^1, 2^3, 2^5, 2^7} x gamma in {2^-7, 2^-5, 2^-3, 2^-1}
  ///   mlp       hidden in {50, 100}
  ///   ksim_svm  C in {2^-7, 2^-5, ..., 2^7} x alpha in {0.0, 0.1, ..., 1.0}
  static HyperGrid defaults(Family family);

  std::size_t size() const;
  HyperPoint point(std::size_t index) const;
};

}  // namespace lexent
