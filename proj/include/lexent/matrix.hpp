#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lexent {

/// Dense row-major matrix of doubles. The workhorse container for feature
/// matrices, network weights and support vectors.
struct RowMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RowMatrix() = default;
  RowMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  std::span<double> row(std::size_t i) {
    return {data.data() + i * cols, cols};
  }
  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }

  bool operator==(const RowMatrix&) const = default;
};

}  // namespace lexent
