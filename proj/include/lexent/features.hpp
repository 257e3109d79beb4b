#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexent/datasets.hpp"
#include "lexent/embeddings.hpp"
#include "lexent/matrix.hpp"

namespace lexent {

enum class BasePart { only_x, only_y, diff, sum, concat, mult, sqdiff };

std::string_view to_string(BasePart p);

/// A word-pair feature recipe: an ordered list of base parts whose outputs
/// are concatenated. Output dimensionality is 2d for concat, d otherwise,
/// summed over parts.
struct Composer {
  std::vector<BasePart> parts;
  bool normalize_inputs = false;  // optional per-vector L2 normalization

  std::size_t output_dim(std::size_t d) const;
  std::string name() const;  // "concat+mult"

  /// Parses names like "concat+mult", "diff", "only_y". ConfigError on
  /// unknown base names or empty input.
  static Composer parse(std::string_view name);

  bool operator==(const Composer&) const = default;
};

/// Composes the pair (vx, vy) into `out` (length composer.output_dim(d)).
/// DimensionError when vx and vy differ in length or out is mis-sized.
void compose(std::span<const float> vx, std::span<const float> vy,
             const Composer& composer, std::span<double> out);

std::vector<double> compose(std::span<const float> vx,
                            std::span<const float> vy,
                            const Composer& composer);

/// Composes the selected instances into a feature matrix, one row per index.
/// Embedding lookups follow `policy`.
RowMatrix compose_matrix(const Dataset& dataset,
                         std::span<const std::uint32_t> indices,
                         const EmbeddingTable& table,
                         const LookupPolicy& policy, const Composer& composer,
                         std::size_t workers = 1);

}  // namespace lexent
