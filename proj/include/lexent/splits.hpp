#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexent/datasets.hpp"

namespace lexent {

enum class Protocol { rand, lex, ood };

Protocol protocol_from_string(std::string_view s);
std::string_view to_string(Protocol p);

struct SplitSpec {
  Protocol protocol = Protocol::rand;
  std::uint64_t seed = 0;
  std::array<double, 3> ratios = {0.70, 0.05, 0.25};  // train, validation, test

  void validate() const;  // ratios nonnegative, sum to 1 within 1e-9
};

/// Index sets into the dataset's instance list. train/validation/test are
/// pairwise disjoint; `discarded` holds cross-vocabulary instances dropped by
/// the lexical protocol.
struct Fold {
  std::vector<std::uint32_t> train;
  std::vector<std::uint32_t> validation;
  std::vector<std::uint32_t> test;
  std::optional<std::string> held_out_domain;
  std::optional<std::string> validation_domain;
  std::vector<std::uint32_t> discarded;
};

Fold split_random(const Dataset& dataset, const SplitSpec& spec);
Fold split_lexical(const Dataset& dataset, const SplitSpec& spec);
/// One fold per domain in sorted domain order.
std::vector<Fold> split_out_of_domain(const Dataset& dataset,
                                      const SplitSpec& spec);

/// Protocol dispatch; RAND and LEX yield a single fold.
std::vector<Fold> make_folds(const Dataset& dataset, const SplitSpec& spec);

void save_folds(const SplitSpec& spec, const std::vector<Fold>& folds,
                const std::filesystem::path& path);
std::pair<SplitSpec, std::vector<Fold>> load_folds(
    const std::filesystem::path& path);

std::uint64_t fold_hash(const Fold& fold);

}  // namespace lexent
