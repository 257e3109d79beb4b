#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexent {

enum class EmbeddingFormat { glove_text, word2vec_binary };

enum class OovMode { deterministic_random, error };

/// Token normalization and out-of-vocabulary behaviour applied at lookup
/// time. The table itself stores tokens exactly as read from the file.
struct LookupPolicy {
  bool strip_pos_suffix = true;  // "cloak-n" -> "cloak" (-n, -v, -j)
  bool lowercase = false;
  OovMode oov_mode = OovMode::deterministic_random;

  std::string normalize(std::string_view token) const;
};

EmbeddingFormat embedding_format_from_string(std::string_view s);
std::string_view to_string(EmbeddingFormat f);

/// Immutable after load; concurrent lookups are safe.
class EmbeddingTable {
 public:
  static EmbeddingTable load_glove_text(const std::filesystem::path& path);
  static EmbeddingTable load_word2vec_binary(const std::filesystem::path& path);
  /// Sniffs the format: a first line of exactly two ASCII integers means
  /// word2vec binary.
  static EmbeddingTable load(const std::filesystem::path& path);
  static EmbeddingFormat detect_format(const std::filesystem::path& path);

  void save_glove_text(const std::filesystem::path& path) const;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return tokens_.size(); }
  EmbeddingFormat source() const { return source_; }

  std::uint64_t oov_seed() const { return oov_seed_; }
  void set_oov_seed(std::uint64_t seed) { oov_seed_ = seed; }

  /// Exact-key probe, no policy applied. nullptr when absent.
  const float* find(std::string_view token) const;

  std::span<const float> vector_at(std::size_t index) const {
    return {data_.data() + index * dim_, dim_};
  }
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool contains(std::string_view token, const LookupPolicy& policy) const;

  /// In-vocabulary tokens return the stored vector; OOV tokens either get a
  /// deterministic random vector (components uniform in [-0.25, 0.25], stream
  /// seeded by hash64(normalized token) XOR oov_seed) or raise OovError.
  std::vector<float> lookup(std::string_view token,
                            const LookupPolicy& policy) const;

  /// The deterministic OOV vector for an already-normalized token.
  std::vector<float> oov_vector(std::string_view normalized_token) const;

  // Builder interface used by the parsers and by tests constructing small
  // tables by hand. add() rejects duplicates and wrong dimensions.
  EmbeddingTable(std::size_t dim, EmbeddingFormat source);
  void add(std::string token, std::span<const float> vec);

 private:
  std::size_t dim_ = 0;
  EmbeddingFormat source_ = EmbeddingFormat::glove_text;
  std::uint64_t oov_seed_ = 0;
  std::vector<std::string> tokens_;
  std::vector<float> data_;

  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>>
      index_;
};

}  // namespace lexent
