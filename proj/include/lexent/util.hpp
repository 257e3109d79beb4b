#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexent {

// ---------------------------------------------------------------------------
// Deterministic RNG. All randomness in the library flows through this so that
// results are identical across platforms and standard-library versions
// (std::shuffle and std::uniform_*_distribution are implementation-defined).
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_); }

  /// Uniform draw in [0, 1), 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform draw in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Stable 64-bit content hashing (FNV-1a). Used for provenance and cache keys;
// must never depend on std::hash.
// ---------------------------------------------------------------------------

class Hasher64 {
 public:
  Hasher64& update(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Hasher64& update(std::string_view s) { return update(s.data(), s.size()); }
  Hasher64& update_u64(std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    return update(b, 8);
  }
  std::uint64_t digest() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  return Hasher64{}.update(s).digest();
}

std::string to_hex(std::uint64_t v);

// ---------------------------------------------------------------------------
// Small string helpers (ASCII only; tokens and labels are byte strings).
// ---------------------------------------------------------------------------

std::vector<std::string_view> split_view(std::string_view s, char delim);
std::string_view trim_view(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// ---------------------------------------------------------------------------
// File helpers.
// ---------------------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path);

/// Writes to a sibling temp file then renames, so readers never observe a
/// partial file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace lexent
