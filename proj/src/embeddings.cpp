#include "lexent/embeddings.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

#include "lexent/error.hpp"
#include "lexent/util.hpp"

namespace lexent {

namespace {

bool is_pos_suffix(std::string_view token) {
  if (token.size() < 3 || token[token.size() - 2] != '-') return false;
  char c = token.back();
  return c == 'n' || c == 'v' || c == 'j';
}

float parse_float_strict(std::string_view field, std::size_t line_no) {
  float value = 0.0f;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": not a float: '" + std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": non-finite value: '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

std::string LookupPolicy::normalize(std::string_view token) const {
  std::string_view t = token;
  if (strip_pos_suffix && is_pos_suffix(t)) t.remove_suffix(2);
  if (lowercase) return to_lower_ascii(t);
  return std::string(t);
}

EmbeddingFormat embedding_format_from_string(std::string_view s) {
  if (s == "glove_text" || s == "glove") return EmbeddingFormat::glove_text;
  if (s == "word2vec_binary" || s == "word2vec") {
    return EmbeddingFormat::word2vec_binary;
  }
  throw ConfigError("unknown embedding format: '" + std::string(s) + "'");
}

std::string_view to_string(EmbeddingFormat f) {
  return f == EmbeddingFormat::glove_text ? "glove_text" : "word2vec_binary";
}

EmbeddingTable::EmbeddingTable(std::size_t dim, EmbeddingFormat source)
    : dim_(dim), source_(source) {
  if (dim == 0) throw ConfigError("embedding dimension must be positive");
}

void EmbeddingTable::add(std::string token, std::span<const float> vec) {
  if (vec.size() != dim_) {
    throw DimensionError("vector length " + std::to_string(vec.size()) +
                         " does not match table dimension " +
                         std::to_string(dim_));
  }
  auto [it, inserted] =
      index_.emplace(token, static_cast<std::uint32_t>(tokens_.size()));
  if (!inserted) {
    throw DuplicateTokenError("duplicate token: '" + token + "'");
  }
  tokens_.push_back(std::move(token));
  data_.insert(data_.end(), vec.begin(), vec.end());
}

const float* EmbeddingTable::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return nullptr;
  return data_.data() + static_cast<std::size_t>(it->second) * dim_;
}

bool EmbeddingTable::contains(std::string_view token,
                              const LookupPolicy& policy) const {
  return find(policy.normalize(token)) != nullptr;
}

std::vector<float> EmbeddingTable::lookup(std::string_view token,
                                          const LookupPolicy& policy) const {
  std::string key = policy.normalize(token);
  if (const float* v = find(key)) return {v, v + dim_};
  if (policy.oov_mode == OovMode::error) {
    throw OovError("token not in vocabulary: '" + std::string(token) + "'");
  }
  return oov_vector(key);
}

std::vector<float> EmbeddingTable::oov_vector(
    std::string_view normalized_token) const {
  Rng rng(fnv1a64(normalized_token) ^ oov_seed_);
  std::vector<float> out(dim_);
  for (float& c : out) {
    c = static_cast<float>(rng.uniform() * 0.5 - 0.25);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GloVe text: `token SP float SP ... float NL`, no header, every line the
// same arity. dim is inferred from the first line.
// ---------------------------------------------------------------------------

EmbeddingTable EmbeddingTable::load_glove_text(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding file: " + path.string());

  EmbeddingTable table(1, EmbeddingFormat::glove_text);
  bool first_line = true;
  std::size_t expected_fields = 0;
  std::vector<float> vec;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == EOF) break;  // trailing newline
      throw ParseError("line " + std::to_string(line_no) + ": empty line");
    }
    std::vector<std::string_view> fields;
    for (std::string_view f : split_view(line, ' ')) {
      if (!f.empty()) fields.push_back(f);  // tolerate repeated separators
    }
    if (first_line) {
      if (fields.size() < 2) {
        throw ParseError("line 1: expected `token value...`, got " +
                         std::to_string(fields.size()) + " field(s)");
      }
      expected_fields = fields.size();
      table.dim_ = expected_fields - 1;
      first_line = false;
    } else if (fields.size() != expected_fields) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected_fields) + " fields, got " +
                       std::to_string(fields.size()));
    }
    vec.clear();
    for (std::size_t i = 1; i < fields.size(); ++i) {
      vec.push_back(parse_float_strict(fields[i], line_no));
    }
    table.add(std::string(fields[0]), vec);
  }
  if (in.bad()) throw IoError("read failed: " + path.string());
  if (first_line) throw ParseError("empty embedding file: " + path.string());
  return table;
}

void EmbeddingTable::save_glove_text(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  char buf[64];
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    out << tokens_[i];
    std::span<const float> v = vector_at(i);
    for (float c : v) {
      // shortest round-trip representation: reload is bit-exact
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
      out << ' ';
      out.write(buf, ptr - buf);
      (void)ec;
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

// ---------------------------------------------------------------------------
// word2vec binary: ASCII header `<vocab> SP <dim> NL`, then per record the
// token bytes terminated by a space, dim little-endian float32s, and an
// optional newline.
// ---------------------------------------------------------------------------

namespace {

class ByteReader {
 public:
  explicit ByteReader(const std::filesystem::path& path)
      : in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open embedding file: " + path.string());
  }

  std::size_t offset() const { return offset_; }

  int peek() { return in_.peek(); }

  int get() {
    int c = in_.get();
    if (c != EOF) ++offset_;
    return c;
  }

  void read_exact(void* dst, std::size_t len) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(len));
    std::size_t got = static_cast<std::size_t>(in_.gcount());
    offset_ += got;
    if (got != len) {
      throw ParseError("truncated file at byte offset " +
                       std::to_string(offset_));
    }
  }

 private:
  std::ifstream in_;
  std::size_t offset_ = 0;
};

float load_le_float(const unsigned char* p) {
  std::uint32_t bits = static_cast<std::uint32_t>(p[0]) |
                       (static_cast<std::uint32_t>(p[1]) << 8) |
                       (static_cast<std::uint32_t>(p[2]) << 16) |
                       (static_cast<std::uint32_t>(p[3]) << 24);
  return std::bit_cast<float>(bits);
}

}  // namespace

EmbeddingTable EmbeddingTable::load_word2vec_binary(
    const std::filesystem::path& path) {
  ByteReader reader(path);

  std::string header;
  while (true) {
    int c = reader.get();
    if (c == EOF) {
      throw ParseError("truncated file at byte offset " +
                       std::to_string(reader.offset()) + " (header)");
    }
    if (c == '\n') break;
    header.push_back(static_cast<char>(c));
    if (header.size() > 64) {
      throw ParseError("header longer than 64 bytes; not word2vec binary");
    }
  }
  std::uint64_t vocab_count = 0;
  std::uint64_t dim = 0;
  {
    const char* first = header.data();
    const char* last = header.data() + header.size();
    auto r1 = std::from_chars(first, last, vocab_count);
    if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') {
      throw ParseError("malformed header: '" + header + "'");
    }
    auto r2 = std::from_chars(r1.ptr + 1, last, dim);
    if (r2.ec != std::errc{} || r2.ptr != last) {
      throw ParseError("malformed header: '" + header + "'");
    }
  }
  if (dim == 0) throw ParseError("header declares zero dimension");

  EmbeddingTable table(dim, EmbeddingFormat::word2vec_binary);
  std::vector<unsigned char> raw(dim * 4);
  std::vector<float> vec(dim);

  for (std::uint64_t rec = 0; rec < vocab_count; ++rec) {
    std::string token;
    while (true) {
      int c = reader.get();
      if (c == EOF) {
        throw ParseError("truncated file at byte offset " +
                         std::to_string(reader.offset()) + " (record " +
                         std::to_string(rec + 1) + ")");
      }
      if (c == ' ') break;
      token.push_back(static_cast<char>(c));
      if (token.size() > 4096) {
        throw ParseError("token longer than 4096 bytes at offset " +
                         std::to_string(reader.offset()));
      }
    }
    if (token.empty()) {
      throw ParseError("empty token at byte offset " +
                       std::to_string(reader.offset()));
    }
    reader.read_exact(raw.data(), raw.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
      float f = load_le_float(raw.data() + i * 4);
      if (!std::isfinite(f)) {
        throw ParseError("non-finite value in record " +
                         std::to_string(rec + 1) + " near byte offset " +
                         std::to_string(reader.offset()));
      }
      vec[i] = f;
    }
    table.add(std::move(token), vec);
    if (reader.peek() == '\n') reader.get();
  }
  if (reader.peek() != EOF) {
    throw ParseError("trailing data at byte offset " +
                     std::to_string(reader.offset()) +
                     "; header declared " + std::to_string(vocab_count) +
                     " records");
  }
  return table;
}

EmbeddingFormat EmbeddingTable::detect_format(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open embedding file: " + path.string());
  std::string first_line;
  if (!std::getline(in, first_line)) {
    throw ParseError("empty embedding file: " + path.string());
  }
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  const char* first = first_line.data();
  const char* last = first_line.data() + first_line.size();
  auto r1 = std::from_chars(first, last, a);
  if (r1.ec == std::errc{} && r1.ptr != last && *r1.ptr == ' ') {
    auto r2 = std::from_chars(r1.ptr + 1, last, b);
    if (r2.ec == std::errc{} && r2.ptr == last) {
      return EmbeddingFormat::word2vec_binary;
    }
  }
  return EmbeddingFormat::glove_text;
}

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  return detect_format(path) == EmbeddingFormat::word2vec_binary
             ? load_word2vec_binary(path)
             : load_glove_text(path);
}

}  // namespace lexent
