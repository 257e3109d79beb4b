// Backend selection. Runs once at first use; LEXENT_SIMD overrides the CPU
// probe (unknown or unavailable values fall back to the probe result).

#include <cstdlib>
#include <cstring>

#include "lexent/simd.hpp"

namespace lexent::simd {

namespace detail {
extern const Ops scalar_ops;
const Ops* avx2_ops();
const Ops* neon_ops();
}  // namespace detail

namespace {

const Ops* table_for(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &detail::scalar_ops;
    case Backend::avx2:
#if defined(__x86_64__) || defined(__i386__)
      if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return detail::avx2_ops();
      }
#endif
      return nullptr;
    case Backend::neon:
      return detail::neon_ops();
  }
  return nullptr;
}

struct Active {
  const Ops* table;
  Backend backend;
};

Active probe() {
  if (const char* env = std::getenv("LEXENT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return {&detail::scalar_ops, Backend::scalar};
    if (std::strcmp(env, "avx2") == 0) {
      if (const Ops* t = table_for(Backend::avx2)) return {t, Backend::avx2};
    }
    if (std::strcmp(env, "neon") == 0) {
      if (const Ops* t = table_for(Backend::neon)) return {t, Backend::neon};
    }
  }
  if (const Ops* t = table_for(Backend::avx2)) return {t, Backend::avx2};
  if (const Ops* t = table_for(Backend::neon)) return {t, Backend::neon};
  return {&detail::scalar_ops, Backend::scalar};
}

Active& active() {
  static Active a = probe();
  return a;
}

}  // namespace

Backend active_backend() { return active().backend; }

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

bool force_backend(Backend b) {
  const Ops* t = table_for(b);
  if (t == nullptr) return false;
  active() = {t, b};
  return true;
}

const Ops& ops() { return *active().table; }

const Ops* backend_ops(Backend b) { return table_for(b); }

}  // namespace lexent::simd
