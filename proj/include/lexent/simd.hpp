#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>

namespace lexent::simd {

// ---------------------------------------------------------------------------
// Vector kernels behind runtime dispatch. Scalar implementations are the
// reference semantics; AVX2 (x86-64) and NEON (aarch64) variants are selected
// once at startup when the CPU supports them. The environment variable
// LEXENT_SIMD={scalar,avx2,neon} overrides the choice.
//
// Element-wise kernels produce bit-identical results across backends (all
// backends round each multiply and add separately). Reductions (dot, sum,
// squared distance) reassociate and may differ in the last few ulps; the
// equivalence tests pin the tolerance.
// ---------------------------------------------------------------------------

enum class Backend { scalar, avx2, neon };

struct Ops {
  double (*dot_f32)(const float*, const float*, std::size_t);
  double (*dot_f64)(const double*, const double*, std::size_t);
  double (*sqdist_f32)(const float*, const float*, std::size_t);
  double (*sqdist_f64)(const double*, const double*, std::size_t);
  double (*sum_f64)(const double*, std::size_t);
  void (*mul_f64)(const double*, const double*, double*, std::size_t);
  void (*add_f64)(const double*, const double*, double*, std::size_t);
  void (*sub_f64)(const double*, const double*, double*, std::size_t);
  void (*sqdiff_f64)(const double*, const double*, double*, std::size_t);
  void (*axpy_f64)(double, const double*, double*, std::size_t);
  void (*scale_f64)(double*, double, std::size_t);
  void (*widen_f32)(const float*, double*, std::size_t);
};

Backend active_backend();
const char* backend_name(Backend b);

/// Switches the active backend; returns false (and leaves the current one
/// active) when the requested backend is unavailable on this host. Intended
/// for tests and the CLI `--simd` flag; not thread-safe against concurrent
/// kernel calls.
bool force_backend(Backend b);

/// Active dispatch table.
const Ops& ops();

/// Per-backend table, or nullptr when unavailable. For equivalence tests.
const Ops* backend_ops(Backend b);

// ---- span convenience wrappers --------------------------------------------

inline double dot(std::span<const float> a, std::span<const float> b) {
  assert(a.size() == b.size());
  return ops().dot_f32(a.data(), b.data(), a.size());
}
inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return ops().dot_f64(a.data(), b.data(), a.size());
}
inline double squared_distance(std::span<const float> a,
                               std::span<const float> b) {
  assert(a.size() == b.size());
  return ops().sqdist_f32(a.data(), b.data(), a.size());
}
inline double squared_distance(std::span<const double> a,
                               std::span<const double> b) {
  assert(a.size() == b.size());
  return ops().sqdist_f64(a.data(), b.data(), a.size());
}
inline double sum(std::span<const double> x) {
  return ops().sum_f64(x.data(), x.size());
}
inline void multiply(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  ops().mul_f64(a.data(), b.data(), out.data(), a.size());
}
inline void add(std::span<const double> a, std::span<const double> b,
                std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  ops().add_f64(a.data(), b.data(), out.data(), a.size());
}
/// out = a - b
inline void subtract(std::span<const double> a, std::span<const double> b,
                     std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  ops().sub_f64(a.data(), b.data(), out.data(), a.size());
}
/// out = (a - b) * (a - b)
inline void squared_difference(std::span<const double> a,
                               std::span<const double> b,
                               std::span<double> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  ops().sqdiff_f64(a.data(), b.data(), out.data(), a.size());
}
/// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  ops().axpy_f64(alpha, x.data(), y.data(), x.size());
}
inline void scale(std::span<double> x, double alpha) {
  ops().scale_f64(x.data(), alpha, x.size());
}
inline void widen(std::span<const float> in, std::span<double> out) {
  assert(in.size() == out.size());
  ops().widen_f32(in.data(), out.data(), in.size());
}

inline double norm(std::span<const float> a) { return std::sqrt(dot(a, a)); }
inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Cosine similarity; returns 0 when either vector has zero norm (callers
/// that must reject zero vectors check norms themselves).
template <typename T>
double cosine(std::span<const T> a, std::span<const T> b) {
  double na = dot(a, a);
  double nb = dot(b, b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace lexent::simd
