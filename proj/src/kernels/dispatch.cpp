#include "fplab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "fplab/errors.hpp"
#include "kernels_impl.hpp"

namespace fplab::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FPLAB_HAVE_AVX2_TU) && defined(__x86_64__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("FPLAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<int> g_forced{-1};  // -1 = auto

Backend resolve() {
  int f = g_forced.load(std::memory_order_relaxed);
  if (f >= 0) return static_cast<Backend>(f);
  static const Backend detected = detect();
  return detected;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

Backend active_backend() { return resolve(); }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw DomainError(std::string("kernel backend unavailable: ") + backend_name(b));
  g_forced.store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { g_forced.store(-1, std::memory_order_relaxed); }

void axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
              uint32_t p, uint32_t* out) {
#if defined(FPLAB_HAVE_AVX2_TU)
  if (resolve() == Backend::avx2 && p < kFmaModLimit) {
    avx2_axpb_mod(a, b, x, n, p, out);
    return;
  }
#endif
  scalar_axpb_mod(a, b, x, n, p, out);
}

uint64_t dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                         const uint32_t* x2, const uint32_t* x3,
                         const uint32_t c[4], std::size_t n, uint32_t p) {
#if defined(FPLAB_HAVE_AVX2_TU)
  if (resolve() == Backend::avx2 && p < kFmaModLimit)
    return avx2_dot4_zero_count(x0, x1, x2, x3, c, n, p);
#endif
  return scalar_dot4_zero_count(x0, x1, x2, x3, c, n, p);
}

std::pair<double, double> table_sum(const uint32_t* idx, std::size_t n,
                                    const double* cos_tab, const double* sin_tab) {
#if defined(FPLAB_HAVE_AVX2_TU)
  if (resolve() == Backend::avx2) return avx2_table_sum(idx, n, cos_tab, sin_tab);
#endif
  return scalar_table_sum(idx, n, cos_tab, sin_tab);
}

std::pair<double, double> weighted_table_sum(const uint32_t* idx, const double* w,
                                             std::size_t n, const double* cos_tab,
                                             const double* sin_tab) {
#if defined(FPLAB_HAVE_AVX2_TU)
  if (resolve() == Backend::avx2)
    return avx2_weighted_table_sum(idx, w, n, cos_tab, sin_tab);
#endif
  return scalar_weighted_table_sum(idx, w, n, cos_tab, sin_tab);
}

uint64_t sum_squares_u32(const uint32_t* c, std::size_t n) {
#if defined(FPLAB_HAVE_AVX2_TU)
  if (resolve() == Backend::avx2) return avx2_sum_squares_u32(c, n);
#endif
  return scalar_sum_squares_u32(c, n);
}

}  // namespace fplab::kernels
