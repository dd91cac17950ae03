#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace fplab::kernels {

// The double/FMA reduction in the SIMD kernels needs every dot-product term
// below 2^50 so the 4-term accumulator stays an exact integer under 2^52.
// Moduli at or above this bound fall back to the scalar kernels.
inline constexpr uint32_t kFmaModLimit = 1u << 25;

void scalar_axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
                     uint32_t p, uint32_t* out);
uint64_t scalar_dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                                const uint32_t* x2, const uint32_t* x3,
                                const uint32_t c[4], std::size_t n, uint32_t p);
std::pair<double, double> scalar_table_sum(const uint32_t* idx, std::size_t n,
                                           const double* cos_tab, const double* sin_tab);
std::pair<double, double> scalar_weighted_table_sum(const uint32_t* idx, const double* w,
                                                    std::size_t n, const double* cos_tab,
                                                    const double* sin_tab);
uint64_t scalar_sum_squares_u32(const uint32_t* c, std::size_t n);

#if defined(FPLAB_HAVE_AVX2_TU)
void avx2_axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
                   uint32_t p, uint32_t* out);
uint64_t avx2_dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                              const uint32_t* x2, const uint32_t* x3,
                              const uint32_t c[4], std::size_t n, uint32_t p);
std::pair<double, double> avx2_table_sum(const uint32_t* idx, std::size_t n,
                                         const double* cos_tab, const double* sin_tab);
std::pair<double, double> avx2_weighted_table_sum(const uint32_t* idx, const double* w,
                                                  std::size_t n, const double* cos_tab,
                                                  const double* sin_tab);
uint64_t avx2_sum_squares_u32(const uint32_t* c, std::size_t n);
#endif

}  // namespace fplab::kernels
