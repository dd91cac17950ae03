// AVX2+FMA kernel variants. Translation unit compiled with -mavx2 -mfma;
// callers reach these only through the dispatch table, after the runtime
// CPU check and the p < kFmaModLimit gate.
//
// Modular reduction uses the double/FMA trick: for an exact integer v < 2^52
// and p < 2^25, q = floor(v * (1/p)) is off by at most one, and
// r = fnmadd(q, p, v) = v - q*p is computed exactly (an integer below 2p in
// magnitude), so two conditional corrections land r in [0, p).

#include "kernels_impl.hpp"

#if defined(FPLAB_HAVE_AVX2_TU)

#include <immintrin.h>

namespace fplab::kernels {

namespace {

inline __m256d reduce_mod(__m256d v, __m256d vp, __m256d vinvp) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, vinvp));
  __m256d r = _mm256_fnmadd_pd(q, vp, v);
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), vp));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

struct KahanLanes {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  inline void add(__m256d v) {
    __m256d y = _mm256_sub_pd(v, comp);
    __m256d t = _mm256_add_pd(sum, y);
    comp = _mm256_sub_pd(_mm256_sub_pd(t, sum), y);
    sum = t;
  }
  // Fold the four lane sums (and a scalar tail accumulator) with one more
  // compensated pass.
  double horizontal(double tail_sum, double tail_comp) const {
    alignas(32) double s[4], c[4];
    _mm256_store_pd(s, sum);
    _mm256_store_pd(c, comp);
    double acc = tail_sum, comp_acc = tail_comp;
    for (int k = 0; k < 4; ++k) {
      double y = (s[k] - c[k]) - comp_acc;
      double t = acc + y;
      comp_acc = (t - acc) - y;
      acc = t;
    }
    return acc;
  }
};

}  // namespace

void avx2_axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
                   uint32_t p, uint32_t* out) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinvp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  const __m256d vb = _mm256_set1_pd(static_cast<double>(b));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m256d xd = _mm256_cvtepi32_pd(xi);
    __m256d v = _mm256_fmadd_pd(vb, xd, va);
    __m128i ri = _mm256_cvttpd_epi32(reduce_mod(v, vp, vinvp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), ri);
  }
  if (i < n) scalar_axpb_mod(a, b, x + i, n - i, p, out + i);
}

uint64_t avx2_dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                              const uint32_t* x2, const uint32_t* x3,
                              const uint32_t c[4], std::size_t n, uint32_t p) {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinvp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d c0 = _mm256_set1_pd(static_cast<double>(c[0]));
  const __m256d c1 = _mm256_set1_pd(static_cast<double>(c[1]));
  const __m256d c2 = _mm256_set1_pd(static_cast<double>(c[2]));
  const __m256d c3 = _mm256_set1_pd(static_cast<double>(c[3]));
  const __m256d zero = _mm256_setzero_pd();
  uint64_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_mul_pd(c0, _mm256_cvtepi32_pd(_mm_loadu_si128(
                                      reinterpret_cast<const __m128i*>(x0 + i))));
    v = _mm256_fmadd_pd(c1, _mm256_cvtepi32_pd(_mm_loadu_si128(
                                reinterpret_cast<const __m128i*>(x1 + i))), v);
    v = _mm256_fmadd_pd(c2, _mm256_cvtepi32_pd(_mm_loadu_si128(
                                reinterpret_cast<const __m128i*>(x2 + i))), v);
    v = _mm256_fmadd_pd(c3, _mm256_cvtepi32_pd(_mm_loadu_si128(
                                reinterpret_cast<const __m128i*>(x3 + i))), v);
    __m256d r = reduce_mod(v, vp, vinvp);
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(r, zero, _CMP_EQ_OQ));
    count += static_cast<unsigned>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  if (i < n) count += scalar_dot4_zero_count(x0 + i, x1 + i, x2 + i, x3 + i, c, n - i, p);
  return count;
}

std::pair<double, double> avx2_table_sum(const uint32_t* idx, std::size_t n,
                                         const double* cos_tab, const double* sin_tab) {
  KahanLanes re, im;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    re.add(_mm256_i32gather_pd(cos_tab, vi, 8));
    im.add(_mm256_i32gather_pd(sin_tab, vi, 8));
  }
  auto [tre, tim] = scalar_table_sum(idx + i, n - i, cos_tab, sin_tab);
  return {re.horizontal(tre, 0.0), im.horizontal(tim, 0.0)};
}

std::pair<double, double> avx2_weighted_table_sum(const uint32_t* idx, const double* w,
                                                  std::size_t n, const double* cos_tab,
                                                  const double* sin_tab) {
  KahanLanes re, im;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i vi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    __m256d vw = _mm256_loadu_pd(w + i);
    re.add(_mm256_mul_pd(vw, _mm256_i32gather_pd(cos_tab, vi, 8)));
    im.add(_mm256_mul_pd(vw, _mm256_i32gather_pd(sin_tab, vi, 8)));
  }
  auto [tre, tim] = scalar_weighted_table_sum(idx + i, w + i, n - i, cos_tab, sin_tab);
  return {re.horizontal(tre, 0.0), im.horizontal(tim, 0.0)};
}

uint64_t avx2_sum_squares_u32(const uint32_t* c, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    __m256i odd = _mm256_srli_epi64(v, 32);
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(v, v));
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(odd, odd));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  return total + scalar_sum_squares_u32(c + i, n - i);
}

}  // namespace fplab::kernels

#endif  // FPLAB_HAVE_AVX2_TU
