#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

namespace fplab::kernels {

// Counting and summation inner loops, provided as scalar reference kernels
// plus AVX2 variants selected at runtime. The scalar kernels are the
// semantics; every SIMD variant must agree with them exactly (integer
// kernels) or to accumulation-order rounding (compensated float sums), which
// the kernel test suite enforces.

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_available(Backend b);
// Backend that dispatch currently resolves to.
Backend active_backend();
// Pin a backend (throws fplab::DomainError if unavailable). Used by the
// equivalence tests and the FPLAB_KERNELS env override; reset_backend()
// returns to auto-detection.
void force_backend(Backend b);
void reset_backend();

// out[i] = (a + b * x[i]) mod p. Inputs must be canonical residues.
void axpb_mod(uint32_t a, uint32_t b, const uint32_t* x, std::size_t n,
              uint32_t p, uint32_t* out);

// Number of indices i with (c0 x0[i] + c1 x1[i] + c2 x2[i] + c3 x3[i]) == 0
// mod p: the point-plane incidence inner loop over a point SoA.
uint64_t dot4_zero_count(const uint32_t* x0, const uint32_t* x1,
                         const uint32_t* x2, const uint32_t* x3,
                         const uint32_t c[4], std::size_t n, uint32_t p);

// Compensated (Kahan) sum of (cos_tab[idx[i]], sin_tab[idx[i]]).
std::pair<double, double> table_sum(const uint32_t* idx, std::size_t n,
                                    const double* cos_tab, const double* sin_tab);

// As table_sum with per-term weights w[i].
std::pair<double, double> weighted_table_sum(const uint32_t* idx, const double* w,
                                             std::size_t n, const double* cos_tab,
                                             const double* sin_tab);

// Sum of c[i]^2 in 64-bit. Callers keep n * max(c)^2 below 2^64; the counting
// layers satisfy this by construction at desk scale.
uint64_t sum_squares_u32(const uint32_t* c, std::size_t n);

}  // namespace fplab::kernels
